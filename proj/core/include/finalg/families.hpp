#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "finalg/repmod.hpp"
#include "finalg/twisted.hpp"

namespace finalg {

// A quiver-presented S-split algebra bundled with its split structure.
struct AugmentedAlgebra {
    PresentedAlgebra pres;
    AlgebraPtr s;
    RRing rring;  // over s, augmented by killing positive-length paths

    AlgebraPtr ptr() const { return rring.alg; }
};

// Kronecker algebra K_n = kQ_{n,0} (or its opposite kQ_{0,n}), with
// optional arrow degrees. Arrows are labeled c1..cn (b1..bn when op).
AugmentedAlgebra kronecker(int n, const std::vector<int>& degrees = {}, bool op = false);

// Green algebra G_k on Q_{n,n} (k = 2n) or Q_{n,n-1} (k = 2n-1) with
// c_j b_i = 0 for j <= i and b_i c_j = 0 for i < j; G_0 = S.
AugmentedAlgebra green(int k);

// One factor of a generalized Green product on two vertices.
struct GreenFactor {
    int arrows = 1;
    bool op = false;
    std::vector<int> degrees;  // empty: all zero
};

// Iterated twisted tensor product over S of two-vertex Kronecker factors,
// folded right to left (the leftmost factor is the outermost A).
ProductAlgebra generalized_green(const std::vector<GreenFactor>& factors);

// N-vertex single-pair factor: `count` arrows from vertex i to j (1-based)
// of degree d.
struct KijFactor {
    int i = 1, j = 2, d = 0;
    long count = 1;
};
AugmentedAlgebra kij_algebra(int vertices, const KijFactor& f);
ProductAlgebra generalized_green_n(int vertices, const std::vector<KijFactor>& factors);

// E_[p,q;delta] = K_p^op (x)v K_1 (x)v K_1^op[delta] (x)v K_q.
ProductAlgebra e_family(int p, int q, int delta);

// Subspace family F = {V_1..V_m; W_1..W_m} inside C = Q^n with
// dim V_i = k and dim W_i = n - k.
struct SubspaceFamily {
    int n = 0, m = 0, k = 0;
    std::vector<RatMatrix> v;  // n x k, full rank
    std::vector<RatMatrix> w;  // n x (n-k), full rank

    void check() const;
    // t_ij = dim(V_i cap W_j)
    std::vector<std::vector<int>> t_table() const;
};

struct RFamilyAlgebra {
    SubspaceFamily fam;
    PresentedAlgebra pres;  // on Q_{n,m}; arrows c1..cn then b1..bm
    AlgebraPtr s;
    RRing rring;

    AlgebraPtr ptr() const { return rring.alg; }
    LinComb c_arrow(int l) const { return pres.arrow_elem(l); }
    LinComb b_arrow(int i) const { return pres.arrow_elem(fam.n + i); }
    // the element of C = span(c_1..c_n) with the given coordinates
    LinComb c_elem(const LinComb& coords) const;
};

// kQ_{n,m} / I_F at truncation bound 4; verifies the component dimensions
//   e1Re1 = 1 + m(n-k), e1Re2 = m, e2Re1 = n + mk(n-k), e2Re2 = 1 + mk.
RFamilyAlgebra r_family(const SubspaceFamily& f);

struct GammaQuiver {
    int m = 0;
    std::vector<std::vector<int>> t;
    bool has_loop = false;        // some t_ii != 0
    std::optional<Quiver> quiver; // present when loop-free; vertices b1..bm, v1..vm
};
GammaQuiver gamma_quiver(const SubspaceFamily& f);

struct GldimVerdict {
    bool finite = false;
    int value = -1;    // l + 2 when finite
    int longest = -1;  // longest path in Gamma when finite
};
GldimVerdict gldim_by_criterion(const SubspaceFamily& f);

// The m-subspace family with n = m, k = 1, V_i = <a_i> and
// W_i = <a_n..a_{i+1}, a_i - a_1, .., a_2 - a_1>; requires m >= 2.
SubspaceFamily kk_family(int m);

// Seeded family resampled until every V_i cap W_j = 0 (generic position).
SubspaceFamily random_family(int n, int m, int k, std::uint64_t seed);

// Deterministic vector avoiding finitely many proper subspaces: scans
// Vandermonde points (1, t, t^2, ...) until all constraints hold.
LinComb generic_vector_avoiding(int n, const std::vector<RatMatrix>& avoid_spans);

struct TwProdReconstruction {
    SubspaceFamily renumbered;  // V_m cap W_i = 0 for all i
    RFamilyAlgebra target;      // R_F of the renumbered family
    ProductAlgebra kv1;         // K(V_m) (x)v_S K_1^op
    ProductAlgebra product;     // kv1 (x)v_{K(V_m)} R_G
    RatMatrix iso;              // target -> product, bijective homomorphism
};

// Theorem-level constructive check: R_F as a twisted tensor product of
// (K(V_m) (x)v_S K_1^op) and R_G over K(V_m), with the arrow-matching
// isomorphism verified. Requires Gamma_F acyclic.
TwProdReconstruction twprod_reconstruction(const SubspaceFamily& f);

}  // namespace finalg
