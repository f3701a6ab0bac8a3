#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/quiver.hpp"

namespace finalg {

// Checks that m (dim(to) x dim(from)) is a unital algebra homomorphism,
// degree 0 and a chain map (missing differentials act as zero). Returns
// a description of the first violation, or nullopt when m is a morphism.
std::optional<std::string> check_algebra_hom(const FinAlgebra& from,
                                             const FinAlgebra& to,
                                             const RatMatrix& m);

// An R-ring: an algebra A together with a structure morphism eps: R -> A
// and optionally an augmentation pi: A -> R with pi . eps = id_R.
struct RRing {
    AlgebraPtr alg;
    AlgebraPtr base;
    RatMatrix eps;               // dim(A) x dim(R)
    std::optional<RatMatrix> pi; // dim(R) x dim(A)

    void check() const;  // throws on violation
    bool augmented() const { return pi.has_value(); }
    LinComb eps_of(const LinComb& r) const { return eps.apply(r); }
    LinComb pi_of(const LinComb& a) const;
};

// The balanced tensor product A (x)_R B as a quotient of A (x)_Q B by
// a*eps_A(r) (x) b - a (x) eps_B(r)*b. Elements are held either in full
// tensor coordinates i*dimB + j or in quotient coordinates (complement
// coordinate pairs under the relation RREF).
struct TensorSpace {
    int dimA = 0, dimB = 0;
    std::vector<std::pair<int, int>> basis;  // complement pairs (i, j)
    Echelon relations;
    std::vector<int> full_to_q;  // -1 for non-basis coordinates

    int full_coord(int i, int j) const { return i * dimB + j; }
    int dim() const { return static_cast<int>(basis.size()); }

    LinComb reduce_full(const LinComb& full) const { return relations.reduce(full); }
    LinComb to_quotient(const LinComb& full) const;
    LinComb from_quotient(const LinComb& qv) const;
};

TensorSpace tensor_over_R(const RRing& a, const RRing& b);

// R-bilinear map tau: B (x)_R A -> A (x)_R B held as reduced images of the
// full tensor coordinates of B (x) A.
struct TwistingMap {
    int dimA = 0, dimB = 0;
    std::vector<LinComb> image;  // index j*dimA + i; values in reduced A(x)B coords

    LinComb apply_full(const LinComb& ba_full) const;
};

// The special twisting map of an augmented pair:
//   v(b (x) a) = eps_A(pi_B(b))a (x) 1 + 1 (x) b eps_B(pi_A(a))
//                - eps_A(pi_B(b)) (x) eps_B(pi_A(a)).
TwistingMap canonical_v(const RRing& a, const RRing& b, const TensorSpace& ab);

struct TwistReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Exhaustive verification: well-definedness on the balanced quotient,
// R-bimodule property, the unit-fixing conditions, the hexagon on all
// basis quadruples (b, b', a, a'), and the chain-map condition when
// differentials are present.
TwistReport verify_twisting(const RRing& a, const RRing& b, const TwistingMap& tau,
                            const TensorSpace& ab, const TensorSpace& ba);

// B -> I_A (x)_R B of degree +1, stored as reduced full A(x)B coordinates
// per basis element of B.
struct NablaDeformation {
    std::vector<LinComb> image;  // size dimB

    static NablaDeformation zero(int dim_b);
};

struct ProductAlgebra {
    FinAlgebra algebra;  // C = A (x)^tau_R B
    TensorSpace space;
    AlgebraPtr factor_a, factor_b, base;
    RatMatrix embed_a;  // dim(C) x dim(A), the morphism i_A
    RatMatrix embed_b;
    std::optional<RatMatrix> project_b;  // p_B: C -> B when A is augmented
    RatMatrix eps_c;                     // i_A . eps_A
    std::optional<RatMatrix> pi_c;       // pi_A (x) pi_B when both augmented

    LinComb tensor_elem(const LinComb& a, const LinComb& b) const;  // quotient coords
};

// Twisted tensor product with multiplication mu_tau. Verifies the twisting
// axioms (unless pre-verified by the caller), re-checks associativity via
// algebra validation, and checks i_A, i_B are injective morphisms. When
// the factors carry differentials the product gets the standard tensor
// differential (the nabla = 0 case).
ProductAlgebra twisted_product(const RRing& a, const RRing& b, const TwistingMap& tau,
                               bool verify = true);

// DG twisted tensor product with the nabla-deformed differential
//   d(a (x) b) = d_A(a) (x) b + (-1)^deg(a) (a (x) d_B(b) + a*nabla(1 (x) b)).
// Requires A augmented; checks the image condition nabla(B) <= I_A (x) B,
// d^2 = 0, Leibniz, and that i_A and p_B are DG morphisms.
ProductAlgebra dg_twisted_product(const RRing& a, const RRing& b, const TwistingMap& tau,
                                  const NablaDeformation& nabla, bool verify = true);

// The product as an R-ring over the same base; eps = i_A . eps_A, and when
// both factors are augmented pi(a (x) b) = pi_A(a) pi_B(b) (verified).
RRing product_rring(const ProductAlgebra& c);

// phi on a presented algebra defined by generator images (vertices and
// arrows); paths map to the right-to-left products of their arrow images.
RatMatrix hom_from_generators(const PresentedAlgebra& p, const FinAlgebra& target,
                              const std::vector<LinComb>& vertex_images,
                              const std::vector<LinComb>& arrow_images);

bool is_bijective(const RatMatrix& m);

// Standard split pair S -> A -> S for a quiver algebra: eps sends e_i to
// the vertex idempotents, pi kills every positive-length path.
RRing split_over_vertices(const PresentedAlgebra& p, AlgebraPtr s);
RRing split_over_vertices(AlgebraPtr alg, AlgebraPtr s);

}  // namespace finalg
