#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Right module over a FinAlgebra, given by a sparse action column table:
// act[a][j] = (basis_j) * e_a. Optional grading and degree-+1 differential
// for DG modules.
class RightModule {
public:
    RightModule() = default;
    RightModule(AlgebraPtr alg, int dim, std::vector<std::vector<LinComb>> act,
                std::optional<std::vector<int>> grading = std::nullopt,
                std::optional<std::vector<LinComb>> differential = std::nullopt);

    const AlgebraPtr& algebra() const { return alg_; }
    int dim() const { return dim_; }

    LinComb act(int a, const LinComb& v) const;               // v * e_a
    LinComb act_elem(const LinComb& x, const LinComb& v) const;  // v * x

    bool graded() const { return grading_.has_value(); }
    int degree(int i) const { return graded() ? (*grading_)[i] : 0; }
    const std::optional<std::vector<int>>& grading() const { return grading_; }

    bool has_differential() const { return diff_.has_value(); }
    LinComb d(const LinComb& v) const;
    const std::vector<LinComb>& differential_cols() const;

    const std::vector<LinComb>& action_cols(int a) const { return act_[a]; }

private:
    AlgebraPtr alg_;
    int dim_ = 0;
    std::vector<std::vector<LinComb>> act_;
    std::optional<std::vector<int>> grading_;
    std::optional<std::vector<LinComb>> diff_;
};

// Unit action, associativity m(xy) = (mx)y on basis pairs, grading of the
// action, module Leibniz rule when differentials are present.
ValidationReport validate_module(const RightModule& m);

// Cached structure of a basic S-split algebra: radical span and the
// projection onto idempotent coefficients mod J.
struct SplitContext {
    AlgebraPtr alg;
    RatMatrix rad_span;   // columns spanning J
    RatMatrix split_pi;   // N x dim(A), x -> coefficients over e_i mod J
    int vertices() const { return split_pi.rows(); }

    static SplitContext make(AlgebraPtr alg);  // throws for non-basic algebras
};

RightModule regular_module(AlgebraPtr alg);
RightModule simple(const SplitContext& ctx, int i);
RightModule projective(const SplitContext& ctx, int i);

// Submodule spanned by the closure of the given generators.
struct Submodule {
    RightModule mod;
    RatMatrix incl;  // dim(ambient) x dim(sub)
};
Submodule submodule(const RightModule& m, const std::vector<LinComb>& gens);

// The right ideal x*A inside the regular module.
Submodule cyclic_right_ideal(const SplitContext& ctx, const LinComb& x);

// Right annihilator rAnn(x) = ker(L_x) as a submodule of the regular module.
Submodule right_annihilator(const SplitContext& ctx, const LinComb& x);

// dim of (M/MJ) e_i per vertex.
std::vector<int> top_multiplicities(const SplitContext& ctx, const RightModule& m);

struct Cover {
    RightModule proj;           // P = (+) P_i^{mult[i]}
    std::vector<int> mults;
    std::vector<LinComb> map;   // columns: P -> M
    RightModule syzygy;         // ker(map), as a module
    RatMatrix syzygy_incl;      // dim(P) x dim(syzygy)
    bool minimal = false;       // kernel <= P J
};
Cover projective_cover(const SplitContext& ctx, const RightModule& m);

struct Resolution {
    std::vector<std::vector<int>> terms;       // stage -> multiplicities per vertex
    std::vector<std::vector<LinComb>> maps;    // maps[0]: P_0 -> M; maps[s]: P_s -> P_{s-1}
    std::vector<int> term_dims;
    bool finite = false;   // syzygy reached zero within the bound
    int pd = -1;           // valid when finite
    bool minimal = true;

    int stages() const { return static_cast<int>(terms.size()); }
};

Resolution minimal_resolution(const SplitContext& ctx, const RightModule& m, int bound);

// Exactness and d.d = 0 re-checked densely; used by tests.
void verify_resolution(const SplitContext& ctx, const RightModule& m, const Resolution& r);

struct GlDimResult {
    bool finite = false;
    int value = -1;  // valid when finite
    int bound = 0;
    std::vector<Resolution> simple_resolutions;
};
GlDimResult global_dimension(const SplitContext& ctx, int bound);
GlDimResult global_dimension(AlgebraPtr alg, int bound);  // bound<=0: 2*dim(A)

// Is x*A isomorphic to y*A via x r -> y r? Verifies the generator map is a
// well-defined bijective module homomorphism.
bool cyclic_modules_isomorphic(const SplitContext& ctx, const LinComb& x, const LinComb& y);

// Complex Hom(M, N) of homogeneous module homomorphisms with
// D(f) = d_N . f - (-1)^deg(f) f . d_M.
GradedComplex hom_complex(const RightModule& m, const RightModule& n);

// Dimension of Hom(M, N)^q.
int hom_dim(const RightModule& m, const RightModule& n, int q);

// DG endomorphism algebra End((+) mods) with composition product, graded by
// map degree; identities of the summands are the declared idempotents.
FinAlgebra dg_endomorphism_algebra(const std::vector<RightModule>& mods);

// Quotient module M / span(sub) with induced action.
RightModule quotient_module(const RightModule& m, const RatMatrix& sub_span);

RightModule direct_sum(const std::vector<const RightModule*>& mods);

}  // namespace finalg
