#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/matrix.hpp"

namespace finalg {

// Raw data of a finite-dimensional associative unital algebra over Q with
// optional Z-grading and degree-+1 differential. Multiplication is a
// structure-constant table on an ordered basis; idempotents are part of
// the input (a complete orthogonal set), not discovered.
struct AlgebraData {
    std::vector<std::string> basis;
    std::vector<LinComb> mult;  // mult[i*dim+j] = e_i * e_j
    LinComb unit;
    std::vector<LinComb> idempotents;
    std::optional<std::vector<int>> grading;
    std::optional<RatMatrix> differential;  // column j = d(basis_j)

    int dim() const { return static_cast<int>(basis.size()); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

// Checks every algebra axiom and reports all violations (never throws):
// associativity on basis triples, two-sided unit, idempotent orthogonality
// and completeness, grading compatibility, d^2 = 0, graded Leibniz,
// d(idempotent) = 0.
ValidationReport validate(const AlgebraData& data);

class FinAlgebra {
public:
    explicit FinAlgebra(AlgebraData data);  // throws Error when invalid

    int dim() const { return data_.dim(); }
    const std::string& basis_name(int i) const { return data_.basis[i]; }
    const std::vector<std::string>& basis_names() const { return data_.basis; }

    const LinComb& mul_basis(int i, int j) const {
        return data_.mult[static_cast<size_t>(i) * dim() + j];
    }
    LinComb mul(const LinComb& x, const LinComb& y) const;
    const LinComb& unit() const { return data_.unit; }

    int num_vertices() const { return static_cast<int>(data_.idempotents.size()); }
    const LinComb& idempotent(int i) const { return data_.idempotents[i]; }

    bool graded() const { return data_.grading.has_value(); }
    int degree(int i) const { return graded() ? (*data_.grading)[i] : 0; }
    bool homogeneous(const LinComb& v, int* deg_out = nullptr) const;

    bool has_differential() const { return data_.differential.has_value(); }
    const RatMatrix& differential() const;
    LinComb d(const LinComb& v) const;

    RatMatrix left_mult(const LinComb& x) const;   // L_x: v -> x v
    RatMatrix right_mult(const LinComb& x) const;  // R_x: v -> v x

    // Coordinates of the degree-q component (all, if ungraded with q = 0).
    std::vector<int> coords_of_degree(int q) const;
    std::vector<int> degrees_present() const;

    const AlgebraData& data() const { return data_; }

private:
    AlgebraData data_;
};

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

// Two-sided ideal spanned by homogeneous vectors, held as a canonical
// column-span basis.
struct GradedIdeal {
    RatMatrix span;
    int dim() const { return span.cols(); }
};

struct DGIdeal {
    RatMatrix span;
    bool d_closed = true;
    int dim() const { return span.cols(); }
};

// Builds an ideal from a spanning set of columns: canonicalizes (per degree
// when the algebra is graded) and checks two-sidedness; throws when the
// span is not an ideal or not graded.
GradedIdeal ideal_from_span(const FinAlgebra& a, const RatMatrix& span);

bool is_two_sided_ideal(const FinAlgebra& a, const RatMatrix& span);

// Jacobson radical via the characteristic-zero trace criterion:
// x in J iff trace(L_{x a}) = 0 for every basis element a.
// Verifies nilpotency, two-sidedness and semisimplicity of the quotient.
GradedIdeal radical(const FinAlgebra& a);

GradedIdeal power_ideal(const FinAlgebra& a, const GradedIdeal& j, int p);
// least p with J^p = 0; throws when J is not nilpotent.
int nilpotency_index(const FinAlgebra& a, const GradedIdeal& j);

// Internal DG ideal I_- = { r in I : d(r) in I }.
DGIdeal internal_ideal(const FinAlgebra& a, const GradedIdeal& i);
// External DG ideal I_+ = I + d(I).
DGIdeal external_ideal(const FinAlgebra& a, const GradedIdeal& i);

struct QuotientResult {
    FinAlgebra algebra;
    RatMatrix projection;  // dim(A/I) x dim(A)
    RatMatrix section;     // dim(A) x dim(A/I), coordinate section
};

// Quotient by a two-sided (DG) ideal; requires d(I) <= I when A carries a
// differential. Basis: complement coordinates under the ideal's RREF.
QuotientResult quotient(const FinAlgebra& a, const RatMatrix& ideal_span);

// Finite complex of Q-vector spaces concentrated in finitely many degrees.
struct GradedComplex {
    std::map<int, int> dims;         // degree -> dimension (nonzero degrees only)
    std::map<int, RatMatrix> diff;   // diff[q]: dims[q] -> dims[q+1]

    int dim(int q) const;
    RatMatrix d(int q) const;  // zero-shaped matrix when absent
    void check() const;        // shapes and d^2 = 0
};

std::map<int, int> cohomology_dims(const GradedComplex& c);
bool is_acyclic(const GradedComplex& c);

// The underlying complex of a DG algebra (degree components + differential).
GradedComplex complex_of(const FinAlgebra& a);
std::map<int, int> cohomology_dims(const FinAlgebra& a);

// Lemma-level check: the induced complex on I_+ / I_- is acyclic.
bool check_quotient_complex_acyclic(const FinAlgebra& a, const GradedIdeal& i);

// dim(A/J) == number of declared idempotents, i.e. the semisimple quotient
// is split by the declared set.
bool is_basic_s_split(const FinAlgebra& a);

// Semisimple algebra Q^n with its standard idempotent basis e1..en.
FinAlgebra semisimple_algebra(int n);

// Process-wide shared instance (twisted products require factors to agree
// on the base by identity).
AlgebraPtr shared_semisimple(int n);

}  // namespace finalg
