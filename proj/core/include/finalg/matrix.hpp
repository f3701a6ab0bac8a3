#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/lincomb.hpp"
#include "finalg/numeric.hpp"

namespace finalg {

// Dense matrix over Q. Dimensions at desk scale; everything exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix from_cols(int rows, const std::vector<LinComb>& cols);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    LinComb col(int j) const;
    LinComb row_vec(int i) const;
    void set_col(int j, const LinComb& v);

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;

    LinComb apply(const LinComb& v) const;  // matrix * sparse column vector

    RatMatrix transpose() const;
    bool is_zero() const;
    Rat trace() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<int> pivots;  // pivot column indices, ascending
    int rank = 0;
};

// Unique reduced row echelon form.
RrefResult rref(const RatMatrix& m);

int rank_of(const RatMatrix& m);

// Columns form a basis of ker(m); column count = cols - rank.
RatMatrix kernel_basis(const RatMatrix& m);

// Canonical basis of the column span: RREF of the transpose, transposed
// back. Two matrices span the same subspace iff these agree.
RatMatrix column_span_canonical(const RatMatrix& m);
bool same_column_span(const RatMatrix& a, const RatMatrix& b);

// Basis of (col span U) `intersect` (col span W); throws on ambient mismatch.
RatMatrix subspace_intersection(const RatMatrix& u, const RatMatrix& w);

// X with A*X = B, when consistent.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

// Dense matrix over Z (arbitrary precision).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;

    Int det() const;  // fraction-free Gaussian elimination
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

RatMatrix to_rat(const IntMatrix& m);

// Exact (M^-1)^t for unimodular M; throws if det(M) is not +-1.
IntMatrix int_inverse_transpose(const IntMatrix& m);

}  // namespace finalg
