#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finalg/numeric.hpp"

namespace finalg {

// Sparse vector: sorted (coordinate, nonzero coefficient) pairs. The
// workhorse representation for structure constants, ideal generators and
// tensor-space elements, where almost everything is a short combination.
class LinComb {
public:
    using Term = std::pair<int, Rat>;

    LinComb() = default;
    explicit LinComb(std::vector<Term> terms);

    static LinComb unit(int coord, const Rat& c = Rat(1));

    bool zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    // Smallest coordinate with nonzero coefficient; requires !zero().
    int leading() const;
    const Rat& leading_coeff() const;

    Rat coeff(int coord) const;
    void set(int coord, const Rat& c);

    void scale(const Rat& c);
    LinComb scaled(const Rat& c) const;
    // *this += c * other
    void axpy(const Rat& c, const LinComb& other);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

    // Re-index coordinates; f(old) = new coordinate (must be injective).
    LinComb mapped(const std::vector<int>& f) const;

    std::string str() const;  // e.g. "2*[3] - 1/2*[7]"

private:
    std::vector<Term> terms_;
};

// Incremental reduced row echelon form over sparse vectors, optionally
// tracking how each row decomposes over the inserted generators.  Rows are
// kept normalized (leading coefficient 1) and mutually fully reduced.
class Echelon {
public:
    explicit Echelon(bool track_tags = false) : track_(track_tags) {}

    // Inserts a generator. Returns true iff it enlarged the span.
    bool insert(LinComb v);

    // Reduces v modulo the current row space (canonical representative).
    LinComb reduce(LinComb v) const;
    bool contains(const LinComb& v) const { return reduce(v).zero(); }

    // Expresses v over the inserted generators: v = sum coeff_g * gen_g.
    // Requires track_tags; nullopt if v is outside the span.
    std::optional<LinComb> express(const LinComb& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<LinComb>& rows() const { return rows_; }
    std::vector<int> pivots() const;  // sorted
    bool is_pivot(int coord) const { return pivot_row_.count(coord) != 0; }

private:
    void reduce_tracked(LinComb& v, LinComb* tag, int tag_sign) const;

    bool track_ = false;
    int n_inserted_ = 0;
    std::vector<LinComb> rows_;
    std::vector<LinComb> tags_;  // parallel to rows_ when track_
    std::unordered_map<int, int> pivot_row_;
};

// Kernel of the linear map sending coordinate j to cols[j]: returns sparse
// relation vectors k (over column indices) with sum k_j cols[j] = 0,
// one per dependent column, forming a basis of the kernel.
std::vector<LinComb> sparse_kernel(const std::vector<LinComb>& cols);

// Kernel of a row space: vectors x of the given ambient dimension with
// r . x = 0 for every row of the echelon.
std::vector<LinComb> echelon_kernel(const Echelon& rows, int ambient_dim);

}  // namespace finalg
