#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

struct Arrow {
    std::string label;
    int src = 0;  // 0-based vertices
    int tgt = 0;
    int deg = 0;
};

// Finite quiver without loops. Paths compose right-to-left: the product
// p2*p1 traverses p1 first.
struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;

    void check() const;  // ranges, unique labels, no loops
    bool has_oriented_cycle() const;
};

// A path stored in traversal order: arrows[0] is applied first. An empty
// arrow list is the lazy path at `base`.
struct Path {
    int base = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    int source() const { return base; }
    int target(const Quiver& q) const;
    int degree(const Quiver& q) const;
    std::string label(const Quiver& q) const;  // right-to-left, '*'-separated

    bool operator==(const Path& o) const { return base == o.base && arrows == o.arrows; }
    bool operator<(const Path& o) const;  // (length, traversal-lex, base)
};

// All composable paths of length <= maxlen, ordered by (length, arrow
// sequence); empty paths come first, ordered by vertex.
std::vector<Path> enumerate_paths(const Quiver& q, int maxlen);

// One parallel linear combination of paths of length >= 2, set to zero.
struct RelationTerm {
    Rat coeff;
    std::vector<int> arrows;  // traversal order
};
struct Relation {
    std::vector<RelationTerm> terms;
};

struct RelationSet {
    std::vector<Relation> rels;
    int trunc = 4;  // nilpotency truncation bound, >= 2

    void check(const Quiver& q) const;  // parallelism, lengths, bound
};

// Raised when some path of length == trunc is not in the relation ideal:
// the truncation bound must grow, or the algebra is infinite-dimensional.
class NotNilpotentAtBound : public Error {
public:
    NotNilpotentAtBound(const std::string& path_label, int bound)
        : Error("path '" + path_label + "' of length " + std::to_string(bound) +
                " is not in the relation ideal at the truncation bound"),
          path(path_label), bound(bound) {}
    std::string path;
    int bound;
};

// Finite-dimensional quiver algebra kQ/I by truncated linear algebra on
// path spaces, with provenance kept for generator-matching maps.
struct PresentedAlgebra {
    Quiver quiver;
    RelationSet relations;
    std::vector<Path> basis_paths;  // parallel to algebra basis
    FinAlgebra algebra;

    LinComb vertex_elem(int v) const;        // e_v
    LinComb arrow_elem(int arrow_idx) const; // arrows always survive in the basis
    // reduced representative of an arbitrary path (0 when it dies)
    LinComb path_elem(const Path& p) const;
};

PresentedAlgebra quotient_algebra(const Quiver& q, const RelationSet& rels);

// Longest path in a DAG quiver (arrow count), or cycle detection.
struct LongestPathResult {
    bool cycle = false;
    int length = 0;
    Path witness;
};
LongestPathResult longest_path(const Quiver& q);

// Oracle for monomial relation sets: a path is zero in the quotient iff it
// contains some relation monomial as a contiguous subpath. Throws when a
// relation is not monomial.
bool monomial_path_in_ideal(const Quiver& q, const RelationSet& rels, const Path& p);

// Copy of an algebra with a differential attached (validated).
FinAlgebra with_differential(const FinAlgebra& a, const RatMatrix& d);

// Plain opposite algebra (reversed multiplication). Used for the
// arrow-reversed quiver algebras; their differentials are all zero, so no
// sign twist is involved.
FinAlgebra opposite(const FinAlgebra& a);

}  // namespace finalg
