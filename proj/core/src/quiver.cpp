#include "finalg/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace finalg {

void Quiver::check() const {
    std::set<std::string> labels;
    for (const auto& a : arrows) {
        if (a.src < 0 || a.src >= vertices || a.tgt < 0 || a.tgt >= vertices)
            throw Error("arrow '" + a.label + "' has a vertex out of range");
        if (a.src == a.tgt)
            throw Error("arrow '" + a.label + "' is a loop; loops are not supported");
        if (!labels.insert(a.label).second)
            throw Error("duplicate arrow label '" + a.label + "'");
    }
}

bool Quiver::has_oriented_cycle() const { return longest_path(*this).cycle; }

int Path::target(const Quiver& q) const {
    if (arrows.empty()) return base;
    return q.arrows[arrows.back()].tgt;
}

int Path::degree(const Quiver& q) const {
    int d = 0;
    for (int a : arrows) d += q.arrows[a].deg;
    return d;
}

std::string Path::label(const Quiver& q) const {
    if (arrows.empty()) return "e" + std::to_string(base + 1);
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].label;
    }
    return s;
}

bool Path::operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (arrows != o.arrows) return arrows < o.arrows;
    return base < o.base;
}

std::vector<Path> enumerate_paths(const Quiver& q, int maxlen) {
    q.check();
    std::vector<Path> out;
    for (int v = 0; v < q.vertices; ++v) out.push_back(Path{v, {}});
    std::vector<Path> frontier = out;
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            int t = p.target(q);
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != t) continue;
                Path np = p;
                np.arrows.push_back(static_cast<int>(a));
                next.push_back(std::move(np));
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

void RelationSet::check(const Quiver& q) const {
    if (trunc < 2) throw Error("truncation bound must be >= 2");
    for (const auto& r : rels) {
        if (r.terms.empty()) throw Error("empty relation");
        int src = -1, tgt = -1;
        for (const auto& t : r.terms) {
            if (t.coeff == 0) throw Error("relation term with zero coefficient");
            if (static_cast<int>(t.arrows.size()) < 2)
                throw Error("relation term of length < 2");
            for (size_t i = 0; i < t.arrows.size(); ++i) {
                if (t.arrows[i] < 0 || t.arrows[i] >= static_cast<int>(q.arrows.size()))
                    throw Error("relation references arrow out of range");
                if (i + 1 < t.arrows.size() &&
                    q.arrows[t.arrows[i + 1]].src != q.arrows[t.arrows[i]].tgt)
                    throw Error("relation term is not a composable path");
            }
            int s = q.arrows[t.arrows.front()].src;
            int e = q.arrows[t.arrows.back()].tgt;
            if (src < 0) {
                src = s;
                tgt = e;
            } else if (s != src || e != tgt) {
                throw Error("relation terms are not parallel");
            }
        }
    }
}

namespace {

struct PathIndex {
    std::map<Path, int> index;
    int at(const Path& p) const {
        auto it = index.find(p);
        if (it == index.end()) throw Error("path not indexed");
        return it->second;
    }
};

}  // namespace

PresentedAlgebra quotient_algebra(const Quiver& q, const RelationSet& rels) {
    q.check();
    rels.check(q);
    const int bound = rels.trunc;
    std::vector<Path> paths = enumerate_paths(q, bound);
    PathIndex pidx;
    for (size_t i = 0; i < paths.size(); ++i) pidx.index[paths[i]] = static_cast<int>(i);

    // ideal span: p * r * q over composable paths, with terms longer than
    // the bound dropped (sound once the bound check below passes)
    Echelon ech;
    for (const auto& rel : rels.rels) {
        int rsrc = q.arrows[rel.terms[0].arrows.front()].src;
        int rtgt = q.arrows[rel.terms[0].arrows.back()].tgt;
        int rminlen = bound;
        for (const auto& t : rel.terms)
            rminlen = std::min(rminlen, static_cast<int>(t.arrows.size()));
        for (const auto& pre : paths) {  // applied before the relation
            if (pre.target(q) != rsrc) continue;
            for (const auto& post : paths) {  // applied after
                if (post.source() != rtgt) continue;
                if (pre.length() + rminlen + post.length() > bound) continue;
                std::vector<LinComb::Term> terms;
                for (const auto& t : rel.terms) {
                    int total = pre.length() + static_cast<int>(t.arrows.size()) +
                                post.length();
                    if (total > bound) continue;
                    Path full;
                    full.base = pre.base;
                    full.arrows = pre.arrows;
                    full.arrows.insert(full.arrows.end(), t.arrows.begin(), t.arrows.end());
                    full.arrows.insert(full.arrows.end(), post.arrows.begin(),
                                       post.arrows.end());
                    terms.push_back({pidx.at(full), t.coeff});
                }
                LinComb v(std::move(terms));
                if (!v.zero()) ech.insert(std::move(v));
            }
        }
    }

    // bound check: every path of length == bound must lie in the ideal
    for (const auto& p : paths)
        if (p.length() == bound &&
            !ech.reduce(LinComb::unit(pidx.at(p))).zero())
            throw NotNilpotentAtBound(p.label(q), bound);

    // basis: pivot-free path coordinates (all of length < bound now)
    std::vector<int> basis_coords;
    std::vector<int> coord_to_basis(paths.size(), -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].length() == bound) continue;
        if (ech.is_pivot(static_cast<int>(i))) continue;
        coord_to_basis[i] = static_cast<int>(basis_coords.size());
        basis_coords.push_back(static_cast<int>(i));
    }
    const int n = static_cast<int>(basis_coords.size());

    auto to_basis = [&](const LinComb& v) {
        std::vector<LinComb::Term> t;
        for (const auto& term : v.terms()) {
            if (coord_to_basis[term.first] < 0)
                throw Error("reduction left a non-basis coordinate");
            t.push_back({coord_to_basis[term.first], term.second});
        }
        return LinComb(std::move(t));
    };

    // left multiplication by a single arrow followed by reduction, on
    // vectors supported on basis path coordinates
    auto arrow_mul = [&](int arrow, const LinComb& v) {
        LinComb out;
        for (const auto& term : v.terms()) {
            const Path& p = paths[basis_coords[term.first]];
            if (p.target(q) != q.arrows[arrow].src) continue;
            Path np = p;
            np.arrows.push_back(arrow);
            out.axpy(term.second,
                     to_basis(ech.reduce(LinComb::unit(pidx.at(np)))));
        }
        return out;
    };

    AlgebraData data;
    std::vector<Path> basis_paths;
    for (int i = 0; i < n; ++i) {
        basis_paths.push_back(paths[basis_coords[i]]);
        data.basis.push_back(paths[basis_coords[i]].label(q));
    }
    data.mult.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const Path& u = basis_paths[i];
        for (int j = 0; j < n; ++j) {
            const Path& v = basis_paths[j];
            if (v.target(q) != u.source()) continue;
            LinComb cur = LinComb::unit(j);
            for (int a : u.arrows) {
                cur = arrow_mul(a, cur);
                if (cur.zero()) break;
            }
            data.mult[static_cast<size_t>(i) * n + j] = std::move(cur);
        }
    }
    std::vector<LinComb::Term> unit_terms;
    for (int v = 0; v < q.vertices; ++v) {
        int coord = pidx.at(Path{v, {}});
        int b = coord_to_basis[coord];
        if (b < 0) throw Error("vertex path eliminated by relations");
        data.idempotents.push_back(LinComb::unit(b));
        unit_terms.push_back({b, Rat(1)});
    }
    data.unit = LinComb(std::move(unit_terms));
    std::vector<int> grading(n);
    for (int i = 0; i < n; ++i) grading[i] = basis_paths[i].degree(q);
    data.grading = std::move(grading);

    return PresentedAlgebra{q, rels, std::move(basis_paths),
                            FinAlgebra(std::move(data))};
}

LinComb PresentedAlgebra::vertex_elem(int v) const {
    for (size_t i = 0; i < basis_paths.size(); ++i)
        if (basis_paths[i].length() == 0 && basis_paths[i].base == v)
            return LinComb::unit(static_cast<int>(i));
    throw Error("vertex element not in basis");
}

LinComb PresentedAlgebra::arrow_elem(int arrow_idx) const {
    for (size_t i = 0; i < basis_paths.size(); ++i)
        if (basis_paths[i].length() == 1 && basis_paths[i].arrows[0] == arrow_idx)
            return LinComb::unit(static_cast<int>(i));
    throw Error("arrow element not in basis");
}

LinComb PresentedAlgebra::path_elem(const Path& p) const {
    if (p.length() == 0) return vertex_elem(p.base);
    LinComb cur = vertex_elem(p.base);
    for (int a : p.arrows) {
        cur = algebra.mul(arrow_elem(a), cur);
        if (cur.zero()) break;
    }
    return cur;
}

LongestPathResult longest_path(const Quiver& q) {
    q.check();
    // Kahn topological order on vertices
    std::vector<int> indeg(q.vertices, 0);
    for (const auto& a : q.arrows) indeg[a.tgt]++;
    std::vector<int> order;
    std::vector<int> stack;
    for (int v = 0; v < q.vertices; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::vector<int> indeg2 = indeg;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (const auto& a : q.arrows)
            if (a.src == v && --indeg2[a.tgt] == 0) stack.push_back(a.tgt);
    }
    if (static_cast<int>(order.size()) != q.vertices)
        return LongestPathResult{true, 0, {}};

    std::vector<std::vector<int>> incoming(q.vertices);
    for (size_t i = 0; i < q.arrows.size(); ++i)
        incoming[q.arrows[i].tgt].push_back(static_cast<int>(i));

    std::vector<int> best(q.vertices, 0);
    std::vector<int> via(q.vertices, -1);  // arrow achieving best[v]
    LongestPathResult res;
    for (int v : order)
        for (int ai : incoming[v]) {
            int s = q.arrows[ai].src;
            if (best[s] + 1 > best[v]) {
                best[v] = best[s] + 1;
                via[v] = ai;
            }
        }
    int argmax = 0;
    for (int v = 0; v < q.vertices; ++v)
        if (best[v] > best[argmax]) argmax = v;
    res.length = best[argmax];
    // reconstruct witness
    std::vector<int> rev;
    int v = argmax;
    while (via[v] >= 0) {
        rev.push_back(via[v]);
        v = q.arrows[via[v]].src;
    }
    res.witness.base = v;
    res.witness.arrows.assign(rev.rbegin(), rev.rend());
    return res;
}

bool monomial_path_in_ideal(const Quiver& q, const RelationSet& rels, const Path& p) {
    for (const auto& r : rels.rels) {
        if (r.terms.size() != 1)
            throw Error("monomial oracle requires monomial relations");
        const auto& word = r.terms[0].arrows;
        if (word.size() > p.arrows.size()) continue;
        for (size_t start = 0; start + word.size() <= p.arrows.size(); ++start) {
            bool match = true;
            for (size_t k = 0; k < word.size(); ++k)
                if (p.arrows[start + k] != word[k]) {
                    match = false;
                    break;
                }
            if (match) return true;
        }
    }
    (void)q;
    return false;
}

FinAlgebra with_differential(const FinAlgebra& a, const RatMatrix& d) {
    AlgebraData data = a.data();
    data.differential = d;
    return FinAlgebra(std::move(data));
}

FinAlgebra opposite(const FinAlgebra& a) {
    if (a.has_differential())
        throw Error("opposite: differentials are not supported (graded signs)");
    AlgebraData data = a.data();
    const int n = data.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            std::swap(data.mult[static_cast<size_t>(i) * n + j],
                      data.mult[static_cast<size_t>(j) * n + i]);
    return FinAlgebra(std::move(data));
}

}  // namespace finalg
