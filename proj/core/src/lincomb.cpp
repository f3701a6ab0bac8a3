#include "finalg/lincomb.hpp"

#include <algorithm>
#include <sstream>

namespace finalg {

LinComb::LinComb(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.second == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

LinComb LinComb::unit(int coord, const Rat& c) {
    LinComb v;
    if (c != 0) v.terms_.push_back({coord, c});
    return v;
}

int LinComb::leading() const {
    if (zero()) throw Error("leading() of zero vector");
    return terms_.front().first;
}

const Rat& LinComb::leading_coeff() const {
    if (zero()) throw Error("leading_coeff() of zero vector");
    return terms_.front().second;
}

Rat LinComb::coeff(int coord) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), coord,
        [](const Term& t, int c) { return t.first < c; });
    if (it != terms_.end() && it->first == coord) return it->second;
    return Rat(0);
}

void LinComb::set(int coord, const Rat& c) {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), coord,
        [](const Term& t, int c2) { return t.first < c2; });
    if (it != terms_.end() && it->first == coord) {
        if (c == 0)
            terms_.erase(it);
        else
            it->second = c;
    } else if (c != 0) {
        terms_.insert(it, {coord, c});
    }
}

void LinComb::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) t.second *= c;
}

LinComb LinComb::scaled(const Rat& c) const {
    LinComb r = *this;
    r.scale(c);
    return r;
}

void LinComb::axpy(const Rat& c, const LinComb& other) {
    if (c == 0 || other.zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            Rat v = c * b->second;
            if (v != 0) out.push_back({b->first, std::move(v)});
            ++b;
        } else {
            Rat v = a->second + c * b->second;
            if (v != 0) out.push_back({a->first, std::move(v)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb r = *this;
    r.axpy(Rat(1), o);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb r = *this;
    r.axpy(Rat(-1), o);
    return r;
}

LinComb LinComb::mapped(const std::vector<int>& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f.at(t.first), t.second});
    return LinComb(std::move(out));
}

std::string LinComb::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        os << rat_str(t.second) << "*[" << t.first << "]";
        first = false;
    }
    return os.str();
}

// Subtracts pivot rows from v until no coordinate of v is a pivot.  Each
// elimination step adds tag_sign * coeff * row_tag to *tag, which lets the
// two callers maintain their respective invariants:
//   insert:  row = sum(tag_g * gen_g)      (tag_sign = -1)
//   express: v   = residue + sum(tag_g * gen_g)  (tag_sign = +1)
void Echelon::reduce_tracked(LinComb& v, LinComb* tag, int tag_sign) const {
    size_t pos = 0;
    while (pos < v.terms().size()) {
        int c = v.terms()[pos].first;
        auto it = pivot_row_.find(c);
        if (it == pivot_row_.end()) {
            ++pos;
            continue;
        }
        Rat coeff = v.terms()[pos].second;
        v.axpy(-coeff, rows_[it->second]);
        if (tag && track_) tag->axpy(tag_sign * coeff, tags_[it->second]);
        // coordinates < c are untouched: row entries sit at coords >= pivot
    }
}

bool Echelon::insert(LinComb v) {
    LinComb tag = track_ ? LinComb::unit(n_inserted_) : LinComb();
    ++n_inserted_;
    reduce_tracked(v, &tag, -1);
    if (v.zero()) return false;
    Rat inv = 1 / v.leading_coeff();
    v.scale(inv);
    if (track_) tag.scale(inv);
    int pivot = v.leading();
    // keep existing rows fully reduced against the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat c = rows_[r].coeff(pivot);
        if (c != 0) {
            rows_[r].axpy(-c, v);
            if (track_) tags_[r].axpy(-c, tag);
        }
    }
    pivot_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    if (track_) tags_.push_back(std::move(tag));
    return true;
}

LinComb Echelon::reduce(LinComb v) const {
    reduce_tracked(v, nullptr, 0);
    return v;
}

std::optional<LinComb> Echelon::express(const LinComb& v) const {
    if (!track_) throw Error("Echelon::express requires tag tracking");
    LinComb w = v;
    LinComb tag;
    reduce_tracked(w, &tag, +1);
    if (!w.zero()) return std::nullopt;
    return tag;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    p.reserve(pivot_row_.size());
    for (const auto& kv : pivot_row_) p.push_back(kv.first);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<LinComb> echelon_kernel(const Echelon& rows, int ambient_dim) {
    std::vector<LinComb> out;
    for (int f = 0; f < ambient_dim; ++f) {
        if (rows.is_pivot(f)) continue;
        LinComb v = LinComb::unit(f);
        for (const auto& r : rows.rows()) {
            Rat c = r.coeff(f);
            if (c != 0) v.set(r.leading(), -c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<LinComb> sparse_kernel(const std::vector<LinComb>& cols) {
    Echelon ech(true);
    std::vector<LinComb> kernel;
    for (size_t j = 0; j < cols.size(); ++j) {
        LinComb v = cols[j];
        auto expr = ech.express(v);
        if (expr) {
            // cols[j] = sum expr_g * cols[g]  ->  e_j - expr in the kernel
            LinComb k = LinComb::unit(static_cast<int>(j));
            k.axpy(Rat(-1), *expr);
            kernel.push_back(std::move(k));
            ech.insert(std::move(v));  // keep generator indexing aligned
        } else {
            ech.insert(std::move(v));
        }
    }
    return kernel;
}

}  // namespace finalg
