#include "finalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace finalg {

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << v << "\n";
    return os.str();
}

namespace {

LinComb mul_raw(const AlgebraData& d, const LinComb& x, const LinComb& y) {
    LinComb out;
    const int n = d.dim();
    for (const auto& tx : x.terms())
        for (const auto& ty : y.terms()) {
            const LinComb& p = d.mult[static_cast<size_t>(tx.first) * n + ty.first];
            if (!p.zero()) out.axpy(tx.second * ty.second, p);
        }
    return out;
}

bool homogeneous_raw(const AlgebraData& d, const LinComb& v, int* deg_out) {
    if (!d.grading) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    bool first = true;
    int deg = 0;
    for (const auto& t : v.terms()) {
        int dt = (*d.grading)[t.first];
        if (first) {
            deg = dt;
            first = false;
        } else if (dt != deg) {
            return false;
        }
    }
    if (deg_out) *deg_out = v.zero() ? 0 : deg;
    return true;
}

}  // namespace

ValidationReport validate(const AlgebraData& d) {
    ValidationReport rep;
    const int n = d.dim();
    auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };

    if (static_cast<int>(d.mult.size()) != n * n) {
        fail("structure-constant table has wrong size");
        return rep;
    }
    for (const auto& m : d.mult)
        for (const auto& t : m.terms())
            if (t.first < 0 || t.first >= n) {
                fail("structure constant references coordinate out of range");
                return rep;
            }
    if (d.grading && static_cast<int>(d.grading->size()) != n) {
        fail("grading has wrong size");
        return rep;
    }
    if (d.differential &&
        (d.differential->rows() != n || d.differential->cols() != n)) {
        fail("differential has wrong shape");
        return rep;
    }

    // unit
    if (d.unit.zero()) fail("unit: zero unit vector");
    for (int i = 0; i < n; ++i) {
        LinComb e = LinComb::unit(i);
        if (!(mul_raw(d, d.unit, e) == e))
            fail("unit: 1*" + d.basis[i] + " != " + d.basis[i]);
        if (!(mul_raw(d, e, d.unit) == e))
            fail("unit: " + d.basis[i] + "*1 != " + d.basis[i]);
    }

    // associativity on basis triples, skipping vanishing left products
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LinComb& pij = d.mult[static_cast<size_t>(i) * n + j];
            for (int k = 0; k < n; ++k) {
                LinComb lhs = mul_raw(d, pij, LinComb::unit(k));
                LinComb rhs = mul_raw(d, LinComb::unit(i),
                                      d.mult[static_cast<size_t>(j) * n + k]);
                if (!(lhs == rhs)) {
                    fail("associativity fails at (" + d.basis[i] + "," +
                         d.basis[j] + "," + d.basis[k] + ")");
                    if (rep.violations.size() > 20) return rep;
                }
            }
        }

    // idempotents
    if (d.idempotents.empty()) fail("idempotents: empty set declared");
    LinComb sum;
    for (size_t a = 0; a < d.idempotents.size(); ++a) {
        sum.axpy(Rat(1), d.idempotents[a]);
        for (size_t b = 0; b < d.idempotents.size(); ++b) {
            LinComb p = mul_raw(d, d.idempotents[a], d.idempotents[b]);
            LinComb expect = (a == b) ? d.idempotents[a] : LinComb();
            if (!(p == expect))
                fail("idempotents: e" + std::to_string(a + 1) + "*e" +
                     std::to_string(b + 1) + " violates orthogonality");
        }
    }
    if (!(sum == d.unit)) fail("idempotents: sum is not the unit");

    // grading
    if (d.grading) {
        for (const auto& t : d.unit.terms())
            if ((*d.grading)[t.first] != 0) {
                fail("grading: unit has a nonzero-degree component");
                break;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int want = (*d.grading)[i] + (*d.grading)[j];
                for (const auto& t :
                     d.mult[static_cast<size_t>(i) * n + j].terms())
                    if ((*d.grading)[t.first] != want) {
                        fail("grading: " + d.basis[i] + "*" + d.basis[j] +
                             " is not degree-additive");
                        break;
                    }
            }
    }

    // differential
    if (d.differential) {
        const RatMatrix& dd = *d.differential;
        if (d.grading) {
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    if (dd.at(i, j) != 0 &&
                        (*d.grading)[i] != (*d.grading)[j] + 1) {
                        fail("differential: d(" + d.basis[j] +
                             ") is not homogeneous of degree +1");
                        break;
                    }
        }
        if (!(dd * dd).is_zero()) fail("differential: d^2 != 0");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                LinComb prod = d.mult[static_cast<size_t>(i) * n + j];
                LinComb lhs = dd.apply(prod);
                LinComb rhs = mul_raw(d, dd.apply(LinComb::unit(i)), LinComb::unit(j));
                int sign = (d.grading && ((*d.grading)[i] % 2 != 0)) ? -1 : 1;
                rhs.axpy(Rat(sign), mul_raw(d, LinComb::unit(i), dd.apply(LinComb::unit(j))));
                if (!(lhs == rhs)) {
                    fail("Leibniz rule fails at (" + d.basis[i] + "," + d.basis[j] + ")");
                    if (rep.violations.size() > 40) return rep;
                }
            }
        for (size_t a = 0; a < d.idempotents.size(); ++a)
            if (!dd.apply(d.idempotents[a]).zero())
                fail("differential: d(e" + std::to_string(a + 1) + ") != 0");
    }

    return rep;
}

FinAlgebra::FinAlgebra(AlgebraData data) : data_(std::move(data)) {
    ValidationReport rep = validate(data_);
    if (!rep.ok()) throw Error("invalid algebra:\n" + rep.str());
}

LinComb FinAlgebra::mul(const LinComb& x, const LinComb& y) const {
    return mul_raw(data_, x, y);
}

bool FinAlgebra::homogeneous(const LinComb& v, int* deg_out) const {
    return homogeneous_raw(data_, v, deg_out);
}

const RatMatrix& FinAlgebra::differential() const {
    if (!has_differential()) throw Error("algebra has no differential");
    return *data_.differential;
}

LinComb FinAlgebra::d(const LinComb& v) const {
    if (!has_differential()) throw Error("algebra has no differential");
    return data_.differential->apply(v);
}

RatMatrix FinAlgebra::left_mult(const LinComb& x) const {
    RatMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.set_col(j, mul(x, LinComb::unit(j)));
    return m;
}

RatMatrix FinAlgebra::right_mult(const LinComb& x) const {
    RatMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.set_col(j, mul(LinComb::unit(j), x));
    return m;
}

std::vector<int> FinAlgebra::coords_of_degree(int q) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (degree(i) == q) out.push_back(i);
    return out;
}

std::vector<int> FinAlgebra::degrees_present() const {
    std::set<int> degs;
    for (int i = 0; i < dim(); ++i) degs.insert(degree(i));
    return std::vector<int>(degs.begin(), degs.end());
}

bool is_two_sided_ideal(const FinAlgebra& a, const RatMatrix& span) {
    Echelon ech;
    for (int c = 0; c < span.cols(); ++c) ech.insert(span.col(c));
    for (int c = 0; c < span.cols(); ++c) {
        LinComb v = span.col(c);
        for (int i = 0; i < a.dim(); ++i) {
            LinComb e = LinComb::unit(i);
            if (!ech.reduce(a.mul(e, v)).zero()) return false;
            if (!ech.reduce(a.mul(v, e)).zero()) return false;
        }
    }
    return true;
}

namespace {

// Canonical homogeneous column basis of a graded subspace; throws when the
// span is not graded.
RatMatrix graded_canonical(const FinAlgebra& a, const RatMatrix& span) {
    if (!a.graded()) return column_span_canonical(span);
    int total = rank_of(span);
    std::vector<LinComb> cols;
    for (int q : a.degrees_present()) {
        auto coords = a.coords_of_degree(q);
        RatMatrix comp(a.dim(), static_cast<int>(coords.size()));
        for (size_t j = 0; j < coords.size(); ++j) comp.at(coords[j], static_cast<int>(j)) = 1;
        RatMatrix inter = subspace_intersection(span, comp);
        for (int c = 0; c < inter.cols(); ++c) cols.push_back(inter.col(c));
    }
    if (static_cast<int>(cols.size()) != total)
        throw Error("subspace is not graded (homogeneous parts do not fill it)");
    return RatMatrix::from_cols(a.dim(), cols);
}

}  // namespace

GradedIdeal ideal_from_span(const FinAlgebra& a, const RatMatrix& span) {
    RatMatrix canon = graded_canonical(a, span);
    if (!is_two_sided_ideal(a, canon)) throw Error("span is not a two-sided ideal");
    return GradedIdeal{canon};
}

GradedIdeal radical(const FinAlgebra& a) {
    const int n = a.dim();
    // t_l = trace of left multiplication by basis l
    std::vector<Rat> tr(n, Rat(0));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) tr[l] += a.mul_basis(l, j).coeff(j);
    // rows indexed by a, columns by i: M[a][i] = trace(L_{e_i e_a})
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int av = 0; av < n; ++av) {
            Rat s = 0;
            for (const auto& t : a.mul_basis(i, av).terms()) s += t.second * tr[t.first];
            m.at(av, i) = s;
        }
    RatMatrix ker = kernel_basis(m);

    RatMatrix span;
    if (!a.graded()) {
        span = column_span_canonical(ker);
    } else {
        // the radical is graded: collect homogeneous pieces and check they
        // fill the trace kernel
        span = graded_canonical(a, ker);
    }
    GradedIdeal j{span};
    if (!is_two_sided_ideal(a, j.span)) throw Error("radical: trace kernel is not an ideal");
    nilpotency_index(a, j);  // throws when not nilpotent

    // semisimplicity of the quotient: trace kernel of A/J must vanish
    QuotientResult q = quotient(a, j.span);
    const FinAlgebra& s = q.algebra;
    std::vector<Rat> tr2(s.dim(), Rat(0));
    for (int l = 0; l < s.dim(); ++l)
        for (int jj = 0; jj < s.dim(); ++jj) tr2[l] += s.mul_basis(l, jj).coeff(jj);
    RatMatrix m2(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i)
        for (int av = 0; av < s.dim(); ++av) {
            Rat acc = 0;
            for (const auto& t : s.mul_basis(i, av).terms()) acc += t.second * tr2[t.first];
            m2.at(av, i) = acc;
        }
    if (kernel_basis(m2).cols() != 0) throw Error("radical: quotient is not semisimple");
    return j;
}

GradedIdeal power_ideal(const FinAlgebra& a, const GradedIdeal& j, int p) {
    if (p < 1) throw Error("power_ideal: p >= 1 required");
    RatMatrix cur = j.span;
    for (int step = 1; step < p; ++step) {
        if (cur.cols() == 0) break;
        std::vector<LinComb> prods;
        for (int u = 0; u < j.span.cols(); ++u)
            for (int v = 0; v < cur.cols(); ++v) {
                LinComb w = a.mul(j.span.col(u), cur.col(v));
                if (!w.zero()) prods.push_back(std::move(w));
            }
        cur = prods.empty() ? RatMatrix(a.dim(), 0)
                            : RatMatrix::from_cols(a.dim(), prods);
        cur = a.graded() ? column_span_canonical(cur) : column_span_canonical(cur);
    }
    if (cur.cols() > 0) cur = graded_canonical(a, cur);
    return GradedIdeal{cur};
}

int nilpotency_index(const FinAlgebra& a, const GradedIdeal& j) {
    RatMatrix cur = j.span;
    int p = 1;
    while (cur.cols() > 0) {
        if (p > a.dim())
            throw Error("ideal is not nilpotent (power exceeds algebra dimension)");
        std::vector<LinComb> prods;
        for (int u = 0; u < j.span.cols(); ++u)
            for (int v = 0; v < cur.cols(); ++v) {
                LinComb w = a.mul(j.span.col(u), cur.col(v));
                if (!w.zero()) prods.push_back(std::move(w));
            }
        cur = prods.empty() ? RatMatrix(a.dim(), 0)
                            : column_span_canonical(RatMatrix::from_cols(a.dim(), prods));
        ++p;
    }
    return p;
}

DGIdeal internal_ideal(const FinAlgebra& a, const GradedIdeal& i) {
    if (!a.has_differential()) throw Error("internal_ideal: algebra has no differential");
    const RatMatrix& b = i.span;
    RatMatrix db(a.dim(), b.cols());
    for (int c = 0; c < b.cols(); ++c) db.set_col(c, a.d(b.col(c)));
    // coefficients x with d(B x) = B y for some y: kernel of [dB | -B],
    // x components give I_-
    RatMatrix stacked(a.dim(), b.cols() * 2);
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
            stacked.at(r, c) = db.at(r, c);
            stacked.at(r, b.cols() + c) = -b.at(r, c);
        }
    }
    RatMatrix ker = kernel_basis(stacked);
    std::vector<LinComb> cols;
    for (int c = 0; c < ker.cols(); ++c) {
        LinComb v;
        for (int r = 0; r < b.cols(); ++r)
            if (ker.at(r, c) != 0) v.axpy(ker.at(r, c), b.col(r));
        if (!v.zero()) cols.push_back(std::move(v));
    }
    RatMatrix span = cols.empty() ? RatMatrix(a.dim(), 0)
                                  : RatMatrix::from_cols(a.dim(), cols);
    span = graded_canonical(a, span);
    DGIdeal out{span, true};
    if (!is_two_sided_ideal(a, span)) throw Error("internal ideal is not two-sided");
    // d-closure
    Echelon ech;
    for (int c = 0; c < span.cols(); ++c) ech.insert(span.col(c));
    for (int c = 0; c < span.cols(); ++c)
        if (!ech.reduce(a.d(span.col(c))).zero())
            throw Error("internal ideal is not d-closed");
    return out;
}

DGIdeal external_ideal(const FinAlgebra& a, const GradedIdeal& i) {
    if (!a.has_differential()) throw Error("external_ideal: algebra has no differential");
    std::vector<LinComb> cols;
    for (int c = 0; c < i.span.cols(); ++c) {
        cols.push_back(i.span.col(c));
        LinComb dv = a.d(i.span.col(c));
        if (!dv.zero()) cols.push_back(std::move(dv));
    }
    RatMatrix span = cols.empty() ? RatMatrix(a.dim(), 0)
                                  : RatMatrix::from_cols(a.dim(), cols);
    span = graded_canonical(a, span);
    if (!is_two_sided_ideal(a, span)) throw Error("external ideal is not two-sided");
    Echelon ech;
    for (int c = 0; c < span.cols(); ++c) ech.insert(span.col(c));
    for (int c = 0; c < span.cols(); ++c)
        if (!ech.reduce(a.d(span.col(c))).zero())
            throw Error("external ideal is not d-closed");
    return DGIdeal{span, true};
}

QuotientResult quotient(const FinAlgebra& a, const RatMatrix& ideal_span) {
    RatMatrix span = graded_canonical(a, ideal_span);
    if (!is_two_sided_ideal(a, span)) throw Error("quotient: span is not a two-sided ideal");
    if (a.has_differential()) {
        Echelon ech;
        for (int c = 0; c < span.cols(); ++c) ech.insert(span.col(c));
        for (int c = 0; c < span.cols(); ++c)
            if (!ech.reduce(a.d(span.col(c))).zero())
                throw Error("quotient: ideal is not d-closed but algebra has a differential");
    }

    Echelon ech;
    for (int c = 0; c < span.cols(); ++c) ech.insert(span.col(c));
    std::vector<int> comp;  // complement coordinates, ascending
    for (int i = 0; i < a.dim(); ++i)
        if (!ech.is_pivot(i)) comp.push_back(i);
    const int qn = static_cast<int>(comp.size());
    std::vector<int> coord_to_q(a.dim(), -1);
    for (int i = 0; i < qn; ++i) coord_to_q[comp[i]] = i;

    auto project = [&](const LinComb& v) {
        LinComb red = ech.reduce(v);
        std::vector<LinComb::Term> t;
        for (const auto& term : red.terms()) {
            if (coord_to_q[term.first] < 0)
                throw Error("quotient: reduction left a pivot coordinate");
            t.push_back({coord_to_q[term.first], term.second});
        }
        return LinComb(std::move(t));
    };

    AlgebraData out;
    for (int i = 0; i < qn; ++i) out.basis.push_back(a.basis_name(comp[i]));
    out.mult.resize(static_cast<size_t>(qn) * qn);
    for (int i = 0; i < qn; ++i)
        for (int j = 0; j < qn; ++j)
            out.mult[static_cast<size_t>(i) * qn + j] =
                project(a.mul_basis(comp[i], comp[j]));
    out.unit = project(a.unit());
    for (int e = 0; e < a.num_vertices(); ++e) {
        LinComb pe = project(a.idempotent(e));
        if (!pe.zero()) out.idempotents.push_back(std::move(pe));
    }
    if (a.graded()) {
        std::vector<int> g(qn);
        for (int i = 0; i < qn; ++i) g[i] = a.degree(comp[i]);
        out.grading = std::move(g);
    }
    if (a.has_differential()) {
        RatMatrix dq(qn, qn);
        for (int j = 0; j < qn; ++j)
            dq.set_col(j, project(a.d(LinComb::unit(comp[j]))));
        out.differential = std::move(dq);
    }

    RatMatrix projection(qn, a.dim());
    for (int j = 0; j < a.dim(); ++j) projection.set_col(j, project(LinComb::unit(j)));
    RatMatrix section(a.dim(), qn);
    for (int i = 0; i < qn; ++i) section.at(comp[i], i) = 1;

    return QuotientResult{FinAlgebra(std::move(out)), std::move(projection),
                          std::move(section)};
}

int GradedComplex::dim(int q) const {
    auto it = dims.find(q);
    return it == dims.end() ? 0 : it->second;
}

RatMatrix GradedComplex::d(int q) const {
    auto it = diff.find(q);
    if (it != diff.end()) return it->second;
    return RatMatrix(dim(q + 1), dim(q));
}

void GradedComplex::check() const {
    for (const auto& kv : diff) {
        int q = kv.first;
        if (kv.second.cols() != dim(q) || kv.second.rows() != dim(q + 1))
            throw Error("complex: differential shape mismatch at degree " +
                        std::to_string(q));
        RatMatrix next = d(q + 1);
        if (!(next * kv.second).is_zero())
            throw Error("complex: d^2 != 0 at degree " + std::to_string(q));
    }
}

std::map<int, int> cohomology_dims(const GradedComplex& c) {
    c.check();
    std::map<int, int> h;
    std::set<int> degs;
    for (const auto& kv : c.dims) degs.insert(kv.first);
    for (const auto& kv : c.diff) {
        degs.insert(kv.first);
        degs.insert(kv.first + 1);
    }
    for (int q : degs) {
        int dq = c.dim(q);
        if (dq == 0) continue;
        int rank_out = rank_of(c.d(q));
        int rank_in = rank_of(c.d(q - 1));
        int hq = dq - rank_out - rank_in;
        if (hq < 0) throw Error("complex: negative cohomology dimension");
        if (hq > 0) h[q] = hq;
    }
    return h;
}

bool is_acyclic(const GradedComplex& c) { return cohomology_dims(c).empty(); }

GradedComplex complex_of(const FinAlgebra& a) {
    GradedComplex c;
    for (int q : a.degrees_present()) {
        auto coords = a.coords_of_degree(q);
        if (!coords.empty()) c.dims[q] = static_cast<int>(coords.size());
    }
    if (a.has_differential()) {
        for (int q : a.degrees_present()) {
            auto from = a.coords_of_degree(q);
            auto to = a.coords_of_degree(q + 1);
            if (from.empty() || to.empty()) continue;
            RatMatrix m(static_cast<int>(to.size()), static_cast<int>(from.size()));
            for (size_t j = 0; j < from.size(); ++j) {
                LinComb dv = a.d(LinComb::unit(from[j]));
                for (const auto& t : dv.terms()) {
                    auto pos = std::lower_bound(to.begin(), to.end(), t.first);
                    if (pos == to.end() || *pos != t.first)
                        throw Error("complex_of: differential not degree +1");
                    m.at(static_cast<int>(pos - to.begin()), static_cast<int>(j)) = t.second;
                }
            }
            if (!m.is_zero()) c.diff[q] = std::move(m);
        }
    }
    return c;
}

std::map<int, int> cohomology_dims(const FinAlgebra& a) {
    return cohomology_dims(complex_of(a));
}

bool check_quotient_complex_acyclic(const FinAlgebra& a, const GradedIdeal& i) {
    if (!a.has_differential()) throw Error("algebra has no differential");
    DGIdeal minus = internal_ideal(a, i);
    DGIdeal plus = external_ideal(a, i);

    Echelon ech_minus;
    for (int c = 0; c < minus.span.cols(); ++c) ech_minus.insert(minus.span.col(c));

    // basis of I_+ / I_- : residues of I_+ vectors mod I_-
    Echelon residues(true);
    std::vector<LinComb> wbasis;
    for (int c = 0; c < plus.span.cols(); ++c) {
        LinComb r = ech_minus.reduce(plus.span.col(c));
        if (residues.insert(r)) wbasis.push_back(ech_minus.reduce(plus.span.col(c)));
    }
    // coordinates of quotient basis in its own span
    Echelon expr(true);
    for (const auto& w : wbasis) expr.insert(w);

    GradedComplex c;
    std::vector<int> wdeg(wbasis.size());
    for (size_t k = 0; k < wbasis.size(); ++k) {
        int deg = 0;
        if (!a.homogeneous(wbasis[k], &deg))
            throw Error("quotient complex basis vector is not homogeneous");
        wdeg[k] = deg;
        c.dims[deg] += 1;
    }
    // index of each basis vector within its degree block
    std::map<int, std::vector<int>> by_deg;
    for (size_t k = 0; k < wbasis.size(); ++k)
        by_deg[wdeg[k]].push_back(static_cast<int>(k));
    for (auto& kv : by_deg) {
        int q = kv.first;
        int next_dim = c.dims.count(q + 1) ? c.dims[q + 1] : 0;
        RatMatrix m(next_dim, static_cast<int>(kv.second.size()));
        bool nonzero = false;
        for (size_t j = 0; j < kv.second.size(); ++j) {
            LinComb dv = ech_minus.reduce(a.d(wbasis[kv.second[j]]));
            if (dv.zero()) continue;
            auto coeffs = expr.express(dv);
            if (!coeffs) throw Error("d does not preserve I_+ span");
            for (const auto& t : coeffs->terms()) {
                // t.first indexes wbasis; locate its position in degree q+1
                const auto& blk = by_deg[q + 1];
                auto pos = std::find(blk.begin(), blk.end(), t.first);
                if (pos == blk.end())
                    throw Error("d on quotient complex is not degree +1");
                m.at(static_cast<int>(pos - blk.begin()), static_cast<int>(j)) = t.second;
                nonzero = true;
            }
        }
        if (nonzero) c.diff[q] = std::move(m);
    }
    // drop zero-dim entries
    for (auto it = c.dims.begin(); it != c.dims.end();)
        it = it->second == 0 ? c.dims.erase(it) : std::next(it);
    return is_acyclic(c);
}

bool is_basic_s_split(const FinAlgebra& a) {
    GradedIdeal j = radical(a);
    return a.dim() - j.dim() == a.num_vertices();
}

AlgebraPtr shared_semisimple(int n) {
    static std::mutex mu;
    static std::map<int, AlgebraPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<FinAlgebra>(semisimple_algebra(n));
    cache[n] = p;
    return p;
}

FinAlgebra semisimple_algebra(int n) {
    if (n < 1) throw Error("semisimple_algebra: n >= 1");
    AlgebraData d;
    for (int i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i + 1));
    d.mult.resize(static_cast<size_t>(n) * n);
    std::vector<LinComb::Term> unit_terms;
    for (int i = 0; i < n; ++i) {
        d.mult[static_cast<size_t>(i) * n + i] = LinComb::unit(i);
        d.idempotents.push_back(LinComb::unit(i));
        unit_terms.push_back({i, Rat(1)});
    }
    d.unit = LinComb(std::move(unit_terms));
    return FinAlgebra(std::move(d));
}

}  // namespace finalg
