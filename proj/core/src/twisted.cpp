#include "finalg/twisted.hpp"

#include <algorithm>
#include <sstream>

namespace finalg {

namespace {

int deg_of(const FinAlgebra& a, int i) { return a.graded() ? a.degree(i) : 0; }

RatMatrix diff_or_zero(const FinAlgebra& a) {
    if (a.has_differential()) return a.differential();
    return RatMatrix(a.dim(), a.dim());
}

}  // namespace

std::optional<std::string> check_algebra_hom_impl(const FinAlgebra& from,
                                                  const FinAlgebra& to,
                                                  const RatMatrix& m,
                                                  bool check_chain) {
    if (m.rows() != to.dim() || m.cols() != from.dim())
        return "homomorphism matrix has wrong shape";
    for (int j = 0; j < from.dim(); ++j)
        for (int i = 0; i < to.dim(); ++i)
            if (m.at(i, j) != 0 && deg_of(to, i) != deg_of(from, j))
                return "map is not degree-preserving at " + from.basis_name(j);
    if (!(m.apply(from.unit()) == to.unit())) return "map does not preserve the unit";
    for (int i = 0; i < from.dim(); ++i) {
        LinComb mi = m.col(i);
        for (int j = 0; j < from.dim(); ++j) {
            LinComb lhs = m.apply(from.mul_basis(i, j));
            LinComb rhs = to.mul(mi, m.col(j));
            if (!(lhs == rhs))
                return "map is not multiplicative at (" + from.basis_name(i) + "," +
                       from.basis_name(j) + ")";
        }
    }
    if (check_chain && (from.has_differential() || to.has_differential())) {
        RatMatrix lhs = diff_or_zero(to) * m;
        RatMatrix rhs = m * diff_or_zero(from);
        if (!(lhs == rhs)) return "map is not a chain map";
    }
    return std::nullopt;
}

std::optional<std::string> check_algebra_hom(const FinAlgebra& from,
                                             const FinAlgebra& to,
                                             const RatMatrix& m) {
    return check_algebra_hom_impl(from, to, m, true);
}

void RRing::check() const {
    if (!alg || !base) throw Error("RRing: missing algebra or base");
    if (auto why = check_algebra_hom(*base, *alg, eps))
        throw Error("RRing: eps is not a morphism: " + *why);
    if (pi) {
        if (auto why = check_algebra_hom(*alg, *base, *pi))
            throw Error("RRing: pi is not a morphism: " + *why);
        RatMatrix comp = *pi * eps;
        if (!(comp == RatMatrix::identity(base->dim())))
            throw Error("RRing: pi . eps != id");
    }
}

LinComb RRing::pi_of(const LinComb& a) const {
    if (!pi) throw Error("RRing: missing augmentation");
    return pi->apply(a);
}

LinComb TensorSpace::to_quotient(const LinComb& full) const {
    LinComb red = relations.reduce(full);
    std::vector<LinComb::Term> t;
    for (const auto& term : red.terms()) {
        int q = full_to_q[term.first];
        if (q < 0) throw Error("tensor reduction left a pivot coordinate");
        t.push_back({q, term.second});
    }
    return LinComb(std::move(t));
}

LinComb TensorSpace::from_quotient(const LinComb& qv) const {
    std::vector<LinComb::Term> t;
    for (const auto& term : qv.terms())
        t.push_back({full_coord(basis[term.first].first, basis[term.first].second),
                     term.second});
    return LinComb(std::move(t));
}

TensorSpace tensor_over_R(const RRing& a, const RRing& b) {
    if (a.base != b.base) throw Error("tensor_over_R: factors have different bases");
    TensorSpace ts;
    ts.dimA = a.alg->dim();
    ts.dimB = b.alg->dim();
    const FinAlgebra& A = *a.alg;
    const FinAlgebra& B = *b.alg;
    const int dimR = a.base->dim();
    for (int p = 0; p < ts.dimA; ++p)
        for (int t = 0; t < dimR; ++t) {
            LinComb ar = A.mul(LinComb::unit(p), a.eps.col(t));
            for (int q = 0; q < ts.dimB; ++q) {
                LinComb rel;
                for (const auto& x : ar.terms())
                    rel.set(ts.full_coord(x.first, q), x.second);
                LinComb rbq = B.mul(b.eps.col(t), LinComb::unit(q));
                for (const auto& y : rbq.terms()) {
                    Rat cur = rel.coeff(ts.full_coord(p, y.first));
                    rel.set(ts.full_coord(p, y.first), cur - y.second);
                }
                if (!rel.zero()) ts.relations.insert(std::move(rel));
            }
        }
    ts.full_to_q.assign(static_cast<size_t>(ts.dimA) * ts.dimB, -1);
    for (int i = 0; i < ts.dimA; ++i)
        for (int j = 0; j < ts.dimB; ++j) {
            int f = ts.full_coord(i, j);
            if (!ts.relations.is_pivot(f)) {
                ts.full_to_q[f] = static_cast<int>(ts.basis.size());
                ts.basis.push_back({i, j});
            }
        }
    return ts;
}

LinComb TwistingMap::apply_full(const LinComb& ba_full) const {
    LinComb out;
    for (const auto& t : ba_full.terms()) out.axpy(t.second, image[t.first]);
    return out;
}

namespace {

// a (x) b expanded bilinearly into full tensor coordinates of ts
LinComb tensor_full(const TensorSpace& ts, const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out.set(ts.full_coord(x.first, y.first),
                    out.coeff(ts.full_coord(x.first, y.first)) + x.second * y.second);
    return out;
}

}  // namespace

TwistingMap canonical_v(const RRing& a, const RRing& b, const TensorSpace& ab) {
    if (!a.augmented() || !b.augmented())
        throw Error("canonical_v: both factors must be augmented");
    const FinAlgebra& A = *a.alg;
    const FinAlgebra& B = *b.alg;
    TwistingMap tau;
    tau.dimA = A.dim();
    tau.dimB = B.dim();
    tau.image.resize(static_cast<size_t>(A.dim()) * B.dim());
    for (int j = 0; j < B.dim(); ++j) {
        LinComb eb = a.eps.apply(b.pi_of(LinComb::unit(j)));  // eps_A(pi_B(b))
        for (int i = 0; i < A.dim(); ++i) {
            LinComb ea = b.eps.apply(a.pi_of(LinComb::unit(i)));  // eps_B(pi_A(a))
            LinComb full = tensor_full(ab, A.mul(eb, LinComb::unit(i)), B.unit());
            full.axpy(Rat(1), tensor_full(ab, A.unit(), B.mul(LinComb::unit(j), ea)));
            full.axpy(Rat(-1), tensor_full(ab, eb, ea));
            tau.image[static_cast<size_t>(j) * A.dim() + i] = ab.reduce_full(full);
        }
    }
    return tau;
}

std::string TwistReport::str() const {
    if (ok()) return "twisting verified";
    std::ostringstream os;
    for (const auto& v : violations) os << v << "\n";
    return os.str();
}

TwistReport verify_twisting(const RRing& a, const RRing& b, const TwistingMap& tau,
                            const TensorSpace& ab, const TensorSpace& ba) {
    TwistReport rep;
    const FinAlgebra& A = *a.alg;
    const FinAlgebra& B = *b.alg;
    const int nA = A.dim(), nB = B.dim();
    auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };

    if (tau.dimA != nA || tau.dimB != nB ||
        static_cast<int>(tau.image.size()) != nA * nB) {
        fail("twisting map has wrong shape");
        return rep;
    }

    // well-definedness on the balanced quotient
    for (const auto& row : ba.relations.rows())
        if (!ab.reduce_full(tau.apply_full(row)).zero()) {
            fail("twisting map is not well-defined on the balanced tensor product");
            break;
        }

    // degree 0 when graded
    if (A.graded() || B.graded()) {
        for (int j = 0; j < nB && rep.violations.size() < 8; ++j)
            for (int i = 0; i < nA; ++i) {
                int want = deg_of(B, j) + deg_of(A, i);
                for (const auto& t : tau.image[static_cast<size_t>(j) * nA + i].terms()) {
                    int p = t.first / nB, q = t.first % nB;
                    if (deg_of(A, p) + deg_of(B, q) != want) {
                        fail("twisting map is not degree 0 at (" + B.basis_name(j) +
                             "," + A.basis_name(i) + ")");
                        break;
                    }
                }
            }
    }

    // unit fixing: tau(1 (x) a) = a (x) 1, tau(b (x) 1) = 1 (x) b
    for (int i = 0; i < nA; ++i) {
        LinComb lhs = ab.reduce_full(
            tau.apply_full(tensor_full(ba, B.unit(), LinComb::unit(i))));
        LinComb rhs = ab.reduce_full(tensor_full(ab, LinComb::unit(i), B.unit()));
        if (!(lhs == rhs)) {
            fail("unit fixing fails: tau(1 (x) " + A.basis_name(i) + ") != " +
                 A.basis_name(i) + " (x) 1");
            break;
        }
    }
    for (int j = 0; j < nB; ++j) {
        LinComb lhs = ab.reduce_full(
            tau.apply_full(tensor_full(ba, LinComb::unit(j), A.unit())));
        LinComb rhs = ab.reduce_full(tensor_full(ab, A.unit(), LinComb::unit(j)));
        if (!(lhs == rhs)) {
            fail("unit fixing fails: tau(" + B.basis_name(j) + " (x) 1) != 1 (x) " +
                 B.basis_name(j));
            break;
        }
    }

    // R-bimodule property
    const int nR = a.base->dim();
    bool bimodule_ok = true;
    for (int t = 0; t < nR && bimodule_ok; ++t) {
        LinComb ra = a.eps.col(t);  // eps_A(r)
        LinComb rb = b.eps.col(t);  // eps_B(r)
        for (int j = 0; j < nB && bimodule_ok; ++j)
            for (int i = 0; i < nA; ++i) {
                // left: tau(eps_B(r) b (x) a) = eps_A(r) . tau(b (x) a)
                LinComb lhs = ab.reduce_full(
                    tau.apply_full(tensor_full(ba, B.mul(rb, LinComb::unit(j)),
                                               LinComb::unit(i))));
                LinComb rhs;
                for (const auto& term : tau.image[static_cast<size_t>(j) * nA + i].terms()) {
                    int p = term.first / nB, q = term.first % nB;
                    rhs.axpy(term.second,
                             tensor_full(ab, A.mul(ra, LinComb::unit(p)), LinComb::unit(q)));
                }
                if (!(lhs == ab.reduce_full(rhs))) {
                    fail("left R-linearity fails at (" + B.basis_name(j) + "," +
                         A.basis_name(i) + ")");
                    bimodule_ok = false;
                    break;
                }
                // right: tau(b (x) a eps_A(r)) = tau(b (x) a) . eps_B(r)
                lhs = ab.reduce_full(tau.apply_full(
                    tensor_full(ba, LinComb::unit(j), A.mul(LinComb::unit(i), ra))));
                LinComb rhs2;
                for (const auto& term : tau.image[static_cast<size_t>(j) * nA + i].terms()) {
                    int p = term.first / nB, q = term.first % nB;
                    rhs2.axpy(term.second,
                              tensor_full(ab, LinComb::unit(p), B.mul(LinComb::unit(q), rb)));
                }
                if (!(lhs == ab.reduce_full(rhs2))) {
                    fail("right R-linearity fails at (" + B.basis_name(j) + "," +
                         A.basis_name(i) + ")");
                    bimodule_ok = false;
                    break;
                }
            }
    }

    // chain map when differentials are present
    if (A.has_differential() || B.has_differential()) {
        RatMatrix dA = diff_or_zero(A), dB = diff_or_zero(B);
        for (int j = 0; j < nB; ++j)
            for (int i = 0; i < nA; ++i) {
                LinComb lhs = tau.apply_full(tensor_full(ba, dB.col(j), LinComb::unit(i)));
                int sgn = (deg_of(B, j) % 2 != 0) ? -1 : 1;
                lhs.axpy(Rat(sgn),
                         tau.apply_full(tensor_full(ba, LinComb::unit(j), dA.col(i))));
                // d_{A (x) B} of the image
                LinComb rhs;
                for (const auto& term : tau.image[static_cast<size_t>(j) * nA + i].terms()) {
                    int p = term.first / nB, q = term.first % nB;
                    rhs.axpy(term.second, tensor_full(ab, dA.col(p), LinComb::unit(q)));
                    int s2 = (deg_of(A, p) % 2 != 0) ? -1 : 1;
                    rhs.axpy(term.second * s2,
                             tensor_full(ab, LinComb::unit(p), dB.col(q)));
                }
                if (!(ab.reduce_full(lhs) == ab.reduce_full(rhs))) {
                    fail("twisting map is not a chain map at (" + B.basis_name(j) +
                         "," + A.basis_name(i) + ")");
                    j = nB;
                    break;
                }
            }
    }

    // hexagon on all basis quadruples (b, b', a, a')
    int hexagon_witnesses = 0;
    for (int j1 = 0; j1 < nB && hexagon_witnesses < 3; ++j1)
        for (int j2 = 0; j2 < nB && hexagon_witnesses < 3; ++j2)
            for (int i1 = 0; i1 < nA && hexagon_witnesses < 3; ++i1)
                for (int i2 = 0; i2 < nA; ++i2) {
                    // LHS: tau(mu_B (x) mu_A)
                    LinComb lhs = ab.reduce_full(tau.apply_full(
                        tensor_full(ba, B.mul_basis(j1, j2), A.mul_basis(i1, i2))));
                    // RHS chain through B(x)A(x)B(x)A -> ... -> A(x)B
                    // step 1: middle pair (b', a)
                    const LinComb& mid = tau.image[static_cast<size_t>(j2) * nA + i1];
                    // accumulated terms: (j1, p, q, i2) with p in A, q in B
                    LinComb rhs;  // final full AB coords
                    for (const auto& m1 : mid.terms()) {
                        int p1 = m1.first / nB, q1 = m1.first % nB;
                        // step 2: tau on (j1, p1) and on (q1, i2)
                        const LinComb& left = tau.image[static_cast<size_t>(j1) * nA + p1];
                        const LinComb& right = tau.image[static_cast<size_t>(q1) * nA + i2];
                        for (const auto& m2 : left.terms()) {
                            int p2 = m2.first / nB, q2 = m2.first % nB;
                            for (const auto& m3 : right.terms()) {
                                int p3 = m3.first / nB, q3 = m3.first % nB;
                                // now (p2 in A, q2 in B, p3 in A, q3 in B)
                                // step 3: tau on middle (q2, p3)
                                const LinComb& mid2 =
                                    tau.image[static_cast<size_t>(q2) * nA + p3];
                                for (const auto& m4 : mid2.terms()) {
                                    int p4 = m4.first / nB, q4 = m4.first % nB;
                                    // step 4: mu_A (x) mu_B on (p2, p4, q4, q3)
                                    Rat c = m1.second * m2.second * m3.second * m4.second;
                                    rhs.axpy(c, tensor_full(ab, A.mul_basis(p2, p4),
                                                            B.mul_basis(q4, q3)));
                                }
                            }
                        }
                    }
                    if (!(lhs == ab.reduce_full(rhs))) {
                        fail("hexagon fails at (" + B.basis_name(j1) + "," +
                             B.basis_name(j2) + "," + A.basis_name(i1) + "," +
                             A.basis_name(i2) + ")");
                        if (++hexagon_witnesses >= 3) break;
                    }
                }

    return rep;
}

NablaDeformation NablaDeformation::zero(int dim_b) {
    NablaDeformation n;
    n.image.resize(dim_b);
    return n;
}

LinComb ProductAlgebra::tensor_elem(const LinComb& a, const LinComb& b) const {
    return space.to_quotient(tensor_full(space, a, b));
}

namespace {

ProductAlgebra build_product(const RRing& a, const RRing& b, const TwistingMap& tau,
                             const NablaDeformation* nabla, bool verify) {
    a.check();
    b.check();
    const FinAlgebra& A = *a.alg;
    const FinAlgebra& B = *b.alg;
    TensorSpace ab = tensor_over_R(a, b);
    TensorSpace ba = tensor_over_R(b, a);

    if (verify) {
        TwistReport rep = verify_twisting(a, b, tau, ab, ba);
        if (!rep.ok()) throw Error("twisting verification failed:\n" + rep.str());
    }

    const int n = ab.dim();
    AlgebraData data;
    data.basis.reserve(n);
    for (const auto& [i, j] : ab.basis)
        data.basis.push_back(A.basis_name(i) + "⊗" + B.basis_name(j));

    data.mult.resize(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        auto [i1, j1] = ab.basis[u];
        for (int v = 0; v < n; ++v) {
            auto [i2, j2] = ab.basis[v];
            const LinComb& tw = tau.image[static_cast<size_t>(j1) * A.dim() + i2];
            LinComb full;
            for (const auto& t : tw.terms()) {
                int p = t.first / B.dim(), q = t.first % B.dim();
                full.axpy(t.second, tensor_full(ab, A.mul_basis(i1, p), B.mul_basis(q, j2)));
            }
            data.mult[static_cast<size_t>(u) * n + v] = ab.to_quotient(full);
        }
    }
    data.unit = ab.to_quotient(tensor_full(ab, A.unit(), B.unit()));
    for (int r = 0; r < a.base->num_vertices(); ++r) {
        LinComb er = a.eps.apply(a.base->idempotent(r));
        data.idempotents.push_back(ab.to_quotient(tensor_full(ab, er, B.unit())));
    }
    if (A.graded() || B.graded()) {
        std::vector<int> g(n);
        for (int u = 0; u < n; ++u)
            g[u] = deg_of(A, ab.basis[u].first) + deg_of(B, ab.basis[u].second);
        data.grading = std::move(g);
    }

    const bool dg = A.has_differential() || B.has_differential() || nabla;
    if (dg) {
        if (!data.grading) data.grading = std::vector<int>(n, 0);
        RatMatrix dA = diff_or_zero(A), dB = diff_or_zero(B);
        RatMatrix dC(n, n);
        for (int u = 0; u < n; ++u) {
            auto [i, j] = ab.basis[u];
            LinComb full = tensor_full(ab, dA.col(i), LinComb::unit(j));
            int sgn = (deg_of(A, i) % 2 != 0) ? -1 : 1;
            full.axpy(Rat(sgn), tensor_full(ab, LinComb::unit(i), dB.col(j)));
            if (nabla && !nabla->image[j].zero()) {
                // a . nabla(1 (x) b): left multiplication by i_A(e_i)
                LinComb shifted;
                for (const auto& t : nabla->image[j].terms()) {
                    int p = t.first / B.dim(), q = t.first % B.dim();
                    shifted.axpy(t.second,
                                 tensor_full(ab, A.mul_basis(i, p), LinComb::unit(q)));
                }
                full.axpy(Rat(sgn), shifted);
            }
            dC.set_col(u, ab.to_quotient(full));
        }
        // to_quotient output is in quotient coords already
        data.differential = std::move(dC);
    }

    ProductAlgebra prod{FinAlgebra(std::move(data)), std::move(ab),
                        a.alg, b.alg, a.base,
                        RatMatrix(), RatMatrix(), std::nullopt,
                        RatMatrix(), std::nullopt};

    // embeddings
    RatMatrix ia(n, A.dim());
    for (int i = 0; i < A.dim(); ++i)
        ia.set_col(i, prod.space.to_quotient(
                          tensor_full(prod.space, LinComb::unit(i), B.unit())));
    RatMatrix ib(n, B.dim());
    for (int j = 0; j < B.dim(); ++j)
        ib.set_col(j, prod.space.to_quotient(
                          tensor_full(prod.space, A.unit(), LinComb::unit(j))));
    if (auto why = check_algebra_hom_impl(A, prod.algebra, ia, true))
        throw Error("twisted product: i_A is not a morphism: " + *why);
    bool ib_chain = !nabla;  // nabla deforms d on 1 (x) B
    if (auto why = check_algebra_hom_impl(B, prod.algebra, ib, ib_chain))
        throw Error("twisted product: i_B is not a morphism: " + *why);
    if (rank_of(ia) != A.dim()) throw Error("twisted product: i_A is not injective");
    if (rank_of(ib) != B.dim()) throw Error("twisted product: i_B is not injective");
    prod.embed_a = std::move(ia);
    prod.embed_b = std::move(ib);

    if (a.augmented()) {
        RatMatrix pb(B.dim(), n);
        for (int u = 0; u < n; ++u) {
            auto [i, j] = prod.space.basis[u];
            LinComb r = a.pi_of(LinComb::unit(i));
            pb.set_col(u, B.mul(b.eps.apply(r), LinComb::unit(j)));
        }
        bool pb_ok =
            !check_algebra_hom_impl(prod.algebra, B, pb, true).has_value();
        if (pb_ok)
            prod.project_b = std::move(pb);
        else if (nabla)
            throw Error("dg twisted product: p_B is not a DG morphism");
    }

    prod.eps_c = prod.embed_a * a.eps;
    if (a.augmented() && b.augmented()) {
        RatMatrix pic(a.base->dim(), n);
        for (int u = 0; u < n; ++u) {
            auto [i, j] = prod.space.basis[u];
            pic.set_col(u, a.base->mul(a.pi_of(LinComb::unit(i)),
                                       b.pi_of(LinComb::unit(j))));
        }
        if (!check_algebra_hom_impl(prod.algebra, *a.base, pic, true))
            prod.pi_c = std::move(pic);
    }
    return prod;
}

}  // namespace

ProductAlgebra twisted_product(const RRing& a, const RRing& b, const TwistingMap& tau,
                               bool verify) {
    return build_product(a, b, tau, nullptr, verify);
}

ProductAlgebra dg_twisted_product(const RRing& a, const RRing& b, const TwistingMap& tau,
                                  const NablaDeformation& nabla, bool verify) {
    if (!a.augmented()) throw Error("dg_twisted_product: A must be augmented");
    if (static_cast<int>(nabla.image.size()) != b.alg->dim())
        throw Error("dg_twisted_product: nabla has wrong size");
    // nabla image must lie in I_A (x)_R B and raise degree by exactly 1
    TensorSpace ab = tensor_over_R(a, b);
    RatMatrix ia_span = kernel_basis(*a.pi);  // I_A = ker(pi_A)
    Echelon ideal_tensor;
    for (int c = 0; c < ia_span.cols(); ++c)
        for (int j = 0; j < b.alg->dim(); ++j)
            ideal_tensor.insert(ab.reduce_full(
                tensor_full(ab, ia_span.col(c), LinComb::unit(j))));
    for (int j = 0; j < b.alg->dim(); ++j) {
        const LinComb& img = nabla.image[j];
        if (img.zero()) continue;
        if (!ideal_tensor.reduce(ab.reduce_full(img)).zero())
            throw Error("dg_twisted_product: nabla image escapes I_A (x) B at " +
                        b.alg->basis_name(j));
        int want = deg_of(*b.alg, j) + 1;
        for (const auto& t : img.terms()) {
            int p = t.first / b.alg->dim(), q = t.first % b.alg->dim();
            if (deg_of(*a.alg, p) + deg_of(*b.alg, q) != want)
                throw Error("dg_twisted_product: nabla is not of degree +1 at " +
                            b.alg->basis_name(j));
        }
    }
    try {
        return build_product(a, b, tau, &nabla, verify);
    } catch (const Error& e) {
        throw Error(std::string("dg_twisted_product: ") + e.what());
    }
}

RRing product_rring(const ProductAlgebra& c) {
    RRing r;
    r.alg = std::make_shared<FinAlgebra>(c.algebra);
    r.base = c.base;
    r.eps = c.eps_c;
    if (c.pi_c) r.pi = *c.pi_c;
    r.check();
    return r;
}

RatMatrix hom_from_generators(const PresentedAlgebra& p, const FinAlgebra& target,
                              const std::vector<LinComb>& vertex_images,
                              const std::vector<LinComb>& arrow_images) {
    if (static_cast<int>(vertex_images.size()) != p.quiver.vertices ||
        arrow_images.size() != p.quiver.arrows.size())
        throw Error("hom_from_generators: image list size mismatch");
    RatMatrix m(target.dim(), p.algebra.dim());
    for (size_t k = 0; k < p.basis_paths.size(); ++k) {
        const Path& path = p.basis_paths[k];
        LinComb img;
        if (path.length() == 0) {
            img = vertex_images[path.base];
        } else {
            img = arrow_images[path.arrows[0]];
            for (int s = 1; s < path.length(); ++s)
                img = target.mul(arrow_images[path.arrows[s]], img);
        }
        m.set_col(static_cast<int>(k), img);
    }
    return m;
}

bool is_bijective(const RatMatrix& m) {
    return m.rows() == m.cols() && rank_of(m) == m.rows();
}

RRing split_over_vertices(const PresentedAlgebra& p, AlgebraPtr s) {
    if (s->dim() != p.quiver.vertices)
        throw Error("split_over_vertices: vertex count mismatch");
    RRing r;
    r.alg = std::make_shared<FinAlgebra>(p.algebra);
    r.base = std::move(s);
    RatMatrix eps(p.algebra.dim(), r.base->dim());
    for (int v = 0; v < p.quiver.vertices; ++v) eps.set_col(v, p.vertex_elem(v));
    RatMatrix pi(r.base->dim(), p.algebra.dim());
    for (size_t k = 0; k < p.basis_paths.size(); ++k)
        if (p.basis_paths[k].length() == 0)
            pi.at(p.basis_paths[k].base, static_cast<int>(k)) = 1;
    r.eps = std::move(eps);
    r.pi = std::move(pi);
    r.check();
    return r;
}

RRing split_over_vertices(AlgebraPtr alg, AlgebraPtr s) {
    if (s->dim() != alg->num_vertices())
        throw Error("split_over_vertices: vertex count mismatch");
    RRing r;
    r.alg = alg;
    r.base = std::move(s);
    RatMatrix eps(alg->dim(), r.base->dim());
    for (int v = 0; v < alg->num_vertices(); ++v) eps.set_col(v, alg->idempotent(v));
    // pi: kill the radical, identify A/J with the base via idempotent images
    GradedIdeal j = radical(*alg);
    QuotientResult q = quotient(*alg, j.span);
    if (q.algebra.dim() != r.base->dim())
        throw Error("split_over_vertices: algebra is not basic over this base");
    RatMatrix e(q.algebra.dim(), r.base->dim());
    for (int v = 0; v < alg->num_vertices(); ++v)
        e.set_col(v, q.projection.apply(alg->idempotent(v)));
    auto einv = solve(e, RatMatrix::identity(q.algebra.dim()));
    if (!einv) throw Error("split_over_vertices: idempotent images are dependent");
    r.pi = *einv * q.projection;
    r.eps = std::move(eps);
    r.check();
    return r;
}

}  // namespace finalg
