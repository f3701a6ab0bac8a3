#include "finalg/families.hpp"

#include <algorithm>
#include <random>

namespace finalg {

namespace {

AugmentedAlgebra augmented(PresentedAlgebra pres) {
    AlgebraPtr s = shared_semisimple(pres.quiver.vertices);
    RRing r = split_over_vertices(pres, s);
    return AugmentedAlgebra{std::move(pres), s, std::move(r)};
}

}  // namespace

AugmentedAlgebra kronecker(int n, const std::vector<int>& degrees, bool op) {
    if (n < 0) throw Error("kronecker: n >= 0");
    if (!degrees.empty() && static_cast<int>(degrees.size()) != n)
        throw Error("kronecker: degree list size mismatch");
    Quiver q;
    q.vertices = 2;
    for (int i = 0; i < n; ++i) {
        int d = degrees.empty() ? 0 : degrees[i];
        if (op)
            q.arrows.push_back({"b" + std::to_string(i + 1), 1, 0, d});
        else
            q.arrows.push_back({"c" + std::to_string(i + 1), 0, 1, d});
    }
    return augmented(quotient_algebra(q, RelationSet{{}, 2}));
}

AugmentedAlgebra green(int k) {
    if (k < 0) throw Error("green: k >= 0");
    int nc = (k + 1) / 2, nb = k / 2;
    Quiver q;
    q.vertices = 2;
    std::vector<int> cidx, bidx;
    for (int i = 0; i < nc; ++i) {
        cidx.push_back(static_cast<int>(q.arrows.size()));
        q.arrows.push_back({"c" + std::to_string(i + 1), 0, 1, 0});
    }
    for (int i = 0; i < nb; ++i) {
        bidx.push_back(static_cast<int>(q.arrows.size()));
        q.arrows.push_back({"b" + std::to_string(i + 1), 1, 0, 0});
    }
    RelationSet rs;
    rs.trunc = std::max(2, k + 2);
    for (int j = 1; j <= nc; ++j)
        for (int i = 1; i <= nb; ++i) {
            if (j <= i) rs.rels.push_back({{{Rat(1), {bidx[i - 1], cidx[j - 1]}}}});
            if (i < j) rs.rels.push_back({{{Rat(1), {cidx[j - 1], bidx[i - 1]}}}});
        }
    return augmented(quotient_algebra(q, rs));
}

namespace {

RRing identity_rring(AlgebraPtr s) {
    RRing r;
    r.alg = s;
    r.base = s;
    r.eps = RatMatrix::identity(s->dim());
    r.pi = RatMatrix::identity(s->dim());
    return r;
}

ProductAlgebra fold_products(AlgebraPtr s, const std::vector<RRing>& factors) {
    if (factors.empty()) throw Error("iterated product needs at least one factor");
    RRing cur = identity_rring(s);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        TensorSpace ab = tensor_over_R(*it, cur);
        TwistingMap v = canonical_v(*it, cur, ab);
        ProductAlgebra prod = twisted_product(*it, cur, v);
        cur = product_rring(prod);
        if (std::next(it) == factors.rend()) return prod;
    }
    throw Error("unreachable");
}

}  // namespace

ProductAlgebra generalized_green(const std::vector<GreenFactor>& factors) {
    AlgebraPtr s = shared_semisimple(2);
    std::vector<RRing> rings;
    for (const auto& f : factors)
        rings.push_back(kronecker(f.arrows, f.degrees, f.op).rring);
    return fold_products(s, rings);
}

AugmentedAlgebra kij_algebra(int vertices, const KijFactor& f) {
    if (f.i < 1 || f.j < 1 || f.i > vertices || f.j > vertices || f.i == f.j)
        throw Error("kij_algebra: bad vertex pair");
    if (f.count < 1) throw Error("kij_algebra: count >= 1");
    Quiver q;
    q.vertices = vertices;
    for (long s = 0; s < f.count; ++s)
        q.arrows.push_back({"a" + std::to_string(f.i) + "_" + std::to_string(f.j) +
                                "_" + std::to_string(s + 1),
                            f.i - 1, f.j - 1, f.d});
    return augmented(quotient_algebra(q, RelationSet{{}, 2}));
}

ProductAlgebra generalized_green_n(int vertices, const std::vector<KijFactor>& factors) {
    AlgebraPtr s = shared_semisimple(vertices);
    std::vector<RRing> rings;
    for (const auto& f : factors) rings.push_back(kij_algebra(vertices, f).rring);
    return fold_products(s, rings);
}

ProductAlgebra e_family(int p, int q, int delta) {
    std::vector<GreenFactor> f;
    f.push_back({p, true, {}});
    f.push_back({1, false, {}});
    f.push_back({1, true, {delta}});
    f.push_back({q, false, {}});
    return generalized_green(f);
}

void SubspaceFamily::check() const {
    if (!(0 < k && k < n)) throw Error("family: 0 < k < n required");
    if (static_cast<int>(v.size()) != m || static_cast<int>(w.size()) != m)
        throw Error("family: wrong number of subspaces");
    for (int i = 0; i < m; ++i) {
        if (v[i].rows() != n || v[i].cols() != k || rank_of(v[i]) != k)
            throw Error("family: V_" + std::to_string(i + 1) + " is not n x k of rank k");
        if (w[i].rows() != n || w[i].cols() != n - k || rank_of(w[i]) != n - k)
            throw Error("family: W_" + std::to_string(i + 1) +
                        " is not n x (n-k) of rank n-k");
    }
}

std::vector<std::vector<int>> SubspaceFamily::t_table() const {
    std::vector<std::vector<int>> t(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[i][j] = subspace_intersection(v[i], w[j]).cols();
    return t;
}

LinComb RFamilyAlgebra::c_elem(const LinComb& coords) const {
    LinComb out;
    for (const auto& t : coords.terms()) out.axpy(t.second, c_arrow(t.first));
    return out;
}

RFamilyAlgebra r_family(const SubspaceFamily& f) {
    f.check();
    const int n = f.n, m = f.m, k = f.k;
    Quiver q;
    q.vertices = 2;
    for (int l = 0; l < n; ++l)
        q.arrows.push_back({"c" + std::to_string(l + 1), 0, 1, 0});
    for (int i = 0; i < m; ++i)
        q.arrows.push_back({"b" + std::to_string(i + 1), 1, 0, 0});
    auto carr = [](int l) { return l; };
    auto barr = [n](int i) { return n + i; };

    RelationSet rs;
    rs.trunc = 4;
    // (1) b c b' = 0
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < m; ++j)
                rs.rels.push_back({{{Rat(1), {barr(j), carr(l), barr(i)}}}});
    // (2) w b_i = 0 for w in W_i
    for (int i = 0; i < m; ++i)
        for (int col = 0; col < n - k; ++col) {
            Relation rel;
            for (int l = 0; l < n; ++l) {
                const Rat& cl = f.w[i].at(l, col);
                if (cl != 0) rel.terms.push_back({cl, {barr(i), carr(l)}});
            }
            rs.rels.push_back(std::move(rel));
        }
    // (3) b_i v = 0 for v in V_i
    for (int i = 0; i < m; ++i)
        for (int col = 0; col < k; ++col) {
            Relation rel;
            for (int l = 0; l < n; ++l) {
                const Rat& cl = f.v[i].at(l, col);
                if (cl != 0) rel.terms.push_back({cl, {carr(l), barr(i)}});
            }
            rs.rels.push_back(std::move(rel));
        }

    PresentedAlgebra pres = quotient_algebra(q, rs);

    // component dimensions per the structural decomposition
    int d11 = 0, d12 = 0, d21 = 0, d22 = 0;
    for (const auto& p : pres.basis_paths) {
        int s = p.source(), t = p.target(q);
        if (s == 0 && t == 0) ++d11;
        if (s == 1 && t == 0) ++d12;
        if (s == 0 && t == 1) ++d21;
        if (s == 1 && t == 1) ++d22;
    }
    if (d11 != 1 + m * (n - k) || d12 != m || d21 != n + m * k * (n - k) ||
        d22 != 1 + m * k)
        throw Error("r_family: component dimensions disagree with the structural count");

    AugmentedAlgebra aug = augmented(std::move(pres));
    return RFamilyAlgebra{f, std::move(aug.pres), aug.s, std::move(aug.rring)};
}

GammaQuiver gamma_quiver(const SubspaceFamily& f) {
    f.check();
    GammaQuiver g;
    g.m = f.m;
    g.t = f.t_table();
    for (int i = 0; i < f.m; ++i)
        if (g.t[i][i] != 0) g.has_loop = true;
    if (g.has_loop) return g;
    Quiver q;
    q.vertices = 2 * f.m;  // b_i = i, v_i = m + i
    for (int i = 0; i < f.m; ++i)
        q.arrows.push_back({"b" + std::to_string(i + 1) + "v" + std::to_string(i + 1),
                            i, f.m + i, 0});
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.m; ++j)
            for (int s = 0; s < g.t[i][j]; ++s) {
                q.arrows.push_back({"b" + std::to_string(i + 1) + "b" +
                                        std::to_string(j + 1) + "_" + std::to_string(s + 1),
                                    i, j, 0});
                q.arrows.push_back({"v" + std::to_string(i + 1) + "b" +
                                        std::to_string(j + 1) + "_" + std::to_string(s + 1),
                                    f.m + i, j, 0});
            }
    g.quiver = std::move(q);
    return g;
}

GldimVerdict gldim_by_criterion(const SubspaceFamily& f) {
    GammaQuiver g = gamma_quiver(f);
    GldimVerdict v;
    if (g.has_loop) return v;  // infinite
    LongestPathResult lp = longest_path(*g.quiver);
    if (lp.cycle) return v;  // infinite
    v.finite = true;
    v.longest = lp.length;
    v.value = lp.length + 2;
    return v;
}

SubspaceFamily kk_family(int m) {
    if (m < 2) throw Error("kk_family: requires m >= 2 (k < n fails at m = 1)");
    SubspaceFamily f;
    f.n = m;
    f.m = m;
    f.k = 1;
    for (int i = 1; i <= m; ++i) {
        RatMatrix vi(m, 1);
        vi.at(i - 1, 0) = 1;
        f.v.push_back(std::move(vi));
        RatMatrix wi(m, m - 1);
        int col = 0;
        for (int l = m; l > i; --l) wi.at(l - 1, col++) = 1;  // a_n .. a_{i+1}
        for (int l = i; l >= 2; --l) {                        // a_l - a_1
            wi.at(l - 1, col) = 1;
            wi.at(0, col) = -1;
            ++col;
        }
        f.w.push_back(std::move(wi));
    }
    f.check();
    return f;
}

SubspaceFamily random_family(int n, int m, int k, std::uint64_t seed) {
    if (!(0 < k && k < n)) throw Error("random_family: 0 < k < n required");
    std::mt19937_64 rng(seed);
    auto entry = [&rng]() {
        // deterministic small integers in [-4, 4]
        return Rat(static_cast<long>(rng() % 9) - 4);
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        SubspaceFamily f;
        f.n = n;
        f.m = m;
        f.k = k;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            RatMatrix vi(n, k), wi(n, n - k);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < k; ++c) vi.at(r, c) = entry();
                for (int c = 0; c < n - k; ++c) wi.at(r, c) = entry();
            }
            if (rank_of(vi) != k || rank_of(wi) != n - k) ok = false;
            f.v.push_back(std::move(vi));
            f.w.push_back(std::move(wi));
        }
        if (!ok) continue;
        // generic position: every V_i cap W_j = 0
        auto t = f.t_table();
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m; ++j)
                if (t[i][j] != 0) {
                    ok = false;
                    break;
                }
        if (ok) return f;
    }
    throw Error("random_family: no generic family found (seed exhausted)");
}

LinComb generic_vector_avoiding(int n, const std::vector<RatMatrix>& avoid_spans) {
    for (long t = 0;; ++t) {
        LinComb x;
        Rat p(1);
        for (int r = 0; r < n; ++r) {
            x.set(r, p);
            p *= t;
        }
        bool ok = true;
        for (const auto& s : avoid_spans) {
            if (s.cols() >= n) continue;  // not a proper subspace
            Echelon ech;
            for (int c = 0; c < s.cols(); ++c) ech.insert(s.col(c));
            if (ech.reduce(x).zero()) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
        if (t > 1000) throw Error("generic_vector_avoiding: search exhausted");
    }
}

TwProdReconstruction twprod_reconstruction(const SubspaceFamily& f_in) {
    f_in.check();
    SubspaceFamily f = f_in;
    const int n = f.n, m = f.m, k = f.k;
    // renumber so that V_m cap W_i = 0 for every i
    {
        auto t = f.t_table();
        int pick = -1;
        for (int j = 0; j < m; ++j) {
            bool clear = true;
            for (int i = 0; i < m; ++i)
                if (t[j][i] != 0) clear = false;
            if (clear) {
                pick = j;
                break;
            }
        }
        if (pick < 0)
            throw Error("twprod_reconstruction: no admissible numbering (Gamma has cycles)");
        std::swap(f.v[pick], f.v[m - 1]);
        std::swap(f.w[pick], f.w[m - 1]);
    }

    RFamilyAlgebra target = r_family(f);

    // R_G: the family without (V_m, W_m); for m = 1 it degenerates to K_n = K(C)
    SubspaceFamily g = f;
    g.m = m - 1;
    g.v.pop_back();
    g.w.pop_back();
    std::optional<RFamilyAlgebra> rg_fam;
    std::optional<AugmentedAlgebra> rg_kron;
    if (g.m > 0)
        rg_fam = r_family(g);
    else
        rg_kron = kronecker(n);
    const PresentedAlgebra& rg_pres = rg_fam ? rg_fam->pres : rg_kron->pres;
    AlgebraPtr rg_ptr = rg_fam ? rg_fam->ptr() : rg_kron->ptr();

    // K(V_m), abstract Kronecker with k arrows, embedded via V_m <= C
    AugmentedAlgebra kv = kronecker(k);
    AlgebraPtr kv_ptr = kv.ptr();

    // eps_B: K(V_m) -> R_G sending arrow t to the element of C with the
    // coordinates of the t-th basis vector of V_m
    std::vector<LinComb> kv_vertex_imgs, kv_arrow_imgs;
    for (int vtx = 0; vtx < 2; ++vtx) kv_vertex_imgs.push_back(rg_pres.vertex_elem(vtx));
    for (int t = 0; t < k; ++t) {
        LinComb img;
        for (int l = 0; l < n; ++l)
            if (f.v[m - 1].at(l, t) != 0)
                img.axpy(f.v[m - 1].at(l, t), rg_pres.arrow_elem(l));
        kv_arrow_imgs.push_back(std::move(img));
    }
    RatMatrix eps_b = hom_from_generators(kv.pres, rg_pres.algebra, kv_vertex_imgs,
                                          kv_arrow_imgs);
    if (auto why = check_algebra_hom(kv.pres.algebra, rg_pres.algebra, eps_b))
        throw Error("twprod: eps_B is not a morphism: " + *why);
    if (rank_of(eps_b) != kv_ptr->dim()) throw Error("twprod: eps_B is not injective");

    // pi_B: R_G -> K(V_m): c_l maps to the V_m-component of c_l along
    // C = V_m (+) W_m, b_i maps to 0
    RatMatrix vw = hstack(f.v[m - 1], f.w[m - 1]);
    auto split = solve(vw, RatMatrix::identity(n));
    if (!split) throw Error("twprod: C != V_m (+) W_m");
    std::vector<LinComb> rg_vertex_imgs, rg_arrow_imgs;
    for (int vtx = 0; vtx < 2; ++vtx) rg_vertex_imgs.push_back(kv.pres.vertex_elem(vtx));
    for (int l = 0; l < n; ++l) {
        LinComb img;
        for (int t = 0; t < k; ++t)
            if (split->at(t, l) != 0) img.axpy(split->at(t, l), kv.pres.arrow_elem(t));
        rg_arrow_imgs.push_back(std::move(img));
    }
    for (int i = 0; i < g.m; ++i) rg_arrow_imgs.push_back(LinComb());
    RatMatrix pi_b = hom_from_generators(rg_pres, kv.pres.algebra, rg_vertex_imgs,
                                         rg_arrow_imgs);
    if (auto why = check_algebra_hom(rg_pres.algebra, kv.pres.algebra, pi_b))
        throw Error("twprod: pi_B is not a morphism: " + *why);
    if (!(pi_b * eps_b == RatMatrix::identity(kv_ptr->dim())))
        throw Error("twprod: pi_B . eps_B != id");

    RRing b_ring{rg_ptr, kv_ptr, eps_b, pi_b};
    b_ring.check();

    // A = K(V_m; 1) = K(V_m) (x)v_S K_1^op, augmented over K(V_m) by
    // killing the b arrow
    AugmentedAlgebra k1op = kronecker(1, {}, true);
    TensorSpace ts_kv1 = tensor_over_R(kv.rring, k1op.rring);
    TwistingMap v_kv1 = canonical_v(kv.rring, k1op.rring, ts_kv1);
    ProductAlgebra kv1 = twisted_product(kv.rring, k1op.rring, v_kv1);

    AlgebraPtr kv1_ptr = std::make_shared<FinAlgebra>(kv1.algebra);
    RatMatrix eps_a = kv1.embed_a;
    // pi_A(x (x) y) = x . eps_KV(pi_K1op(y))
    RatMatrix pi_a(kv_ptr->dim(), kv1_ptr->dim());
    for (int u = 0; u < kv1_ptr->dim(); ++u) {
        auto [x, y] = kv1.space.basis[u];
        LinComb s_img = k1op.rring.pi_of(LinComb::unit(y));  // in S coords
        LinComb kv_img;
        for (const auto& t : s_img.terms())
            kv_img.axpy(t.second, kv_ptr->idempotent(t.first));
        pi_a.set_col(u, kv_ptr->mul(LinComb::unit(x), kv_img));
    }
    RRing a_ring{kv1_ptr, kv_ptr, eps_a, pi_a};
    a_ring.check();

    TensorSpace ab = tensor_over_R(a_ring, b_ring);
    TwistingMap v_outer = canonical_v(a_ring, b_ring, ab);
    ProductAlgebra product = twisted_product(a_ring, b_ring, v_outer);

    // generator-matching map R_F -> product
    const FinAlgebra& c = product.algebra;
    std::vector<LinComb> vert_imgs, arrow_imgs;
    for (int vtx = 0; vtx < 2; ++vtx) vert_imgs.push_back(c.data().idempotents[vtx]);
    for (int l = 0; l < n; ++l)
        arrow_imgs.push_back(product.embed_b.apply(rg_pres.arrow_elem(l)));
    for (int i = 0; i < m - 1; ++i)
        arrow_imgs.push_back(product.embed_b.apply(rg_pres.arrow_elem(n + i)));
    // b_m: the K_1^op arrow inside K(V_m;1)
    LinComb bm_in_kv1 = kv1.embed_b.apply(k1op.pres.arrow_elem(0));
    arrow_imgs.push_back(product.embed_a.apply(bm_in_kv1));

    RatMatrix iso = hom_from_generators(target.pres, c, vert_imgs, arrow_imgs);
    if (auto why = check_algebra_hom(target.pres.algebra, c, iso))
        throw Error("twprod: generator map is not a homomorphism: " + *why);
    if (!is_bijective(iso)) throw Error("twprod: generator map is not bijective");

    return TwProdReconstruction{std::move(f), std::move(target), std::move(kv1),
                                std::move(product), std::move(iso)};
}

}  // namespace finalg
