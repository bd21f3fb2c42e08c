#include "sseq/groupcoh.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace sseq {

namespace {

Scalar zpow(int e) {
    e = ((e % 3) + 3) % 3;
    if (e == 0) return Scalar::one();
    if (e == 1) return Scalar::g();
    return Scalar::g() * Scalar::g();
}

Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(Field::GF4, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r : cols[c].support()) m.set(r, c, cols[c].get(r));
    return m;
}

Vec column(const Matrix& m, std::size_t c) {
    Vec v(Field::GF4, m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v.set(r, m.get(r, c));
    return v;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(Field::GF4, n);
    v.set(i, Scalar::one());
    return v;
}

// small echelon helper with full reduction, keeping its own rows
struct Echelon {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;

    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Scalar c = v.get(pivots[r]);
            if (!c.is_zero()) v.add_scaled(rows[r], c);
        }
        return v;
    }
    bool add(Vec v) {
        v = reduce(std::move(v));
        auto sup = v.support();
        if (sup.empty()) return false;
        Scalar lead = v.get(sup.front());
        Vec w(Field::GF4, v.size());
        w.add_scaled(v, lead.inv());
        rows.push_back(std::move(w));
        pivots.push_back(sup.front());
        return true;
    }
    std::size_t dim() const { return rows.size(); }
};

}  // namespace

int GroupTable::inv(int g) const {
    for (int h = 0; h < n; ++h)
        if (mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == e) return h;
    throw std::logic_error("element without inverse");
}

int GroupTable::pow(int g, int k) const {
    int r = e;
    for (int s = 0; s < k; ++s) r = mul[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)];
    return r;
}

std::vector<std::string> GroupTable::validate() const {
    std::vector<std::string> errs;
    auto m = [&](int a, int b) { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    for (int a = 0; a < n && errs.size() < 8; ++a) {
        if (m(e, a) != a || m(a, e) != a) errs.push_back("identity fails at " + labels[static_cast<std::size_t>(a)]);
        bool has_inv = false;
        for (int b = 0; b < n; ++b) has_inv = has_inv || (m(a, b) == e && m(b, a) == e);
        if (!has_inv) errs.push_back("no inverse for " + labels[static_cast<std::size_t>(a)]);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m(m(a, b), c) != m(a, m(b, c))) {
                    errs.push_back("associativity fails");
                    b = c = n;
                }
    }
    if (gi >= 0) {
        if (pow(gi, 4) != e) errs.push_back("i^4 != 1");
        if (pow(gi, 2) != pow(gj, 2)) errs.push_back("i^2 != j^2");
        if (m(m(gi, gj), inv(gi)) != inv(gj)) errs.push_back("i j i^-1 != j^-1");
        if (m(gi, gj) != gk) errs.push_back("k != ij");
        if (pow(gi, 2) != m1) errs.push_back("-1 != i^2");
    }
    if (om >= 0) {
        if (pow(om, 3) != e) errs.push_back("w^3 != 1");
        int w2 = pow(om, 2);
        if (m(m(om, gi), w2) != gj) errs.push_back("w i w^2 != j");
        if (m(m(om, gj), w2) != gk) errs.push_back("w j w^2 != k");
    }
    for (const auto* sub : {&q8, &c3, &c6})
        for (int a : *sub)
            for (int b : *sub) {
                bool in = false;
                for (int c : *sub) in = in || (c == m(a, b));
                if (!in) errs.push_back("subgroup marker not closed");
            }
    return errs;
}

GroupTable build_g24() {
    // elements of the special linear group of rank 2 over the field with
    // three elements, matrices (a b; c d) with det 1
    using M2 = std::array<int, 4>;
    auto mmul = [](const M2& x, const M2& y) {
        return M2{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
                  (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
    };
    std::vector<M2> els;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) els.push_back({a, b, c, d});
    assert(els.size() == 24);
    auto find = [&](const M2& x) {
        for (std::size_t k = 0; k < els.size(); ++k)
            if (els[k] == x) return static_cast<int>(k);
        throw std::logic_error("matrix not in the group");
    };
    M2 E{1, 0, 0, 1}, I{0, 2, 1, 0}, J{1, 1, 1, 2};
    int e = find(E), gi = find(I), gj = find(J), gk = find(mmul(I, J));
    int m1 = find(mmul(I, I));
    // the 3-cycle permuting i, j, k by conjugation
    int om = -1;
    for (std::size_t k = 0; k < els.size(); ++k) {
        const M2& w = els[k];
        M2 w2 = mmul(w, w);
        if (mmul(w, w2) != E || w == E) continue;
        if (mmul(mmul(w, I), w2) == els[static_cast<std::size_t>(gj)] &&
            mmul(mmul(w, J), w2) == els[static_cast<std::size_t>(gk)]) {
            om = static_cast<int>(k);
            break;
        }
    }
    assert(om >= 0);

    GroupTable G;
    G.n = 24;
    G.e = e;
    G.om = om;
    G.gi = gi;
    G.gj = gj;
    G.gk = gk;
    G.m1 = m1;
    G.mul.assign(24, std::vector<int>(24));
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b)
            G.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                find(mmul(els[static_cast<std::size_t>(a)], els[static_cast<std::size_t>(b)]));
    auto m = [&](int a, int b) { return G.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    G.q8 = {e, gi, gj, gk, m1, m(m1, gi), m(m1, gj), m(m1, gk)};
    int w2 = G.pow(om, 2);
    G.c3 = {e, om, w2};
    G.c6 = {e, om, w2, m1, m(m1, om), m(m1, w2)};
    static const char* qn[8] = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    G.labels.assign(24, "");
    for (int r = 0; r < 3; ++r) {
        int wr = G.pow(om, r);
        for (int q = 0; q < 8; ++q) {
            int g = m(G.q8[static_cast<std::size_t>(q)], wr);
            std::string l = qn[q];
            if (r == 1) l += "*w";
            if (r == 2) l += "*w2";
            G.labels[static_cast<std::size_t>(g)] = l;
        }
    }
    return G;
}

GroupTable subgroup_table(const GroupTable& G, const std::vector<int>& elems) {
    GroupTable S;
    S.n = static_cast<int>(elems.size());
    std::vector<int> pos(static_cast<std::size_t>(G.n), -1);
    for (std::size_t p = 0; p < elems.size(); ++p) pos[static_cast<std::size_t>(elems[p])] = static_cast<int>(p);
    S.mul.assign(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a) {
        S.labels.push_back(G.labels[static_cast<std::size_t>(elems[a])]);
        for (std::size_t b = 0; b < elems.size(); ++b) {
            int p = pos[static_cast<std::size_t>(G.mul[static_cast<std::size_t>(elems[a])][static_cast<std::size_t>(elems[b])])];
            if (p < 0) throw std::invalid_argument("element list is not closed");
            S.mul[a][b] = p;
        }
    }
    auto relabel = [&](int g) { return g >= 0 ? pos[static_cast<std::size_t>(g)] : -1; };
    S.e = relabel(G.e);
    S.om = relabel(G.om);
    S.gi = relabel(G.gi);
    S.gj = relabel(G.gj);
    S.gk = relabel(G.gk);
    S.m1 = relabel(G.m1);
    return S;
}

std::vector<std::string> GModule::validate() const {
    std::vector<std::string> errs;
    if (static_cast<int>(act.size()) != G->n) {
        errs.push_back("wrong number of action matrices");
        return errs;
    }
    if (!(act[static_cast<std::size_t>(G->e)] == Matrix::identity(Field::GF4, static_cast<std::size_t>(dim))))
        errs.push_back("identity does not act as identity");
    for (int a = 0; a < G->n && errs.size() < 8; ++a)
        for (int b = 0; b < G->n; ++b) {
            int c = G->mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (!(act[static_cast<std::size_t>(a)].mul(act[static_cast<std::size_t>(b)]) == act[static_cast<std::size_t>(c)])) {
                errs.push_back("action not multiplicative at " + G->labels[static_cast<std::size_t>(a)] + "," +
                               G->labels[static_cast<std::size_t>(b)]);
                break;
            }
        }
    return errs;
}

GModule trivial_gmodule(const GroupTable& G) {
    GModule M;
    M.G = &G;
    M.dim = 1;
    M.act.assign(static_cast<std::size_t>(G.n), Matrix::identity(Field::GF4, 1));
    return M;
}

GModule restrict_gmodule(const GModule& M, const GroupTable& sub, const std::vector<int>& elems) {
    GModule R;
    R.G = &sub;
    R.dim = M.dim;
    for (int g : elems) R.act.push_back(M.act[static_cast<std::size_t>(g)]);
    return R;
}

GModule morava_module(const GroupTable& g24, MoravaKind kind, int t) {
    if (t % 2 != 0) throw std::invalid_argument("internal degree must be even");
    int dim = kind == MoravaKind::plain ? 1 : 2;
    Matrix w(Field::GF4, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    Matrix i = Matrix::identity(Field::GF4, static_cast<std::size_t>(dim));
    // the 3-cycle scales u^{-m} by zeta^{2m}
    w.set(0, 0, zpow(t));
    if (kind == MoravaKind::a1) {
        w.set(1, 1, zpow(t - 2));
        i.set(0, 1, Scalar::one());  // e2 -> e2 + u^{-1} e0
    }
    GModule M;
    M.G = &g24;
    M.dim = dim;
    M.act.assign(static_cast<std::size_t>(g24.n), Matrix());
    std::vector<bool> known(static_cast<std::size_t>(g24.n), false);
    M.act[static_cast<std::size_t>(g24.e)] = Matrix::identity(Field::GF4, static_cast<std::size_t>(dim));
    known[static_cast<std::size_t>(g24.e)] = true;
    std::vector<int> frontier{g24.e};
    std::vector<std::pair<int, Matrix>> gens{{g24.om, w}, {g24.gi, i}};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int g : frontier)
            for (auto& [h, ah] : gens) {
                int gh = g24.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
                if (known[static_cast<std::size_t>(gh)]) continue;
                M.act[static_cast<std::size_t>(gh)] = M.act[static_cast<std::size_t>(g)].mul(ah);
                known[static_cast<std::size_t>(gh)] = true;
                next.push_back(gh);
            }
        frontier = std::move(next);
    }
    for (bool k : known) assert(k);
    return M;
}

MinimalResolution::MinimalResolution(const GroupTable& G, std::vector<int> sylow, int omega,
                                     int s_max)
    : G_(&G), sylow_(std::move(sylow)), omega_(omega), s_max_(s_max) {
    syl_pos_.assign(static_cast<std::size_t>(G.n), -1);
    for (std::size_t p = 0; p < sylow_.size(); ++p)
        syl_pos_[static_cast<std::size_t>(sylow_[p])] = static_cast<int>(p);
    chars_.resize(static_cast<std::size_t>(s_max) + 1);
    d_.resize(static_cast<std::size_t>(s_max) + 1);
    chars_[0] = {0};

    // kernel of the augmentation on P_0
    Matrix aug(Field::GF4, 1, static_cast<std::size_t>(dim(0)));
    for (std::size_t c = 0; c < aug.cols(); ++c) aug.set(0, c, Scalar::one());
    std::vector<Vec> K = kernel_basis(aug);

    int nchar = omega_ >= 0 ? 3 : 1;
    for (int s = 1; s <= s_max_; ++s) {
        std::size_t D = static_cast<std::size_t>(dim(s - 1));
        Matrix Mk = from_columns(D, K);
        // radical of the kernel: (q - 1) K over the Sylow subgroup, expressed
        // in kernel coordinates
        Echelon jc;
        for (int q : sylow_) {
            if (q == G_->e) continue;
            Matrix aq = action(s - 1, q);
            for (const Vec& k : K) {
                Vec v = aq.apply(k);
                v.add_scaled(k, Scalar::one());
                auto c = solve_particular(Mk, v);
                assert(c.has_value());
                jc.add(*c);
            }
        }
        Matrix W = Matrix::identity(Field::GF4, K.size());
        if (omega_ >= 0) {
            Matrix aw = action(s - 1, omega_);
            std::vector<Vec> wc;
            for (const Vec& k : K) {
                auto c = solve_particular(Mk, aw.apply(k));
                assert(c.has_value());
                wc.push_back(std::move(*c));
            }
            W = from_columns(K.size(), wc);
        }
        // eigenvectors of the 3-cycle on the head of the kernel
        Echelon chosen = jc;
        std::vector<Vec> gens;
        for (int m = 0; m < nchar; ++m) {
            Matrix A(Field::GF4, K.size(), K.size());
            for (std::size_t a = 0; a < K.size(); ++a) {
                Vec col = column(W, a);
                col.set(a, col.get(a) + zpow(m));
                col = jc.reduce(std::move(col));
                for (std::size_t r : col.support()) A.set(r, a, col.get(r));
            }
            for (Vec& x : kernel_basis(A)) {
                if (!chosen.add(x)) continue;
                Vec k(Field::GF4, D);
                for (std::size_t a : x.support()) k.add_scaled(K[a], x.get(a));
                Vec gen(Field::GF4, D);
                if (omega_ < 0) {
                    gen = k;
                } else {
                    Vec cur = k;
                    Matrix aw = action(s - 1, omega_);
                    for (int r = 0; r < 3; ++r) {
                        gen.add_scaled(cur, zpow(-m * r));
                        cur = aw.apply(cur);
                    }
                }
                chars_[static_cast<std::size_t>(s)].push_back(m);
                gens.push_back(std::move(gen));
            }
        }
        assert(chosen.dim() == K.size());
        Matrix ds(Field::GF4, D, gens.size() * sylow_.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t p = 0; p < sylow_.size(); ++p) {
                Vec col = action(s - 1, sylow_[p]).apply(gens[i]);
                std::size_t c = i * sylow_.size() + p;
                for (std::size_t r : col.support()) ds.set(r, c, col.get(r));
            }
        K = kernel_basis(ds);
        d_[static_cast<std::size_t>(s)] = std::move(ds);
    }
}

int MinimalResolution::basis_index(int s, int summand, int g) const {
    (void)s;
    return summand * static_cast<int>(sylow_.size()) + syl_pos_[static_cast<std::size_t>(g)];
}

Matrix MinimalResolution::action(int s, int g) const {
    std::size_t S = sylow_.size();
    Matrix a(Field::GF4, static_cast<std::size_t>(dim(s)), static_cast<std::size_t>(dim(s)));
    for (int i = 0; i < rank(s); ++i) {
        int m = chars(s)[static_cast<std::size_t>(i)];
        for (std::size_t p = 0; p < S; ++p) {
            int gq = G_->mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(sylow_[p])];
            int r = 0, qp = gq;
            if (omega_ >= 0) {
                while (syl_pos_[static_cast<std::size_t>(qp)] < 0) {
                    qp = G_->mul[static_cast<std::size_t>(qp)][static_cast<std::size_t>(G_->inv(omega_))];
                    if (++r > 2) throw std::logic_error("no Sylow decomposition");
                }
            }
            a.set(static_cast<std::size_t>(i) * S + static_cast<std::size_t>(syl_pos_[static_cast<std::size_t>(qp)]),
                  static_cast<std::size_t>(i) * S + p, zpow(m * r));
        }
    }
    return a;
}

std::vector<Vec> MinimalResolution::eigenbasis(const Matrix& a, int m) const {
    if (omega_ < 0) {
        std::vector<Vec> b;
        for (std::size_t i = 0; i < a.rows(); ++i) b.push_back(unit_vec(a.rows(), i));
        return b;
    }
    Matrix t = a;
    for (std::size_t i = 0; i < t.rows(); ++i) t.set(i, i, t.get(i, i) + zpow(m));
    return kernel_basis(t);
}

int MinimalResolution::cochain_dim(int s, const GModule& M) const {
    int d = 0;
    const Matrix& w = M.act[static_cast<std::size_t>(omega_ >= 0 ? omega_ : G_->e)];
    for (int m : chars(s)) d += static_cast<int>(eigenbasis(w, m).size());
    return d;
}

Matrix MinimalResolution::cochain_matrix(int s, const GModule& M, const Vec& coords) const {
    const Matrix& w = M.act[static_cast<std::size_t>(omega_ >= 0 ? omega_ : G_->e)];
    Matrix f(Field::GF4, static_cast<std::size_t>(M.dim), static_cast<std::size_t>(dim(s)));
    std::size_t off = 0;
    for (int i = 0; i < rank(s); ++i) {
        auto E = eigenbasis(w, chars(s)[static_cast<std::size_t>(i)]);
        Vec v(Field::GF4, static_cast<std::size_t>(M.dim));
        for (std::size_t a = 0; a < E.size(); ++a) v.add_scaled(E[a], coords.get(off + a));
        off += E.size();
        for (std::size_t p = 0; p < sylow_.size(); ++p) {
            Vec col = M.act[static_cast<std::size_t>(sylow_[p])].apply(v);
            std::size_t c = static_cast<std::size_t>(i) * sylow_.size() + p;
            for (std::size_t r : col.support()) f.set(r, c, col.get(r));
        }
    }
    return f;
}

Vec MinimalResolution::cochain_coords(int s, const GModule& M, const Matrix& f) const {
    const Matrix& w = M.act[static_cast<std::size_t>(omega_ >= 0 ? omega_ : G_->e)];
    Vec coords(Field::GF4, static_cast<std::size_t>(cochain_dim(s, M)));
    std::size_t off = 0;
    for (int i = 0; i < rank(s); ++i) {
        auto E = eigenbasis(w, chars(s)[static_cast<std::size_t>(i)]);
        Vec v = column(f, static_cast<std::size_t>(basis_index(s, i, G_->e)));
        auto c = solve_particular(from_columns(static_cast<std::size_t>(M.dim), E), v);
        if (!c) throw std::invalid_argument("cochain is not equivariant");
        for (std::size_t a = 0; a < E.size(); ++a) coords.set(off + a, c->get(a));
        off += E.size();
    }
    return coords;
}

Matrix MinimalResolution::cochain_d(int s, const GModule& M) const {
    int cs = cochain_dim(s, M), ct = cochain_dim(s + 1, M);
    const Matrix& w = M.act[static_cast<std::size_t>(omega_ >= 0 ? omega_ : G_->e)];
    Matrix out(Field::GF4, static_cast<std::size_t>(ct), static_cast<std::size_t>(cs));
    const Matrix& dn = d(s + 1);
    for (int c = 0; c < cs; ++c) {
        Matrix f = cochain_matrix(s, M, unit_vec(static_cast<std::size_t>(cs), static_cast<std::size_t>(c)));
        Vec coords(Field::GF4, static_cast<std::size_t>(ct));
        std::size_t off = 0;
        for (int j = 0; j < rank(s + 1); ++j) {
            auto E = eigenbasis(w, chars(s + 1)[static_cast<std::size_t>(j)]);
            Vec img = f.apply(column(dn, static_cast<std::size_t>(basis_index(s + 1, j, G_->e))));
            auto cc = solve_particular(from_columns(static_cast<std::size_t>(M.dim), E), img);
            assert(cc.has_value());
            for (std::size_t a = 0; a < E.size(); ++a) coords.set(off + a, cc->get(a));
            off += E.size();
        }
        for (std::size_t r : coords.support()) out.set(r, static_cast<std::size_t>(c), coords.get(r));
    }
    return out;
}

int MinimalResolution::cohomology_dim(int s, const GModule& M) const {
    Matrix dz = cochain_d(s, M);
    int k = static_cast<int>(dz.cols()) - static_cast<int>(sseq::rank(dz));
    if (s > 0) k -= static_cast<int>(sseq::rank(cochain_d(s - 1, M)));
    return k;
}

std::vector<Vec> MinimalResolution::cohomology_basis(int s, const GModule& M) const {
    Echelon bd;
    if (s > 0) {
        Matrix dm = cochain_d(s - 1, M);
        for (std::size_t c = 0; c < dm.cols(); ++c) bd.add(column(dm, c));
    }
    std::vector<Vec> reps;
    for (Vec& v : kernel_basis(cochain_d(s, M)))
        if (bd.add(v)) reps.push_back(std::move(v));
    return reps;
}

bool MinimalResolution::is_cocycle(int s, const GModule& M, const Vec& coords) const {
    return cochain_d(s, M).apply(coords).is_zero();
}

bool MinimalResolution::is_coboundary(int s, const GModule& M, const Vec& coords) const {
    if (s == 0) return coords.is_zero();
    return solve_particular(cochain_d(s - 1, M), coords).has_value();
}

std::vector<Matrix> MinimalResolution::chain_lift(int q, int c, const Vec& f, int s_top) const {
    std::vector<Matrix> lifts;
    for (int s = 0; s <= s_top; ++s) {
        std::vector<Vec> us;
        for (int j = 0; j < rank(s + q); ++j) {
            int m = chars(s + q)[static_cast<std::size_t>(j)];
            auto E = eigenbasis(action(s, omega_ >= 0 ? omega_ : G_->e), ((m - c) % 3 + 3) % 3);
            Matrix Em = from_columns(static_cast<std::size_t>(dim(s)), E);
            Vec rhs;
            Matrix lhs;
            if (s == 0) {
                // augmentation of the image must match the functional
                lhs = Matrix(Field::GF4, 1, E.size());
                for (std::size_t a = 0; a < E.size(); ++a) {
                    Scalar sum;
                    for (std::size_t r = 0; r < E[a].size(); ++r) sum += E[a].get(r);
                    lhs.set(0, a, sum);
                }
                rhs = Vec(Field::GF4, 1);
                rhs.set(0, f.get(static_cast<std::size_t>(basis_index(q, j, G_->e))));
            } else {
                lhs = d(s).mul(Em);
                rhs = lifts[static_cast<std::size_t>(s - 1)].apply(
                    column(d(s + q), static_cast<std::size_t>(basis_index(s + q, j, G_->e))));
            }
            auto y = solve_particular(lhs, rhs);
            if (!y) throw std::logic_error("chain lift does not exist");
            Vec u(Field::GF4, static_cast<std::size_t>(dim(s)));
            for (std::size_t a = 0; a < E.size(); ++a) u.add_scaled(E[a], y->get(a));
            us.push_back(std::move(u));
        }
        Matrix U(Field::GF4, static_cast<std::size_t>(dim(s)), static_cast<std::size_t>(dim(s + q)));
        for (int j = 0; j < rank(s + q); ++j)
            for (std::size_t p = 0; p < sylow_.size(); ++p) {
                Vec col = action(s, sylow_[p]).apply(us[static_cast<std::size_t>(j)]);
                std::size_t cc = static_cast<std::size_t>(j) * sylow_.size() + p;
                for (std::size_t r : col.support()) U.set(r, cc, col.get(r));
            }
        lifts.push_back(std::move(U));
    }
    return lifts;
}

std::vector<Matrix> MinimalResolution::twisted_self_lift(const std::vector<int>& perm,
                                                         int s_top) const {
    assert(omega_ < 0);
    std::vector<Matrix> lifts;
    for (int s = 0; s <= s_top; ++s) {
        std::vector<Vec> us;
        for (int j = 0; j < rank(s); ++j) {
            Vec u;
            if (s == 0) {
                u = unit_vec(static_cast<std::size_t>(dim(0)),
                             static_cast<std::size_t>(basis_index(0, 0, G_->e)));
            } else {
                Vec rhs = lifts[static_cast<std::size_t>(s - 1)].apply(
                    column(d(s), static_cast<std::size_t>(basis_index(s, j, G_->e))));
                auto y = solve_particular(d(s), rhs);
                if (!y) throw std::logic_error("twisted lift does not exist");
                u = std::move(*y);
            }
            us.push_back(std::move(u));
        }
        Matrix U(Field::GF4, static_cast<std::size_t>(dim(s)), static_cast<std::size_t>(dim(s)));
        for (int j = 0; j < rank(s); ++j)
            for (std::size_t p = 0; p < sylow_.size(); ++p) {
                Vec col = action(s, sylow_[static_cast<std::size_t>(perm[p])]).apply(us[static_cast<std::size_t>(j)]);
                std::size_t cc = static_cast<std::size_t>(j) * sylow_.size() + p;
                for (std::size_t r : col.support()) U.set(r, cc, col.get(r));
            }
        lifts.push_back(std::move(U));
    }
    return lifts;
}

int sylow_invariant_dim(const MinimalResolution& res, const GroupTable& bigG,
                        const std::vector<int>& sylow_elems, const GModule& bigM, int s) {
    std::vector<int> pos(static_cast<std::size_t>(bigG.n), -1);
    for (std::size_t p = 0; p < sylow_elems.size(); ++p) pos[static_cast<std::size_t>(sylow_elems[p])] = static_cast<int>(p);
    int wi = bigG.inv(bigG.om);
    std::vector<int> perm(sylow_elems.size());
    for (std::size_t p = 0; p < sylow_elems.size(); ++p) {
        int h = bigG.mul[static_cast<std::size_t>(bigG.mul[static_cast<std::size_t>(wi)][static_cast<std::size_t>(sylow_elems[p])])]
                        [static_cast<std::size_t>(bigG.om)];
        perm[p] = pos[static_cast<std::size_t>(h)];
        assert(perm[p] >= 0);
    }
    GModule M = restrict_gmodule(bigM, res.group(), sylow_elems);
    auto lam = res.twisted_self_lift(perm, s);
    auto H = res.cohomology_basis(s, M);
    if (H.empty()) return 0;
    Echelon bd;
    std::vector<Vec> cols;  // H reps then boundary basis, as columns
    for (const Vec& h : H) cols.push_back(h);
    if (s > 0) {
        Matrix dm = res.cochain_d(s - 1, M);
        for (std::size_t c = 0; c < dm.cols(); ++c)
            if (bd.add(column(dm, c))) cols.push_back(column(dm, c));
    }
    Matrix basis = from_columns(cols[0].size(), cols);
    Matrix T(Field::GF4, H.size(), H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
        Matrix f = res.cochain_matrix(s, M, H[i]);
        Matrix g = bigM.act[static_cast<std::size_t>(bigG.om)].mul(f).mul(lam[static_cast<std::size_t>(s)]);
        Vec coords = res.cochain_coords(s, M, g);
        auto y = solve_particular(basis, coords);
        assert(y.has_value());
        for (std::size_t j = 0; j < H.size(); ++j) T.set(j, i, y->get(j));
    }
    for (std::size_t i = 0; i < H.size(); ++i) T.set(i, i, T.get(i, i) + Scalar::one());
    return static_cast<int>(H.size() - rank(T));
}

// ---------------------------------------------------------------- bar complex

namespace {

std::vector<int> nonidentity(const GroupTable& G) {
    std::vector<int> nz;
    for (int g = 0; g < G.n; ++g)
        if (g != G.e) nz.push_back(g);
    return nz;
}

std::size_t bar_dim(const GModule& M, int s) {
    std::size_t d = static_cast<std::size_t>(M.dim);
    for (int k = 0; k < s; ++k) d *= static_cast<std::size_t>(M.G->n - 1);
    return d;
}

}  // namespace

Vec bar_d(const GModule& M, int s, const Vec& f) {
    const GroupTable& G = *M.G;
    auto nz = nonidentity(G);
    std::size_t nm = nz.size(), dm = static_cast<std::size_t>(M.dim);
    std::vector<int> npos(static_cast<std::size_t>(G.n), -1);
    for (std::size_t p = 0; p < nm; ++p) npos[static_cast<std::size_t>(nz[p])] = static_cast<int>(p);
    Vec out(Field::GF4, bar_dim(M, s + 1));
    std::vector<std::size_t> tup(static_cast<std::size_t>(s + 1), 0);
    std::size_t total = bar_dim(M, s + 1) / dm;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (int k = s; k >= 0; --k) {
            tup[static_cast<std::size_t>(k)] = x % nm;
            x /= nm;
        }
        auto sub_index = [&](int skip_merge) {
            // tuple with entries merged at position skip_merge (0: drop first,
            // s+1: drop last, else multiply tup[k-1], tup[k])
            long r = 0;
            bool dead = false;
            for (int k = 0; k <= s && !dead; ++k) {
                int gk;
                if (skip_merge == 0) {
                    if (k == 0) continue;
                    gk = nz[tup[static_cast<std::size_t>(k)]];
                } else if (skip_merge == s + 1) {
                    if (k == s) continue;
                    gk = nz[tup[static_cast<std::size_t>(k)]];
                } else {
                    if (k == skip_merge) continue;
                    if (k == skip_merge - 1) {
                        int p = G.mul[static_cast<std::size_t>(nz[tup[static_cast<std::size_t>(k)]])]
                                     [static_cast<std::size_t>(nz[tup[static_cast<std::size_t>(k + 1)]])];
                        if (p == G.e) dead = true;
                        gk = p;
                    } else {
                        gk = nz[tup[static_cast<std::size_t>(k)]];
                    }
                }
                if (!dead) r = r * static_cast<long>(nm) + npos[static_cast<std::size_t>(gk)];
            }
            return dead ? -1L : r;
        };
        // leading term: g1 . f(g2, ..., g_{s+1})
        long r0 = sub_index(0);
        const Matrix& a = M.act[static_cast<std::size_t>(nz[tup[0]])];
        for (std::size_t mi = 0; mi < dm; ++mi) {
            Scalar val;
            for (std::size_t mj = 0; mj < dm; ++mj)
                val += a.get(mi, mj) * f.get(static_cast<std::size_t>(r0) * dm + mj);
            for (int cut = 1; cut <= s + 1; ++cut) {
                long r = sub_index(cut);
                if (r >= 0) val += f.get(static_cast<std::size_t>(r) * dm + mi);
            }
            if (!val.is_zero()) out.set(idx * dm + mi, val);
        }
    }
    return out;
}

namespace {

Matrix bar_d_matrix(const GModule& M, int s) {
    std::size_t cs = bar_dim(M, s), ct = bar_dim(M, s + 1);
    Matrix out(Field::GF4, ct, cs);
    for (std::size_t c = 0; c < cs; ++c) {
        Vec u(Field::GF4, cs);
        u.set(c, Scalar::one());
        Vec img = bar_d(M, s, u);
        for (std::size_t r : img.support()) out.set(r, c, img.get(r));
    }
    return out;
}

}  // namespace

std::vector<int> bar_cohomology_dims(const GModule& M, int s_max) {
    std::vector<int> dims;
    std::size_t prev_rank = 0;
    for (int s = 0; s <= s_max; ++s) {
        Matrix ds = bar_d_matrix(M, s);
        std::size_t r = rank(ds);
        dims.push_back(static_cast<int>(ds.cols() - r - prev_rank));
        prev_rank = r;
    }
    return dims;
}

bool bar_is_coboundary(const GModule& M, int s, const Vec& cocycle) {
    if (s == 0) return cocycle.is_zero();
    return solve_particular(bar_d_matrix(M, s - 1), cocycle).has_value();
}

Vec bar_cup(const GModule& Mx, int p, const Vec& x, const GModule& My, int q, const Vec& y) {
    assert(Mx.dim == 1 && My.dim == 1);
    const GroupTable& G = *Mx.G;
    auto nz = nonidentity(G);
    std::size_t nm = nz.size();
    std::size_t total = 1;
    for (int k = 0; k < p + q; ++k) total *= nm;
    Vec out(Field::GF4, total);
    std::vector<std::size_t> tup(static_cast<std::size_t>(p + q), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t xx = idx;
        for (int k = p + q - 1; k >= 0; --k) {
            tup[static_cast<std::size_t>(k)] = xx % nm;
            xx /= nm;
        }
        std::size_t ix = 0, iy = 0;
        int front = G.e;
        for (int k = 0; k < p; ++k) {
            std::size_t tk = tup[static_cast<std::size_t>(k)];
            ix = ix * nm + tk;
            front = G.mul[static_cast<std::size_t>(front)][static_cast<std::size_t>(nz[tk])];
        }
        for (int k = p; k < p + q; ++k) iy = iy * nm + tup[static_cast<std::size_t>(k)];
        Scalar v = x.get(ix) * My.act[static_cast<std::size_t>(front)].get(0, 0) * y.get(iy);
        if (!v.is_zero()) out.set(idx, v);
    }
    return out;
}

Vec bar_rep_h1(const MinimalResolution& res, const GModule& M, const Vec& coords) {
    assert(M.dim == 1);
    const GroupTable& G = res.group();
    Matrix f = res.cochain_matrix(1, M, coords);
    auto nz = nonidentity(G);
    Vec out(Field::GF4, nz.size());
    // psi0 sends a group element to its Sylow part shifted into P_0
    std::vector<char> in_syl(static_cast<std::size_t>(G.n), 0);
    for (int q : res.sylow()) in_syl[static_cast<std::size_t>(q)] = 1;
    auto psi0 = [&](int g) {
        int r = 0, qp = g;
        if (G.om >= 0) {
            int wi = G.inv(G.om);
            while (!in_syl[static_cast<std::size_t>(qp)]) {
                qp = G.mul[static_cast<std::size_t>(qp)][static_cast<std::size_t>(wi)];
                if (++r > 2) throw std::logic_error("no Sylow decomposition");
            }
        }
        return unit_vec(static_cast<std::size_t>(res.dim(0)),
                        static_cast<std::size_t>(res.basis_index(0, 0, qp)));
    };
    Vec pe = psi0(G.e);
    for (std::size_t p = 0; p < nz.size(); ++p) {
        Vec rhs = psi0(nz[p]);
        rhs.add_scaled(pe, Scalar::one());
        auto u = solve_particular(res.d(1), rhs);
        assert(u.has_value());
        Scalar val;
        for (std::size_t c : u->support()) val += f.get(0, c) * u->get(c);
        if (!val.is_zero()) out.set(p, val);
    }
    return out;
}

// --------------------------------------------------------------- ring checks

int henn_ring_dim(int s, int t) {
    if (s < 0 || t % 2 != 0) return 0;
    // ab = 0 and b^3 = v2 a^3 force a^4 = b^4 = 0 and identify b^3 with a^3,
    // so the additive basis is v2^m z^p a^i (i <= 3) and v2^m z^p b^j (j <= 2)
    int count = 0;
    for (int i = 0; i <= 3 && i <= s; ++i)
        if ((s - i) % 4 == 0 && ((t - 2 * i) % 6 + 6) % 6 == 0) ++count;
    for (int j = 1; j <= 2 && j <= s; ++j)
        if ((s - j) % 4 == 0 && ((t - 4 * j) % 6 + 6) % 6 == 0) ++count;
    return count;
}

int hfpss_e2_expected_dim(int s, int t) {
    if (s < 0 || t % 2 != 0) return 0;
    int count = 0;
    for (int j = 0; j <= 2; ++j) {
        // on e[0,0] at (0,0)
        if (s >= j && (s - j) % 4 == 0 && ((t - 4 * j) % 6 + 6) % 6 == 0) ++count;
        // on e[1,5] at (1,6)
        if (s - 1 >= j && (s - 1 - j) % 4 == 0 && ((t - 6 - 4 * j) % 6 + 6) % 6 == 0) ++count;
    }
    return count;
}

HfpssE2::HfpssE2(int s_max) : s_max_(s_max) {
    GroupTable G = build_g24();
    MinimalResolution res(G, G.q8, G.om, s_max + 1);
    for (int t : {0, 2, 4}) {
        GModule M = morava_module(G, MoravaKind::a1, t);
        for (int s = 0; s <= s_max; ++s) dims_[{s, t}] = res.cohomology_dim(s, M);
    }
}

int HfpssE2::dim(int s, int t) const {
    if (t % 2 != 0 || s < 0 || s > s_max_) return 0;
    auto it = dims_.find({s, ((t % 6) + 6) % 6});
    return it == dims_.end() ? 0 : it->second;
}

RingReport verify_ring_relations() {
    RingReport rep;
    GroupTable G = build_g24();
    const int SMAX = 10;
    MinimalResolution res(G, G.q8, G.om, SMAX);
    GModule m0 = morava_module(G, MoravaKind::plain, 0);
    GModule m2 = morava_module(G, MoravaKind::plain, 2);
    GModule m4 = morava_module(G, MoravaKind::plain, 4);

    auto pin1 = [&](int s, const GModule& M, const char* name) {
        auto H = res.cohomology_basis(s, M);
        if (H.size() != 1) {
            rep.errors.push_back(std::string("expected a one-dimensional group for ") + name);
            return Vec(Field::GF4, static_cast<std::size_t>(res.cochain_dim(s, M)));
        }
        return H[0];
    };
    Vec ca = pin1(1, m2, "a");
    Vec cb = pin1(1, m4, "b");
    Vec cz = pin1(4, m0, "z");
    if (!rep.errors.empty()) return rep;

    // functionals on the resolution (all coefficients are one-dimensional)
    auto functional = [&](int s, const GModule& M, const Vec& coords) {
        Matrix f = res.cochain_matrix(s, M, coords);
        return f.row(0);
    };
    Vec fa = functional(1, m2, ca), fb = functional(1, m4, cb), fz = functional(4, m0, cz);
    int c_a = 2, c_b = 1;  // the 3-cycle scales u^{-1} by zeta^2, u^{-2} by zeta
    auto lift_a = res.chain_lift(1, c_a, fa, 3);
    auto lift_b = res.chain_lift(1, c_b, fb, 3);

    // a.b: with one-dimensional twisted coefficients the minimal resolution
    // has no nonzero coboundaries, so the class vanishes iff the functional does
    auto compose = [&](const Vec& f, const Matrix& U) {
        Vec out(Field::GF4, U.cols());
        for (std::size_t c = 0; c < U.cols(); ++c) {
            Scalar v;
            for (std::size_t r : f.support()) v += f.get(r) * U.get(r, c);
            if (!v.is_zero()) out.set(c, v);
        }
        return out;
    };
    Vec ab = compose(fa, lift_b[1]);
    rep.ab_zero = ab.is_zero();
    if (!rep.ab_zero) rep.errors.push_back("a.b is nonzero on the resolution");

    // b^3 versus v2 a^3 (v2 acts as the identity on functionals)
    Vec b3 = compose(fb, lift_b[1].mul(lift_b[2]));
    Vec a3 = compose(fa, lift_a[1].mul(lift_a[2]));
    rep.b3_unit = Scalar::zero();
    for (Scalar u : {Scalar::one(), Scalar::g(), Scalar::g() * Scalar::g()}) {
        Vec diff = b3;
        diff.add_scaled(a3, u);
        if (diff.is_zero()) rep.b3_unit = u;
    }
    if (rep.b3_unit.is_zero()) rep.errors.push_back("b^3 is not a unit multiple of v2 a^3");

    // the same two relations on normalized bar cocycles
    {
        Vec ab_bar = bar_cup(m2, 1, bar_rep_h1(res, m2, ca), m4, 1, bar_rep_h1(res, m4, cb));
        GModule m6 = morava_module(G, MoravaKind::plain, 6);
        if (!bar_d(m6, 2, ab_bar).is_zero() || !bar_is_coboundary(m6, 2, ab_bar))
            rep.errors.push_back("a.b does not vanish on bar cocycles");
        Vec barb = bar_rep_h1(res, m4, cb), bara = bar_rep_h1(res, m2, ca);
        GModule m8 = morava_module(G, MoravaKind::plain, 8);
        Vec b3_bar = bar_cup(m4, 1, barb, m8, 2, bar_cup(m4, 1, barb, m4, 1, barb));
        Vec a3_bar = bar_cup(m2, 1, bara, m4, 2, bar_cup(m2, 1, bara, m2, 1, bara));
        GModule m12 = morava_module(G, MoravaKind::plain, 12);
        Vec diff = b3_bar;
        diff.add_scaled(a3_bar, rep.b3_unit);
        if (!bar_d(m12, 3, diff).is_zero() || !bar_is_coboundary(m12, 3, diff))
            rep.errors.push_back("b^3 = unit * v2 a^3 fails on bar cocycles");
    }

    // periodicity: cup with z is an isomorphism H^s -> H^{s+4} for s >= 1
    {
        auto lift_z = res.chain_lift(4, 0, fz, 4);
        bool ok = true;
        for (int tmod : {0, 2, 4})
            for (int kind = 0; kind < 2; ++kind) {
                GModule M = morava_module(G, kind ? MoravaKind::a1 : MoravaKind::plain, tmod);
                for (int s = 1; s + 4 <= SMAX - 1; ++s)
                    if (res.cohomology_dim(s, M) != res.cohomology_dim(s + 4, M)) ok = false;
                for (int s = 1; s <= 4; ++s) {
                    auto H = res.cohomology_basis(s, M);
                    if (H.empty()) continue;
                    Echelon quot;
                    Matrix dm = res.cochain_d(s + 3, M);
                    for (std::size_t c = 0; c < dm.cols(); ++c) quot.add(column(dm, c));
                    std::size_t base = quot.dim();
                    for (const Vec& h : H) {
                        Matrix f = res.cochain_matrix(s, M, h);
                        Matrix g = f.mul(lift_z[static_cast<std::size_t>(s)]);
                        quot.add(res.cochain_coords(s + 4, M, g));
                    }
                    if (quot.dim() != base + H.size()) ok = false;
                }
            }
        rep.z_periodicity = ok;
        if (!ok) rep.errors.push_back("cup with z is not a periodicity isomorphism");
    }

    // connecting homomorphism of the extension of the rank-two module
    {
        GModule mid = morava_module(G, MoravaKind::a1, 2);
        // lift the generator of H^0 of the quotient (the e2 line) through mid
        int c0 = res.cochain_dim(0, mid);
        Vec lift_coords;
        for (int c = 0; c < c0 && lift_coords.size() == 0; ++c) {
            Matrix f = res.cochain_matrix(0, mid, unit_vec(static_cast<std::size_t>(c0), static_cast<std::size_t>(c)));
            if (!f.get(1, static_cast<std::size_t>(res.basis_index(0, 0, G.e))).is_zero())
                lift_coords = unit_vec(static_cast<std::size_t>(c0), static_cast<std::size_t>(c));
        }
        if (lift_coords.size() == 0) {
            rep.errors.push_back("no equivariant lift hits the quotient generator");
            return rep;
        }
        Matrix fhat = res.cochain_matrix(0, mid, lift_coords);
        // normalise: the e2 coordinate of the lift must be exactly 1
        Scalar e2c = fhat.get(1, static_cast<std::size_t>(res.basis_index(0, 0, G.e)));
        Vec scaled(Field::GF4, lift_coords.size());
        scaled.add_scaled(lift_coords, e2c.inv());
        fhat = res.cochain_matrix(0, mid, scaled);
        Matrix delta(Field::GF4, 1, static_cast<std::size_t>(res.dim(1)));
        for (std::size_t c = 0; c < delta.cols(); ++c) {
            Vec img = fhat.apply(column(res.d(1), c));
            if (!img.get(1).is_zero()) rep.errors.push_back("connecting image leaves the submodule");
            delta.set(0, c, img.get(0));
        }
        Vec dc = res.cochain_coords(1, m2, delta);
        rep.delta_unit = Scalar::zero();
        for (Scalar u : {Scalar::one(), Scalar::g(), Scalar::g() * Scalar::g()}) {
            Vec diff = dc;
            diff.add_scaled(ca, u);
            if (res.is_coboundary(1, m2, diff)) rep.delta_unit = u;
        }
        if (rep.delta_unit.is_zero())
            rep.errors.push_back("connecting map is not a unit multiple of a");
    }
    return rep;
}

}  // namespace sseq
