#include "sseq/cobar.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace sseq {

CobarComplex::CobarComplex(const HopfAlgebra& A, Comodule M, int t_max)
    : A_(&A), M_(std::move(M)), t_max_(t_max) {
    assert(M_.A == A_);
    for (uint32_t i = 0; i < A_->dim(); ++i)
        if (A_->degree(i) > 0) abar_.push_back(i);
}

CobarComplex::Bidegree& CobarComplex::bd(int s, int t) {
    if (t > t_max_)
        throw std::out_of_range("cobar bidegree beyond configured bound t_max=" +
                                std::to_string(t_max_));
    if (s < 0) throw std::out_of_range("negative cohomological degree");
    auto& b = memo_[{s, t}];
    ensure_basis(b, s, t);
    return b;
}

void CobarComplex::ensure_basis(Bidegree& b, int s, int t) {
    if (b.has_basis) return;
    b.has_basis = true;
    // enumerate words lexicographically: s positive-degree algebra indices
    // followed by a comodule index, total internal degree t
    std::vector<uint32_t> word;
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == s) {
            for (uint32_t m = 0; m < M_.dim(); ++m)
                if (M_.degrees[m] == rem) {
                    word.push_back(m);
                    b.basis.push_back(word);
                    word.pop_back();
                }
            return;
        }
        for (uint32_t a : abar_) {
            int d = A_->degree(a);
            if (rem - d < (s - pos - 1) + M_.min_degree()) continue;
            word.push_back(a);
            rec(pos + 1, rem - d);
            word.pop_back();
        }
    };
    rec(0, t);
    for (uint32_t i = 0; i < b.basis.size(); ++i) b.index[b.basis[i]] = i;
}

const std::vector<std::vector<uint32_t>>& CobarComplex::basis(int s, int t) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return bd(s, t).basis;
}

uint32_t CobarComplex::basis_index(int s, int t, const std::vector<uint32_t>& word) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return bd(s, t).index.at(word);
}

void CobarComplex::ensure_d(int s, int t) {
    Bidegree& b = bd(s, t);
    if (b.has_d) return;
    Bidegree& target = bd(s + 1, t);
    uint32_t D = M_.dim(), n = A_->dim();
    Matrix d(Field::GF2, target.basis.size(), b.basis.size());
    for (uint32_t c = 0; c < b.basis.size(); ++c) {
        const auto& w = b.basis[c];
        std::vector<uint32_t> out;  // row indices, with multiplicity
        std::vector<uint32_t> nw(w.size() + 1);
        // reduced coproduct on each algebra letter
        for (int i = 0; i < s; ++i) {
            std::copy(w.begin(), w.begin() + i, nw.begin());
            std::copy(w.begin() + i + 1, w.end(), nw.begin() + i + 2);
            for (uint32_t p : A_->coproduct(w[i])) {
                uint32_t x = p / n, y = p % n;
                if (x == A_->unit() || y == A_->unit()) continue;
                nw[i] = x;
                nw[i + 1] = y;
                out.push_back(target.index.at(nw));
            }
        }
        // reduced coaction on the comodule letter
        {
            std::copy(w.begin(), w.end() - 1, nw.begin());
            for (uint32_t p : M_.coaction[w.back()]) {
                uint32_t a = p / D, m0 = p % D;
                if (a == A_->unit()) continue;
                nw[s] = a;
                nw[s + 1] = m0;
                out.push_back(target.index.at(nw));
            }
        }
        std::sort(out.begin(), out.end());
        for (std::size_t i = 0; i < out.size();) {
            std::size_t j = i;
            while (j < out.size() && out[j] == out[i]) ++j;
            if ((j - i) % 2) d.set(out[i], c, Scalar::one());
            i = j;
        }
    }
    b.d = std::move(d);
    b.has_d = true;
}

const Matrix& CobarComplex::differential(int s, int t) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure_d(s, t);
    return bd(s, t).d;
}

Vec CobarComplex::d_apply(int s, int t, const Vec& v) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return differential(s, t).apply(v);
}

void CobarComplex::ensure_ext(int s, int t) {
    Bidegree& b = bd(s, t);
    if (b.has_ext) return;
    ensure_d(s, t);
    std::size_t dim_here = b.basis.size();
    std::vector<Vec> boundaries;
    IncrementalSpan span(Field::GF2, dim_here);
    if (s > 0) {
        const Matrix& dprev = differential(s - 1, t);
        // independent boundary vectors, chosen in column order
        for (std::size_t c = 0; c < dprev.cols(); ++c) {
            Vec col(Field::GF2, dim_here);
            for (std::size_t r = 0; r < dim_here; ++r)
                if (!dprev.get(r, c).is_zero()) col.set(r, Scalar::one());
            if (span.add(col)) boundaries.push_back(std::move(col));
        }
    }
    // complete the boundaries to the kernel, keeping the canonical kernel
    // vectors that enlarge the span
    std::vector<Vec> reps;
    for (Vec& k : kernel_basis(b.d))
        if (span.add(k)) reps.push_back(std::move(k));
    b.ext = std::move(reps);
    b.boundary_rank = boundaries.size();
    b.coord_solver = Matrix(Field::GF2, dim_here, boundaries.size() + b.ext.size());
    for (std::size_t c = 0; c < boundaries.size(); ++c)
        for (std::size_t r : boundaries[c].support())
            b.coord_solver.set(r, c, Scalar::one());
    for (std::size_t c = 0; c < b.ext.size(); ++c)
        for (std::size_t r : b.ext[c].support())
            b.coord_solver.set(r, boundaries.size() + c, Scalar::one());
    b.has_ext = true;
}

int CobarComplex::ext_dimension(int s, int t) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure_ext(s, t);
    return static_cast<int>(bd(s, t).ext.size());
}

const std::vector<Vec>& CobarComplex::ext_basis(int s, int t) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure_ext(s, t);
    return bd(s, t).ext;
}

ExtClass CobarComplex::ext_class(int s, int t, uint32_t k, std::string name) {
    const auto& basis = ext_basis(s, t);
    if (k >= basis.size()) throw std::out_of_range("no such ext class");
    return ExtClass{s, t, basis[k], std::move(name)};
}

std::optional<Vec> CobarComplex::ext_coords(int s, int t, const Vec& v) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure_ext(s, t);
    Bidegree& b = bd(s, t);
    if (!b.d.apply(v).is_zero()) return std::nullopt;
    auto x = solve_particular(b.coord_solver, v);
    if (!x) return std::nullopt;  // not in the span: v is not a cocycle here
    Vec coords(Field::GF2, b.ext.size());
    for (std::size_t i = 0; i < b.ext.size(); ++i)
        coords.set(i, x->get(b.boundary_rank + i));
    return coords;
}

bool CobarComplex::is_boundary(int s, int t, const Vec& v) {
    auto c = ext_coords(s, t, v);
    if (!c) throw std::invalid_argument("is_boundary: not a cocycle");
    return c->is_zero();
}

ExtClass CobarComplex::product(CobarComplex& xk, const ExtClass& x, const ExtClass& y) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    assert(&xk.algebra() == A_);
    assert(xk.coefficients().dim() == 1 && xk.coefficients().degrees[0] == 0);
    int s = x.s + y.s, t = x.t + y.t;
    Bidegree& target = bd(s, t);
    Vec out(Field::GF2, target.basis.size());
    const auto& xb = xk.basis(x.s, x.t);
    const auto& yb = basis(y.s, y.t);
    for (std::size_t i : x.rep.support())
        for (std::size_t j : y.rep.support()) {
            std::vector<uint32_t> w(xb[i].begin(), xb[i].end() - 1);  // drop the k letter
            w.insert(w.end(), yb[j].begin(), yb[j].end());
            uint32_t idx = target.index.at(w);
            out.set(idx, out.get(idx) + Scalar::one());
        }
    std::string name;
    if (!x.name.empty() && !y.name.empty()) name = x.name + "*" + y.name;
    return ExtClass{s, t, std::move(out), std::move(name)};
}

ExtClass pairing_product(CobarComplex& cx, CobarComplex& cy, CobarComplex& cz,
                         const ComoduleMap& mu, const ExtClass& x, const ExtClass& y) {
    const HopfAlgebra& A = cz.algebra();
    assert(&cx.algebra() == &A && &cy.algebra() == &A);
    const Comodule& M = cx.coefficients();
    uint32_t Dn = cy.coefficients().dim();
    int s = x.s + y.s, t = x.t + y.t, q = y.s;
    Vec out(Field::GF2, cz.basis(s, t).size());
    const auto& xb = cx.basis(x.s, x.t);
    const auto& yb = cy.basis(y.s, y.t);
    for (std::size_t i : x.rep.support()) {
        const auto& wx = xb[i];
        // iterated coaction of the coefficient of x, extracted letters kept
        // left to right; multiplicities mod 2
        std::map<std::pair<std::vector<uint32_t>, uint32_t>, int> states;
        states[{{}, wx.back()}] = 1;
        for (int k = 0; k < q; ++k) {
            std::map<std::pair<std::vector<uint32_t>, uint32_t>, int> next;
            for (const auto& [st, c] : states) {
                if (!(c & 1)) continue;
                for (uint32_t term : M.coaction[st.second]) {
                    uint32_t a = term / M.dim(), m = term % M.dim();
                    auto key = st;
                    key.first.push_back(a);
                    key.second = m;
                    ++next[key];
                }
            }
            states = std::move(next);
        }
        for (std::size_t j : y.rep.support()) {
            const auto& wy = yb[j];
            for (const auto& [st, c] : states) {
                if (!(c & 1)) continue;
                std::vector<uint32_t> w(wx.begin(), wx.end() - 1);
                bool dead = false;
                for (int k = 0; k < q && !dead; ++k) {
                    auto prod = A.mono_mul(st.first[static_cast<std::size_t>(k)],
                                           wy[static_cast<std::size_t>(k)]);
                    if (!prod) dead = true;
                    else w.push_back(*prod);
                }
                if (dead) continue;
                for (uint32_t l : mu.image[st.second * Dn + wy.back()]) {
                    auto wl = w;
                    wl.push_back(l);
                    uint32_t idx = cz.basis_index(s, t, wl);
                    out.set(idx, out.get(idx) + Scalar::one());
                }
            }
        }
    }
    std::string name;
    if (!x.name.empty() && !y.name.empty()) name = x.name + "*" + y.name;
    return ExtClass{s, t, std::move(out), std::move(name)};
}

namespace {

// preimage of single target basis vectors under a degreewise-injective-enough
// comodule map; memoized per target index
struct PreimageSolver {
    const Comodule* src;
    const Comodule* dst;
    const ComoduleMap* f;
    std::map<uint32_t, SpVec> memo;

    const SpVec& operator()(uint32_t target_idx) {
        auto it = memo.find(target_idx);
        if (it != memo.end()) return it->second;
        int d = dst->degrees[target_idx];
        auto sb = src->basis_in_degree(d);
        auto db = dst->basis_in_degree(d);
        Matrix m(Field::GF2, db.size(), sb.size());
        for (std::size_t c = 0; c < sb.size(); ++c)
            for (uint32_t tgt : f->image[sb[c]]) {
                auto pos = std::find(db.begin(), db.end(), tgt);
                assert(pos != db.end());
                std::size_t r = static_cast<std::size_t>(pos - db.begin());
                m.set(r, c, m.get(r, c) + Scalar::one());
            }
        Vec rhs(Field::GF2, db.size());
        auto pos = std::find(db.begin(), db.end(), target_idx);
        assert(pos != db.end());
        rhs.set(static_cast<std::size_t>(pos - db.begin()), Scalar::one());
        auto x = solve_particular(m, rhs);
        if (!x) throw std::runtime_error("no preimage under comodule map");
        SpVec out;
        for (std::size_t i : x->support()) out.push_back(sb[i]);
        return memo.emplace(target_idx, std::move(out)).first->second;
    }
};

Vec map_words(CobarComplex& from, CobarComplex& to, int s, int t, const Vec& v,
              const std::function<const SpVec&(uint32_t)>& last_letter) {
    const auto& fb = from.basis(s, t);
    Vec out(Field::GF2, to.basis(s, t).size());
    for (std::size_t i : v.support()) {
        std::vector<uint32_t> w = fb[i];
        for (uint32_t m : last_letter(w.back())) {
            w.back() = m;
            uint32_t idx = to.basis_index(s, t, w);
            out.set(idx, out.get(idx) + Scalar::one());
        }
    }
    return out;
}

}  // namespace

ExtClass ext_map(const ComoduleMap& f, CobarComplex& src, CobarComplex& dst,
                 const ExtClass& x) {
    Vec moved = map_words(src, dst, x.s, x.t, x.rep,
                          [&](uint32_t m) -> const SpVec& { return f.image[m]; });
    return ExtClass{x.s, x.t, std::move(moved), x.name};
}

ExtClass connecting_hom(const SES& ses, CobarComplex& csub, CobarComplex& cmid,
                        CobarComplex& cquot, const ExtClass& x) {
    PreimageSolver lift_proj{&ses.mid, &ses.quot, &ses.proj, {}};
    PreimageSolver lift_incl{&ses.sub, &ses.mid, &ses.incl, {}};
    Vec lifted = map_words(cquot, cmid, x.s, x.t, x.rep,
                           [&](uint32_t m) -> const SpVec& { return lift_proj(m); });
    Vec boundary = cmid.d_apply(x.s, x.t, lifted);
    Vec pulled = map_words(cmid, csub, x.s + 1, x.t, boundary,
                           [&](uint32_t m) -> const SpVec& { return lift_incl(m); });
    std::string name = x.name.empty() ? "" : "d(" + x.name + ")";
    return ExtClass{x.s + 1, x.t, std::move(pulled), std::move(name)};
}

MasseyResult massey_triple(CobarComplex& ck, CobarComplex& cm, const ExtClass& x,
                           const ExtClass& y, const ExtClass& z) {
    MasseyResult res;
    ExtClass xy = ck.product(ck, x, y);
    ExtClass yz = cm.product(ck, y, z);
    if (!ck.is_boundary(xy.s, xy.t, xy.rep)) {
        res.reason = "x*y is not a coboundary";
        return res;
    }
    if (!cm.is_boundary(yz.s, yz.t, yz.rep)) {
        res.reason = "y*z is not a coboundary";
        return res;
    }
    auto u = solve_particular(ck.differential(xy.s - 1, xy.t), xy.rep);
    auto v = solve_particular(cm.differential(yz.s - 1, yz.t), yz.rep);
    assert(u && v);
    ExtClass ucls{xy.s - 1, xy.t, *u, ""};
    ExtClass vcls{yz.s - 1, yz.t, *v, ""};
    ExtClass uz = cm.product(ck, ucls, z);
    ExtClass xv = cm.product(ck, x, vcls);
    res.defined = true;
    res.value.s = uz.s;
    res.value.t = uz.t;
    res.value.rep = uz.rep;
    res.value.rep.add_scaled(xv.rep, Scalar::one());
    if (!x.name.empty() || !y.name.empty() || !z.name.empty())
        res.value.name = "<" + x.name + "," + y.name + "," + z.name + ">";

    // indeterminacy: x * Ext(vcls bidegree) + Ext(ucls bidegree) * z
    std::vector<Vec> span;
    IncrementalSpan acc(Field::GF2,
                        static_cast<std::size_t>(cm.ext_dimension(res.value.s, res.value.t)));
    auto push = [&](const ExtClass& w) {
        auto coords = cm.ext_coords(w.s, w.t, w.rep);
        assert(coords);
        if (coords->is_zero()) return;
        if (acc.add(*coords)) span.push_back(*coords);
    };
    for (int k = 0; k < cm.ext_dimension(vcls.s, vcls.t); ++k)
        push(cm.product(ck, x, cm.ext_class(vcls.s, vcls.t, static_cast<uint32_t>(k))));
    for (int k = 0; k < ck.ext_dimension(ucls.s, ucls.t); ++k)
        push(cm.product(ck, ck.ext_class(ucls.s, ucls.t, static_cast<uint32_t>(k)), z));
    res.indeterminacy = std::move(span);
    return res;
}

}  // namespace sseq
