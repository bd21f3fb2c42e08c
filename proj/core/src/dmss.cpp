#include "sseq/dmss.hpp"

#include "sseq/textio.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sseq {

namespace {

void toggle_term(std::map<std::vector<uint32_t>, int>& acc, std::vector<uint32_t> w) {
    acc[std::move(w)] ^= 1;
}

std::vector<std::vector<uint32_t>> collect_terms(
    const std::map<std::vector<uint32_t>, int>& acc) {
    std::vector<std::vector<uint32_t>> out;
    for (const auto& [w, par] : acc)
        if (par) out.push_back(w);
    return out;
}

void toggle_sp(SpVec& v, uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        v.erase(it);
    else
        v.insert(it, x);
}

// exponent vectors behind a polynomial piece, recovered from its labels
std::vector<std::vector<int>> parse_exponents(const Comodule& P,
                                              const std::vector<std::string>& names) {
    std::vector<std::vector<int>> out;
    for (const std::string& label : P.labels) {
        std::vector<int> e(names.size(), 0);
        if (label != "1") {
            std::stringstream ss(label);
            std::string factor;
            while (std::getline(ss, factor, '*')) {
                std::string base = factor;
                int exp = 1;
                if (auto caret = factor.find('^'); caret != std::string::npos) {
                    base = factor.substr(0, caret);
                    exp = std::stoi(factor.substr(caret + 1));
                }
                auto it = std::find(names.begin(), names.end(), base);
                if (it == names.end())
                    throw std::runtime_error("unknown generator in label: " + label);
                e[static_cast<std::size_t>(it - names.begin())] += exp;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

int ExteriorAlgebra::mask_degree(uint32_t mask) const {
    int d = 0;
    for (uint32_t j = 0; j < gens(); ++j)
        if (mask & (1u << j)) d += gen_degrees[j];
    return d;
}

std::string ExteriorAlgebra::mask_label(uint32_t mask) const {
    if (!mask) return "1";
    std::string out;
    for (uint32_t j = 0; j < gens(); ++j)
        if (mask & (1u << j)) {
            if (!out.empty()) out += "*";
            out += gen_names[j];
        }
    return out;
}

Comodule ExteriorAlgebra::comodule() const {
    const HopfAlgebra& Alg = *A;
    const uint32_t k = gens(), D = dim();
    Comodule out;
    out.name = name;
    out.A = A;
    for (uint32_t mask = 0; mask < D; ++mask) {
        out.labels.push_back(mask_label(mask));
        out.degrees.push_back(mask_degree(mask));
    }
    for (uint32_t mask = 0; mask < D; ++mask) {
        // multiply the generator coactions inside A (x) E
        std::map<std::pair<uint32_t, uint32_t>, int> acc;
        acc[{Alg.unit(), 0u}] = 1;
        for (uint32_t j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            std::map<std::pair<uint32_t, uint32_t>, int> next;
            for (const auto& [key, par] : acc) {
                if (!par) continue;
                for (uint32_t p : gen_coact[j]) {
                    uint32_t a = p / (k + 1), slot = p % (k + 1);
                    auto prod = Alg.mono_mul(key.first, a);
                    if (!prod) continue;
                    uint32_t m = key.second;
                    if (slot) {
                        uint32_t bit = 1u << (slot - 1);
                        if (m & bit) continue;  // x_l squares to zero
                        m |= bit;
                    }
                    next[{*prod, m}] ^= 1;
                }
            }
            acc = std::move(next);
        }
        SpVec c;
        for (const auto& [key, par] : acc)
            if (par) c.push_back(key.first * D + key.second);
        std::sort(c.begin(), c.end());
        out.coaction.push_back(std::move(c));
    }
    return out;
}

std::vector<std::string> ExteriorAlgebra::validate() const {
    std::vector<std::string> report;
    const uint32_t k = gens();
    for (uint32_t j = 0; j < k; ++j)
        for (uint32_t p : gen_coact[j]) {
            uint32_t a = p / (k + 1), slot = p % (k + 1);
            int rd = slot ? gen_degrees[slot - 1] : 0;
            if (A->degree(a) + rd != gen_degrees[j])
                report.push_back("inhomogeneous coaction of " + gen_names[j]);
        }
    for (auto& r : comodule().validate()) report.push_back(r);
    return report;
}

namespace {

ExteriorAlgebra make_exterior(const HopfAlgebra& A, int n, int first_gen,
                              const std::string& name) {
    ExteriorAlgebra E;
    E.name = name;
    E.A = &A;
    std::vector<uint32_t> gen_idx;  // basis index of x_i = z_i^{2^(n+1-i)}
    for (int i = first_gen; i <= n + 1; ++i) {
        std::vector<uint8_t> exp(static_cast<std::size_t>(A.num_generators()), 0);
        exp[static_cast<std::size_t>(i - 1)] = static_cast<uint8_t>(1 << (n + 1 - i));
        uint32_t idx = 0;
        bool found = false;
        for (uint32_t b = 0; b < A.dim(); ++b)
            if (A.exponents(b) == exp) {
                idx = b;
                found = true;
                break;
            }
        if (!found) throw std::runtime_error("exterior generator not in the algebra");
        E.gen_names.push_back("x" + std::to_string(i));
        E.gen_degrees.push_back(A.degree(idx));
        gen_idx.push_back(idx);
    }
    const uint32_t k = static_cast<uint32_t>(gen_idx.size());
    for (uint32_t j = 0; j < k; ++j) {
        SpVec c;
        for (uint32_t p : A.coproduct(gen_idx[j])) {
            uint32_t a = p / A.dim(), b = p % A.dim();
            uint32_t slot = 0;
            if (b != A.unit()) {
                auto it = std::find(gen_idx.begin(), gen_idx.end(), b);
                if (it == gen_idx.end())
                    throw std::runtime_error("coaction leaves the almost-graded span");
                slot = static_cast<uint32_t>(it - gen_idx.begin()) + 1;
            }
            c.push_back(a * (k + 1) + slot);
        }
        std::sort(c.begin(), c.end());
        E.gen_coact.push_back(std::move(c));
    }
    return E;
}

}  // namespace

ExteriorAlgebra exterior_E(int n) {
    const HopfAlgebra& A = builtin_hopf("A" + std::to_string(n) + "star");
    return make_exterior(A, n, 1, "E_" + std::to_string(n));
}

ExteriorAlgebra exterior_F(int n) {
    const HopfAlgebra& B = builtin_hopf("B" + std::to_string(n) + "star");
    return make_exterior(B, n, 2, "F_" + std::to_string(n));
}

KoszulData::KoszulData(ExteriorAlgebra E, int last_bound)
    : E_(std::move(E)), ecom_(E_.comodule()), last_bound_(last_bound) {
    const uint32_t k = E_.gens();
    for (uint32_t j = 0; j < k; ++j) {
        std::string n = E_.gen_names[j];
        if (!n.empty() && n[0] == 'x') n[0] = 'y';
        y_names_.push_back(n);
        y_degs_.push_back(E_.gen_degrees[j]);
        SpVec c;
        for (uint32_t p : E_.gen_coact[j]) {
            uint32_t a = p / (k + 1), slot = p % (k + 1);
            if (!slot) continue;  // the unit part dies in P_1 = (k (+) E_1)/k
            c.push_back(a * k + (slot - 1));
        }
        std::sort(c.begin(), c.end());
        y_coact_.push_back(std::move(c));
    }
}

const Comodule& KoszulData::piece(int sigma) {
    auto it = pieces_.find(sigma);
    if (it == pieces_.end())
        it = pieces_
                 .emplace(sigma, polynomial_comodule(*E_.A, y_names_, y_degs_, y_coact_,
                                                     sigma, last_bound_,
                                                     E_.name + "P_" + std::to_string(sigma)))
                 .first;
    return it->second;
}

const std::vector<std::vector<int>>& KoszulData::exponents(int sigma) {
    auto it = exps_.find(sigma);
    if (it == exps_.end())
        it = exps_.emplace(sigma, parse_exponents(piece(sigma), y_names_)).first;
    return it->second;
}

std::optional<uint32_t> KoszulData::mono_index(int sigma, const std::vector<int>& e) {
    const auto& exps = exponents(sigma);
    if (last_bound_ >= 0 && e.back() > last_bound_) return std::nullopt;
    for (uint32_t i = 0; i < exps.size(); ++i)
        if (exps[i] == e) return i;
    return std::nullopt;
}

SpVec KoszulData::koszul_d(const Comodule& M, int sigma, const SpVec& v) {
    const uint32_t Dp = piece(sigma).dim(), Dp1 = piece(sigma + 1).dim(), Dm = M.dim();
    const auto& exps = exponents(sigma);
    SpVec out;
    for (uint32_t idx : v) {
        uint32_t m = idx % Dm, rest = idx / Dm;
        uint32_t p = rest % Dp, mask = rest / Dp;
        for (uint32_t j = 0; j < E_.gens(); ++j) {
            if (!(mask & (1u << j))) continue;
            std::vector<int> e = exps[p];
            e[j] += 1;
            auto q = mono_index(sigma + 1, e);
            if (!q) continue;  // truncated away
            toggle_sp(out, ((mask ^ (1u << j)) * Dp1 + *q) * Dm + m);
        }
    }
    return out;
}

std::vector<std::string> KoszulData::check_exactness(int t_bound) {
    std::vector<std::string> report;
    Comodule triv = trivial_comodule(*E_.A);
    // basis of (E (x) P_sigma)_t as packed indices mask * dimP + p
    auto basis_at = [&](int sigma, int t) {
        std::vector<uint32_t> out;
        const Comodule& P = piece(sigma);
        for (uint32_t mask = 0; mask < E_.dim(); ++mask) {
            int ed = E_.mask_degree(mask);
            for (uint32_t p = 0; p < P.dim(); ++p)
                if (ed + P.degrees[p] == t) out.push_back(mask * P.dim() + p);
        }
        return out;
    };
    for (int t = 0; t <= t_bound; ++t) {
        std::vector<std::vector<uint32_t>> bases;
        int sigma = 0;
        while (true) {
            bases.push_back(basis_at(sigma, t));
            if (piece(sigma).dim() == 0 || piece(sigma).min_degree() > t) break;
            ++sigma;
        }
        std::size_t prev_rank = 0;
        for (std::size_t s = 0; s + 1 < bases.size(); ++s) {
            const auto& cols = bases[s];
            const auto& rows = bases[s + 1];
            std::map<uint32_t, std::size_t> rpos;
            for (std::size_t r = 0; r < rows.size(); ++r) rpos[rows[r]] = r;
            Matrix mat(Field::GF2, rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (uint32_t r : koszul_d(triv, static_cast<int>(s), {cols[c]}))
                    mat.set(rpos.at(r), c, Scalar::one());
            std::size_t rk = rank(mat);
            std::size_t ker = cols.size() - rk;
            std::size_t expect = prev_rank + ((s == 0 && t == 0) ? 1 : 0);
            if (ker != expect)
                report.push_back("homology at filtration " + std::to_string(s) +
                                 ", degree " + std::to_string(t));
            prev_rank = rk;
        }
        if (!bases.empty() && bases.back().size() != prev_rank &&
            !(t == 0 && bases.size() == 1))
            report.push_back("homology at the end of degree " + std::to_string(t));
    }
    return report;
}

ComoduleMap poly_mul_map(KoszulData& K, int sigma_a, int sigma_b) {
    const uint32_t Da = K.piece(sigma_a).dim(), Db = K.piece(sigma_b).dim();
    const auto& ea = K.exponents(sigma_a);
    const auto& eb = K.exponents(sigma_b);
    ComoduleMap f;
    f.image.resize(static_cast<std::size_t>(Da) * Db);
    for (uint32_t i = 0; i < Da; ++i)
        for (uint32_t j = 0; j < Db; ++j) {
            std::vector<int> e = ea[i];
            for (std::size_t g = 0; g < e.size(); ++g) e[g] += eb[j][g];
            if (auto q = K.mono_index(sigma_a + sigma_b, e))
                f.image[i * Db + j] = {*q};
        }
    return f;
}

DoubleComplex::DoubleComplex(KoszulData& K, Comodule M, int t_max)
    : K_(&K), M_(std::move(M)), t_max_(t_max) {
    assert(M_.A == &K.algebra());
}

const Comodule& DoubleComplex::column(int sigma) {
    auto it = columns_.find(sigma);
    if (it == columns_.end())
        it = columns_.emplace(sigma, tensor(tensor(K_->exterior_comodule(), K_->piece(sigma)), M_))
                 .first;
    return it->second;
}

CobarComplex& DoubleComplex::cobar(int sigma) {
    auto it = cobars_.find(sigma);
    if (it == cobars_.end())
        it = cobars_
                 .emplace(sigma, std::make_unique<CobarComplex>(K_->algebra(), column(sigma),
                                                                t_max_))
                 .first;
    return *it->second;
}

uint32_t DoubleComplex::column_index(int sigma, uint32_t mask, const std::vector<int>& yexp,
                                     uint32_t m) {
    auto p = K_->mono_index(sigma, yexp);
    if (!p) throw std::invalid_argument("monomial not in the polynomial piece");
    return (mask * K_->piece(sigma).dim() + *p) * M_.dim() + m;
}

DcElement DoubleComplex::make(int s, int sigma, std::vector<std::vector<uint32_t>> terms) {
    DcElement x;
    x.s = s;
    x.sigma = sigma;
    std::map<std::vector<uint32_t>, int> acc;
    for (auto& w : terms) {
        assert(static_cast<int>(w.size()) == s + 1);
        acc[w] ^= 1;
    }
    x.terms = collect_terms(acc);
    if (!x.terms.empty()) {
        const HopfAlgebra& A = K_->algebra();
        const Comodule& col = column(sigma);
        for (std::size_t n = 0; n < x.terms.size(); ++n) {
            const auto& w = x.terms[n];
            int t = col.degrees[w.back()];
            for (int i = 0; i < s; ++i) t += A.degree(w[static_cast<std::size_t>(i)]);
            if (n == 0)
                x.t = t;
            else if (t != x.t)
                throw std::invalid_argument("inhomogeneous double-complex element");
        }
    }
    return x;
}

bool DoubleComplex::coeff(const DcElement& x, const std::vector<uint32_t>& term) {
    return std::find(x.terms.begin(), x.terms.end(), term) != x.terms.end();
}

Vec DoubleComplex::to_vec(const DcElement& x) {
    CobarComplex& c = cobar(x.sigma);
    const auto& basis = c.basis(x.s, x.t);
    Vec v(Field::GF2, basis.size());
    for (const auto& w : x.terms) v.set(c.basis_index(x.s, x.t, w), Scalar::one());
    return v;
}

DcElement DoubleComplex::from_vec(int s, int sigma, int t, const Vec& v) {
    CobarComplex& c = cobar(sigma);
    const auto& basis = c.basis(s, t);
    DcElement x;
    x.s = s;
    x.sigma = sigma;
    x.t = t;
    for (std::size_t i : v.support()) x.terms.push_back(basis[i]);
    return x;
}

DcElement DoubleComplex::d_v(const DcElement& x) {
    CobarComplex& c = cobar(x.sigma);
    Vec image = c.d_apply(x.s, x.t, to_vec(x));
    return from_vec(x.s + 1, x.sigma, x.t, image);
}

DcElement DoubleComplex::d_h(const DcElement& x) {
    std::map<std::vector<uint32_t>, int> acc;
    for (const auto& w : x.terms) {
        for (uint32_t idx : K_->koszul_d(M_, x.sigma, {w.back()})) {
            std::vector<uint32_t> nw = w;
            nw.back() = idx;
            acc[std::move(nw)] ^= 1;
        }
    }
    DcElement out;
    out.s = x.s;
    out.sigma = x.sigma + 1;
    out.t = x.t;
    out.terms = collect_terms(acc);
    return out;
}

std::optional<DcElement> DoubleComplex::solve_dv(const DcElement& rhs) {
    if (rhs.s != 1) throw std::invalid_argument("solve_dv wants a length-one element");
    CobarComplex& c = cobar(rhs.sigma);
    const Matrix& d = c.differential(0, rhs.t);
    auto x = solve_particular(d, to_vec(rhs));
    if (!x) return std::nullopt;
    return from_vec(0, rhs.sigma, rhs.t, *x);
}

std::vector<DcElement> DoubleComplex::dv_kernel(int sigma, int t) {
    CobarComplex& c = cobar(sigma);
    std::vector<DcElement> out;
    for (const Vec& k : kernel_basis(c.differential(0, t)))
        out.push_back(from_vec(0, sigma, t, k));
    return out;
}

DcElement dc_product(DoubleComplex& dcx, const DcElement& x, DoubleComplex& dcy,
                     const DcElement& y) {
    KoszulData& K = dcx.koszul();
    assert(&K == &dcy.koszul());
    assert(dcx.coefficients().dim() == 1);
    const HopfAlgebra& A = K.algebra();
    const Comodule& colx = dcx.column(x.sigma);
    const uint32_t Dx = colx.dim();
    const uint32_t Dpx = K.piece(x.sigma).dim();
    const uint32_t Dpy = K.piece(y.sigma).dim();
    const uint32_t Dpz = K.piece(x.sigma + y.sigma).dim();
    const uint32_t Dm = dcy.coefficients().dim();
    const auto& ex = K.exponents(x.sigma);
    const auto& ey = K.exponents(y.sigma);
    const int q = y.s;

    std::map<std::vector<uint32_t>, int> acc;
    for (const auto& wx : x.terms) {
        // iterate the coaction of the coefficient of wx q times
        std::vector<std::pair<std::vector<uint32_t>, uint32_t>> states = {
            {{}, wx.back()}};
        for (int step = 0; step < q; ++step) {
            std::vector<std::pair<std::vector<uint32_t>, uint32_t>> next;
            for (const auto& [word, n] : states)
                for (uint32_t p : colx.coaction[n]) {
                    auto nw = word;
                    nw.push_back(p / Dx);
                    next.emplace_back(std::move(nw), p % Dx);
                }
            states = std::move(next);
        }
        for (const auto& wy : y.terms) {
            for (const auto& [cword, n0] : states) {
                std::vector<uint32_t> w(wx.begin(), wx.end() - 1);
                bool dead = false;
                for (int i = 0; i < q; ++i) {
                    auto prod = A.mono_mul(cword[static_cast<std::size_t>(i)],
                                           wy[static_cast<std::size_t>(i)]);
                    if (!prod) {
                        dead = true;
                        break;
                    }
                    w.push_back(*prod);
                }
                if (dead) continue;
                // multiply the coefficients inside E (x) P (x) M
                uint32_t px = n0 % Dpx, maskx = n0 / Dpx;
                uint32_t m = wy.back() % Dm, resty = wy.back() / Dm;
                uint32_t py = resty % Dpy, masky = resty / Dpy;
                if (maskx & masky) continue;
                std::vector<int> e = ex[px];
                for (std::size_t g = 0; g < e.size(); ++g) e[g] += ey[py][g];
                auto pz = K.mono_index(x.sigma + y.sigma, e);
                if (!pz) continue;
                w.push_back(((maskx | masky) * Dpz + *pz) * Dm + m);
                acc[std::move(w)] ^= 1;
            }
        }
    }
    DcElement out;
    out.s = x.s + y.s;
    out.sigma = x.sigma + y.sigma;
    out.t = x.t + y.t;
    out.terms = collect_terms(acc);
    return out;
}

DcElement compare_push(DoubleComplex& src, DoubleComplex& dst, const HopfQuotient& q,
                       const DcElement& x) {
    KoszulData& Ks = src.koszul();
    KoszulData& Kd = dst.koszul();
    const ExteriorAlgebra& Es = Ks.exterior();
    const ExteriorAlgebra& Ed = Kd.exterior();
    assert(q.src == &Ks.algebra() && q.dst == &Kd.algebra());
    assert(src.coefficients().labels == dst.coefficients().labels);

    // generator matching by name; -1 = maps to zero
    std::vector<int> egen(Es.gens(), -1), ygen(Ks.dual_names().size(), -1);
    for (uint32_t j = 0; j < Es.gens(); ++j)
        for (uint32_t l = 0; l < Ed.gens(); ++l)
            if (Es.gen_names[j] == Ed.gen_names[l]) egen[j] = static_cast<int>(l);
    for (std::size_t j = 0; j < Ks.dual_names().size(); ++j)
        for (std::size_t l = 0; l < Kd.dual_names().size(); ++l)
            if (Ks.dual_names()[j] == Kd.dual_names()[l]) ygen[j] = static_cast<int>(l);

    const uint32_t Dps = Ks.piece(x.sigma).dim();
    const uint32_t Dpd = Kd.piece(x.sigma).dim();
    const uint32_t Dm = src.coefficients().dim();
    const auto& es = Ks.exponents(x.sigma);

    std::map<std::vector<uint32_t>, int> acc;
    for (const auto& w : x.terms) {
        std::vector<uint32_t> nw;
        bool dead = false;
        for (int i = 0; i < x.s; ++i) {
            auto im = q.image[w[static_cast<std::size_t>(i)]];
            if (!im) {
                dead = true;
                break;
            }
            nw.push_back(*im);
        }
        if (dead) continue;
        uint32_t m = w.back() % Dm, rest = w.back() / Dm;
        uint32_t p = rest % Dps, mask = rest / Dps;
        uint32_t nmask = 0;
        for (uint32_t j = 0; j < Es.gens() && !dead; ++j)
            if (mask & (1u << j)) {
                if (egen[j] < 0)
                    dead = true;
                else
                    nmask |= 1u << egen[j];
            }
        if (dead) continue;
        std::vector<int> ne(Kd.dual_names().size(), 0);
        for (std::size_t g = 0; g < es[p].size() && !dead; ++g) {
            if (!es[p][g]) continue;
            if (ygen[g] < 0)
                dead = true;
            else
                ne[static_cast<std::size_t>(ygen[g])] += es[p][g];
        }
        if (dead) continue;
        auto np = Kd.mono_index(x.sigma, ne);
        if (!np) continue;
        nw.push_back((nmask * Dpd + *np) * Dm + m);
        acc[std::move(nw)] ^= 1;
    }
    DcElement out;
    out.s = x.s;
    out.sigma = x.sigma;
    out.t = x.t;
    out.terms = collect_terms(acc);
    return out;
}

D1Result dmss_d1(DoubleComplex& dc, int sigma, int t, const SpVec& v) {
    KoszulData& K = dc.koszul();
    const HopfAlgebra& A = K.algebra();
    const Comodule& col = dc.column(sigma);
    const Comodule& M = dc.coefficients();
    const uint32_t Dm = M.dim(), Dp = K.piece(sigma).dim(), Dc = col.dim();
    auto cols = col.basis_in_degree(t);
    std::map<uint32_t, std::size_t> cpos;
    for (std::size_t c = 0; c < cols.size(); ++c) cpos[cols[c]] = c;

    // rows: reduced coaction (a != 1) must vanish, the unit exterior
    // component must equal v
    const uint32_t unit_rows = Dp * Dm;
    Matrix mat(Field::GF2, static_cast<std::size_t>(A.dim()) * Dc + unit_rows, cols.size());
    Vec rhs(Field::GF2, mat.rows());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (uint32_t p : col.coaction[cols[c]]) {
            if (p / Dc == A.unit()) continue;
            mat.set(p, c, mat.get(p, c) + Scalar::one());
        }
        uint32_t rest = cols[c] / Dm, m = cols[c] % Dm;
        if (rest / Dp == 0)
            mat.set(static_cast<std::size_t>(A.dim()) * Dc + rest % Dp * Dm + m, c,
                    Scalar::one());
    }
    for (uint32_t idx : v) rhs.set(static_cast<std::size_t>(A.dim()) * Dc + idx, Scalar::one());
    auto sol = solve_particular(mat, rhs);
    if (!sol) throw std::runtime_error("no primitive representative");
    if (!kernel_basis(mat).empty())
        throw std::runtime_error("primitive representative is not unique");

    D1Result out;
    for (std::size_t i : sol->support()) out.lift.push_back(cols[i]);
    std::sort(out.lift.begin(), out.lift.end());
    SpVec image = K.koszul_d(M, sigma, out.lift);
    // the image must again be primitive; read off its unit exterior component
    const Comodule& col1 = dc.column(sigma + 1);
    SpVec red = col1.coact(image);
    for (uint32_t idx : image) toggle_sp(red, A.unit() * col1.dim() + idx);
    if (!red.empty()) throw std::runtime_error("differential image is not primitive");
    const uint32_t Dp1 = K.piece(sigma + 1).dim();
    for (uint32_t idx : image) {
        uint32_t m = idx % Dm, rest = idx / Dm;
        if (rest / Dp1 == 0) out.value.push_back(rest % Dp1 * Dm + m);
    }
    std::sort(out.value.begin(), out.value.end());
    return out;
}

ExtClass dmss_d1_ext(DoubleComplex& dc, int sigma, const ExtClass& x) {
    DcElement rep = dc.from_vec(x.s, sigma, x.t, x.rep);
    DcElement image = dc.d_h(rep);
    ExtClass out;
    out.s = x.s;
    out.t = x.t;
    out.rep = dc.to_vec(image);
    out.name = x.name.empty() ? "" : "d1(" + x.name + ")";
    return out;
}

DmssE1::DmssE1(KoszulData& K, const HopfQuotient& q, Comodule M, int t_max)
    : K_(&K), q_(&q), M_(std::move(M)), t_max_(t_max) {
    assert(q.src == &K.algebra());
}

CobarComplex& DmssE1::complex(int sigma) {
    auto it = complexes_.find(sigma);
    if (it == complexes_.end())
        it = complexes_
                 .emplace(sigma, std::make_unique<CobarComplex>(
                                     *q_->dst,
                                     corestrict(tensor(K_->piece(sigma), M_), *q_),
                                     t_max_))
                 .first;
    return *it->second;
}

int DmssE1::dim(int s, int t, int sigma) { return complex(sigma).ext_dimension(s, t); }

std::vector<std::array<int, 3>> PolyE2::d1_monomial(const std::array<int, 3>& m) {
    auto [a, b, c] = m;
    std::map<std::array<int, 3>, int> acc;
    if ((b / 2) % 2) acc[{a + 3, b - 2, c}] ^= 1;
    if ((c / 4) % 2) acc[{a + 1, b + 4, c - 4}] ^= 1;
    if (b % 2 == 0 && c % 4 >= 2) acc[{a + 2, b + 1, c - 2}] ^= 1;
    std::vector<std::array<int, 3>> out;
    for (const auto& [k, par] : acc)
        if (par) out.push_back(k);
    return out;
}

std::vector<std::array<int, 3>> PolyE2::d1(const std::vector<std::array<int, 3>>& p) {
    std::map<std::array<int, 3>, int> acc;
    for (const auto& m : p)
        for (const auto& n : d1_monomial(m)) acc[n] ^= 1;
    std::vector<std::array<int, 3>> out;
    for (const auto& [k, par] : acc)
        if (par) out.push_back(k);
    return out;
}

PolyE2::PolyE2(int sigma_max, int t_max) : sigma_max_(sigma_max), t_max_(t_max) {
    for (int sigma = 0; sigma <= sigma_max + 1; ++sigma)
        for (int t = 0; t <= t_max; ++t) {
            Slot s;
            for (int a = 0; a <= sigma; ++a)
                for (int b = 0; a + b <= sigma; ++b) {
                    int c = sigma - a - b;
                    if (4 * a + 6 * b + 7 * c == t) s.mons.push_back({a, b, c});
                }
            if (s.mons.empty() && sigma > 0) continue;
            std::sort(s.mons.begin(), s.mons.end());
            for (uint32_t i = 0; i < s.mons.size(); ++i) s.index[s.mons[i]] = i;
            slots_[{sigma, t}] = std::move(s);
        }
    for (auto& [key, s] : slots_) {
        auto [sigma, t] = key;
        auto prev = slots_.find({sigma - 1, t});
        if (prev == slots_.end()) continue;
        const Slot& ps = prev->second;
        s.d_in = Matrix(Field::GF2, s.mons.size(), ps.mons.size());
        for (std::size_t c = 0; c < ps.mons.size(); ++c)
            for (const auto& m : d1_monomial(ps.mons[c])) {
                auto it = s.index.find(m);
                if (it == s.index.end()) throw std::logic_error("differential left the window");
                s.d_in.set(it->second, c, s.d_in.get(it->second, c) + Scalar::one());
            }
        s.rank_in = rank(s.d_in);
        prev->second.rank_out = s.rank_in;
    }
}

const PolyE2::Slot* PolyE2::slot(int sigma, int t) const {
    auto it = slots_.find({sigma, t});
    return it == slots_.end() ? nullptr : &it->second;
}

int PolyE2::e1_dim(int sigma, int t) const {
    const Slot* s = slot(sigma, t);
    return s ? static_cast<int>(s->mons.size()) : 0;
}

int PolyE2::dim(int sigma, int t) const {
    if (sigma > sigma_max_) throw std::out_of_range("filtration beyond the window");
    const Slot* s = slot(sigma, t);
    if (!s) return 0;
    return static_cast<int>(s->mons.size() - s->rank_out - s->rank_in);
}

bool PolyE2::is_cycle(const std::vector<std::array<int, 3>>& p) const {
    return d1(p).empty();
}

bool PolyE2::is_boundary(const std::vector<std::array<int, 3>>& p) const {
    if (p.empty()) return true;
    int sigma = p[0][0] + p[0][1] + p[0][2];
    int t = 4 * p[0][0] + 6 * p[0][1] + 7 * p[0][2];
    const Slot* s = slot(sigma, t);
    if (!s || s->d_in.rows() == 0) return false;
    Vec b(Field::GF2, s->mons.size());
    for (const auto& m : p) {
        auto it = s->index.find(m);
        if (it == s->index.end()) throw std::invalid_argument("monomial outside the window");
        b.set(it->second, b.get(it->second) + Scalar::one());
    }
    if (b.is_zero()) return true;
    return solve_particular(s->d_in, b).has_value();
}

bool PolyE2::same_class(const std::vector<std::array<int, 3>>& p,
                        const std::vector<std::array<int, 3>>& q) const {
    std::map<std::array<int, 3>, int> acc;
    for (const auto& m : p) acc[m] ^= 1;
    for (const auto& m : q) acc[m] ^= 1;
    std::vector<std::array<int, 3>> diff;
    for (const auto& [k, par] : acc)
        if (par) diff.push_back(k);
    return is_boundary(diff);
}

uint32_t exotic_product_lambda(int i, int j) {
    const HopfAlgebra& B = builtin_hopf("B2star");
    const HopfAlgebra& A2 = builtin_hopf("A2star");
    ExteriorAlgebra F = exterior_F(2);
    KoszulData K(F);
    DoubleComplex dck(K, trivial_comodule(B), 44);
    HopfQuotient qB = HopfQuotient::make(A2, B);
    Comodule M = corestrict(build_A1_comodule(i, j), qB);
    DoubleComplex dcm(K, M, 44);
    const uint32_t a0 = static_cast<uint32_t>(M.find_label("a0"));
    const uint32_t a1 = static_cast<uint32_t>(M.find_label("a1"));
    const uint32_t a2 = static_cast<uint32_t>(M.find_label("a2"));
    const uint32_t a3 = static_cast<uint32_t>(M.find_label("a3"));

    // first factor: [xi2|y2^2] + [xi1^3|y2^2] + [xi1|y3^2]
    std::vector<std::vector<uint32_t>> mt;
    for (uint32_t a : B.xi(1)) mt.push_back({a, dck.column_index(2, 0, {2, 0}, 0)});
    for (uint32_t a : B.pow(B.xi(0), 3)) mt.push_back({a, dck.column_index(2, 0, {2, 0}, 0)});
    for (uint32_t a : B.xi(0)) mt.push_back({a, dck.column_index(2, 0, {0, 2}, 0)});
    DcElement Mel = dck.make(1, 2, std::move(mt));

    // second factor: [y2 y3^3|a0] + [y2^2 y3^2|a1] + [y2^3 y3|a2] + [y2^4|a3]
    DcElement Nel = dcm.make(0, 4, {{dcm.column_index(4, 0, {1, 3}, a0)},
                                    {dcm.column_index(4, 0, {2, 2}, a1)},
                                    {dcm.column_index(4, 0, {3, 1}, a2)},
                                    {dcm.column_index(4, 0, {4, 0}, a3)}});

    DcElement MN = dc_product(dck, Mel, dcm, Nel);
    if (!dcm.d_v(MN).is_zero()) throw std::logic_error("product is not vertically closed");
    auto P = dcm.solve_dv(MN);
    if (!P) throw std::logic_error("vertical solve failed");
    DcElement dh = dcm.d_h(*P);
    return dcm.coeff(dh, {dcm.column_index(7, 0, {7, 0}, a0)}) ? 1u : 0u;
}

}  // namespace sseq
