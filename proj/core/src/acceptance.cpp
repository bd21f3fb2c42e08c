#include "sseq/acceptance.hpp"

#include "sseq/chart.hpp"
#include "sseq/cobar.hpp"
#include "sseq/dmss.hpp"
#include "sseq/groupcoh.hpp"
#include "sseq/minres.hpp"
#include "sseq/ssengine.hpp"
#include "sseq/textio.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

namespace sseq {

namespace {

// failure collector: counts checks, keeps the first failure message
struct Check {
    int total = 0, fails = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++fails;
            if (first.empty()) first = what;
        }
    }
    bool pass() const { return fails == 0; }
    std::string detail(const std::string& summary) const {
        if (pass()) return summary + " (" + std::to_string(total) + " checks)";
        return std::to_string(fails) + "/" + std::to_string(total) +
               " checks failed; first: " + first;
    }
};

std::string at(int s, int t) {
    return "(s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")";
}

// dim Ext^{s,t} over the height-one dual from the polynomial presentation
// F2[h0, h1, v, v14]/(h1^3, h0 h1, h1 v, v^2 - h0^2 v14): a basis is the
// monomials h0^a v^c v14^d (c <= 1) together with h1^b v14^d (1 <= b <= 2)
int height_one_dim(int s, int t) {
    int n = 0;
    for (int b = 1; b <= 2; ++b)
        if (b <= s && (s - b) % 4 == 0 && 2 * b + 3 * (s - b) == t) ++n;
    for (int c = 0; c <= 1; ++c)
        for (int d = 0; 3 * c + 4 * d <= s; ++d) {
            int a = s - 3 * c - 4 * d;
            if (a + 7 * c + 12 * d == t) ++n;
        }
    return n;
}

bool vanishes(CobarComplex& c, const ExtClass& x) {
    auto co = c.ext_coords(x.s, x.t, x.rep);
    return co && co->is_zero();
}

bool class_eq(CobarComplex& c, int s, int t, const Vec& x, const Vec& y) {
    auto a = c.ext_coords(s, t, x);
    auto b = c.ext_coords(s, t, y);
    return a && b && a->support() == b->support();
}

// the section-level class of a polynomial p: the unique primitive of
// piece(sigma) (x) M over the quotient with unit-coefficient component p
SpVec section_class(KoszulData& K, const HopfQuotient& q, const Comodule& M, int sigma,
                    const std::vector<std::array<int, 3>>& p, bool& ok) {
    const Comodule& P = K.piece(sigma);
    uint32_t Dm = M.dim();
    std::vector<uint32_t> targets;
    for (auto& e : p) targets.push_back(*K.mono_index(sigma, {e.begin(), e.end()}));
    int t = P.degrees[targets[0]];
    Comodule col = corestrict(tensor(P, M), q);
    auto prims = primitive_basis(col, t);
    auto cols = col.basis_in_degree(t);
    Matrix m(Field::GF2, P.dim(), prims.size());
    for (std::size_t c = 0; c < prims.size(); ++c)
        for (std::size_t i : prims[c].support())
            if (cols[i] % Dm == 0)
                m.set(cols[i] / Dm, c, m.get(cols[i] / Dm, c) + Scalar::one());
    Vec rhs(Field::GF2, P.dim());
    for (uint32_t tg : targets) rhs.set(tg, Scalar::one());
    auto x = solve_particular(m, rhs);
    if (!x) {
        ok = false;
        return {};
    }
    SpVec v;
    for (std::size_t c : x->support())
        for (std::size_t i : prims[c].support()) {
            uint32_t g = cols[i];
            auto it = std::find(v.begin(), v.end(), g);
            if (it == v.end())
                v.push_back(g);
            else
                v.erase(it);
        }
    return v;
}

DcElement lift_of(DoubleComplex& dc, int sigma, int t, const SpVec& unit_part) {
    auto r = dmss_d1(dc, sigma, t, unit_part);
    std::vector<std::vector<uint32_t>> terms;
    for (uint32_t i : r.lift) terms.push_back({i});
    return dc.make(0, sigma, std::move(terms));
}

// ------------------------------------------------------------- criterion 1

void crit1(Check& c) {
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    Comodule k = trivial_comodule(A1);
    MinresTable mt = minimal_resolution_ext(A1, k, 12, 36);
    for (int s = 0; s <= 12; ++s)
        for (int t = 0; t <= 36; ++t) {
            if (t - s > 24) continue;
            c.expect(mt.dim(s, t) == height_one_dim(s, t), "resolution dim at " + at(s, t));
        }
    CobarComplex ck(A1, k, 14);
    for (int s = 0; s <= 5; ++s)
        for (int t = 0; t <= 14; ++t)
            c.expect(ck.ext_dimension(s, t) == mt.dim(s, t), "cobar dim at " + at(s, t));
}

// ------------------------------------------------------------- criterion 2

void crit2(Check& c) {
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    CobarComplex ck(A1, trivial_comodule(A1), 18);
    auto h0 = ck.ext_class(1, 1, 0), h1 = ck.ext_class(1, 2, 0), v = ck.ext_class(3, 7, 0);

    for (const char* name : {"H(V0)", "H(Ceta)", "V3", "H(Y)"}) {
        Comodule M = build_named_comodule(name);
        CobarComplex cm(A1, M, 18);
        MinresTable mt = minimal_resolution_ext(A1, M, 6, 18);
        for (int s = 0; s <= 5; ++s)
            for (int t = 0; t <= 18; ++t)
                c.expect(cm.ext_dimension(s, t) == mt.dim(s, t),
                         std::string(name) + " dim at " + at(s, t));
    }

    {  // two-cell mod-2 module
        CobarComplex cv(A1, build_named_comodule("H(V0)"), 16);
        auto H0 = cv.ext_class(0, 0, 0), H1 = cv.ext_class(1, 3, 0);
        c.expect(vanishes(cv, cv.product(ck, h0, H0)), "V0: h0 kills the bottom class");
        c.expect(vanishes(cv, cv.product(ck, v, H1)), "V0: v kills the top class");
        auto lhs = cv.ext_coords(2, 4, cv.product(ck, h1, cv.product(ck, h1, H0)).rep);
        auto rhs = cv.ext_coords(2, 4, cv.product(ck, h0, H1).rep);
        c.expect(lhs && rhs && !lhs->is_zero() && lhs->support() == rhs->support(),
                 "V0: h1^2 bottom = h0 top");
        c.expect(class_eq(cv, 3, 7, cv.product(ck, v, H0).rep,
                          cv.product(ck, h1, cv.product(ck, h1, H1)).rep) &&
                     !vanishes(cv, cv.product(ck, v, H0)),
                 "V0: v bottom = h1^2 top");
    }
    {  // two-cell eta module
        CobarComplex cc(A1, build_named_comodule("H(Ceta)"), 16);
        ExtClass e[4] = {cc.ext_class(0, 0, 0), cc.ext_class(1, 3, 0), cc.ext_class(2, 6, 0),
                         cc.ext_class(3, 9, 0)};
        for (int i = 0; i < 4; ++i)
            c.expect(vanishes(cc, cc.product(ck, h1, e[i])),
                     "Ceta: h1 kills generator " + std::to_string(i));
        c.expect(!vanishes(cc, cc.product(ck, v, e[0])) &&
                     class_eq(cc, 3, 7, cc.product(ck, v, e[0]).rep,
                              cc.product(ck, h0, e[2]).rep),
                 "Ceta: v e0 = h0 e2");
        c.expect(!vanishes(cc, cc.product(ck, v, e[1])) &&
                     class_eq(cc, 4, 10, cc.product(ck, v, e[1]).rep,
                              cc.product(ck, h0, e[3]).rep),
                 "Ceta: v e1 = h0 e3");
    }
    {  // three-cell 2-eta module
        CobarComplex c3(A1, build_named_comodule("V3"), 18);
        c.expect(c3.ext_dimension(1, 3) == 2, "V3: two classes in the (1,3) spot");
        auto hh1 = c3.ext_class(1, 3, 0);
        ExtClass aa1 = hh1;
        aa1.rep.add_scaled(c3.ext_class(1, 3, 1).rep, Scalar::one());
        c.expect(vanishes(c3, c3.product(ck, h1, hh1)), "V3: h1 kills the h-class");
        c.expect(!vanishes(c3, c3.product(ck, h0, hh1)), "V3: h0 moves the h-class");
        c.expect(vanishes(c3, c3.product(ck, h0, aa1)), "V3: h0 kills the a-class");
        c.expect(vanishes(c3, c3.product(ck, v, aa1)), "V3: v kills the a-class");
        auto t2 = c3.ext_class(2, 6, 0), t3 = c3.ext_class(3, 9, 0);
        c.expect(vanishes(c3, c3.product(ck, v, t2)), "V3: v kills the middle class");
        c.expect(!vanishes(c3, c3.product(ck, v, t3)), "V3: v acts on the top class");
        c.expect(class_eq(c3, 3, 7, c3.product(ck, h0, t2).rep,
                          c3.product(ck, h1, c3.product(ck, h1, aa1)).rep),
                 "V3: h0 t2 = h1^2 a");
    }
    {  // four-cell module: everything positive-degree acts by zero
        CobarComplex cy(A1, build_named_comodule("H(Y)"), 18);
        for (int i = 0; i <= 3; ++i) {
            auto x = cy.ext_class(i, 3 * i, 0);
            c.expect(cy.ext_dimension(i, 3 * i) == 1 && vanishes(cy, cy.product(ck, h0, x)) &&
                         vanishes(cy, cy.product(ck, h1, x)) &&
                         vanishes(cy, cy.product(ck, v, x)),
                     "Y: generator " + std::to_string(i) + " is annihilated");
        }
    }
}

// ------------------------------------------------------------- criterion 3

void crit3(Check& c) {
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    const int T = 42;
    auto gens_of = [](int sigma) {
        std::vector<std::pair<int, int>> g;  // (s, stem)
        if (sigma == 1) return std::vector<std::pair<int, int>>{{0, 4}, {1, 8}};
        g.push_back({0, 4 * sigma});
        for (int j = 2; j <= sigma; ++j) g.push_back({0, 2 * j + 4 * sigma});
        for (int j = 1; j <= 3; ++j) g.push_back({j, 6 * sigma + 2 * j});
        return g;
    };
    CobarComplex ck(A1, trivial_comodule(A1), T + 1);
    auto h0 = ck.ext_class(1, 1, 0), h1 = ck.ext_class(1, 2, 0);
    auto v = ck.ext_class(3, 7, 0), v14 = ck.ext_class(4, 12, 0);
    std::vector<std::unique_ptr<CobarComplex>> cx(7);
    for (int s = 1; s <= 6; ++s)
        cx[s] = std::make_unique<CobarComplex>(A1, Rprime_sigma(s), T + 1);

    // generator census: a new module generator exactly at the listed spots
    for (int sigma = 1; sigma <= 6; ++sigma) {
        auto glist = gens_of(sigma);
        CobarComplex& cc = *cx[sigma];
        for (int s = 0; s <= 3; ++s)
            for (int t = s; t <= T; ++t) {
                int d = cc.ext_dimension(s, t);
                if (!d) continue;
                IncrementalSpan span(Field::GF2, (std::size_t)d);
                auto feed = [&](const ExtClass& x, int s0, int t0) {
                    if (s0 < 0 || t0 < s0) return;
                    for (int k = 0; k < cc.ext_dimension(s0, t0); ++k) {
                        auto p = cc.product(ck, x, cc.ext_class(s0, t0, (uint32_t)k));
                        auto co = cc.ext_coords(s, t, p.rep);
                        if (co) span.add(*co);
                    }
                };
                feed(h0, s - 1, t - 1);
                feed(h1, s - 1, t - 2);
                feed(v, s - 3, t - 7);
                feed(v14, s - 4, t - 12);
                int newgen = d - (int)span.dim();
                int want = 0;
                for (auto [gs, gstem] : glist)
                    if (gs == s && gstem + gs == t) want = 1;
                c.expect(newgen == want,
                         "column " + std::to_string(sigma) + " census at " + at(s, t));
            }
    }

    // h0-towers on every generator
    for (int sigma = 1; sigma <= 6; ++sigma)
        for (auto [s, stem] : gens_of(sigma)) {
            int t = stem + s;
            if (t > T || cx[sigma]->ext_dimension(s, t) != 1) continue;
            ExtClass x = cx[sigma]->ext_class(s, t, 0);
            for (int k = 1; s + k <= 5 && t + k <= T; ++k) {
                x = cx[sigma]->product(ck, h0, x);
                c.expect(!cx[sigma]->is_boundary(x.s, x.t, x.rep),
                         "column " + std::to_string(sigma) + " tower over stem " +
                             std::to_string(stem) + " at height " + std::to_string(k));
            }
        }

    // v-multiplication pattern between generators
    auto vrel = [&](int sigma, int s1, int m1, int npow, int s2, int m2) {
        auto lhs = cx[sigma]->product(ck, v, cx[sigma]->ext_class(s1, s1 + m1, 0));
        ExtClass rhs = cx[sigma]->ext_class(s2, s2 + m2, 0);
        for (int i = 0; i < npow; ++i) rhs = cx[sigma]->product(ck, h0, rhs);
        c.expect(class_eq(*cx[sigma], lhs.s, lhs.t, lhs.rep, rhs.rep),
                 "column " + std::to_string(sigma) + ": v * (stem " + std::to_string(m1) +
                     ") = h0^" + std::to_string(npow) + " (stem " + std::to_string(m2) + ")");
    };
    vrel(1, 0, 4, 2, 1, 8);
    vrel(2, 0, 8, 3, 0, 12);
    vrel(2, 0, 12, 1, 2, 16);
    vrel(2, 1, 14, 1, 3, 18);
    vrel(3, 0, 12, 3, 0, 16);
    vrel(3, 0, 16, 2, 1, 20);
    vrel(3, 0, 18, 1, 2, 22);
    vrel(3, 1, 20, 1, 3, 24);

    // v14-periodicity: dimensions never drop along (s,t) -> (s+4, t+12)
    for (int sigma = 1; sigma <= 6; ++sigma) {
        auto tab = minimal_resolution_ext(A1, Rprime_sigma(sigma), 12, T);
        for (int s = 0; s <= 8; ++s)
            for (int t = s; t <= T - 12; ++t)
                c.expect(tab.dim(s, t) <= tab.dim(s + 4, t + 12),
                         "column " + std::to_string(sigma) + " periodicity at " + at(s, t));
    }
}

// ------------------------------------------------------------- criterion 4

void crit4(Check& c) {
    const HopfAlgebra& A2 = builtin_hopf("A2star");
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    KoszulData K(exterior_E(2));
    DoubleComplex dc(K, trivial_comodule(A2), 44);

    auto as_dc = [&](int sigma, const ExtClass& x) {
        return dc.from_vec(x.s, sigma, x.t, x.rep);
    };
    auto d1_zero = [&](int sigma, const ExtClass& x) {
        auto img = dc.d_h(as_dc(sigma, x));
        return img.is_zero() || dc.cobar(sigma + 1).is_boundary(x.s, x.t, dc.to_vec(img));
    };
    auto eq_cls = [&](int sigma, const DcElement& a, const DcElement& b) {
        return class_eq(dc.cobar(sigma), a.s, a.t, dc.to_vec(a), dc.to_vec(b));
    };
    auto mono = [&](int sigma, std::vector<int> e) {
        return dc.make(0, sigma, {{dc.column_index(sigma, 0, e, 0)}});
    };

    auto h0 = dc.cobar(0).ext_class(1, 1, 0);
    auto h1 = dc.cobar(0).ext_class(1, 2, 0);
    auto v = dc.cobar(0).ext_class(3, 7, 0);
    auto v14 = dc.cobar(0).ext_class(4, 12, 0);
    auto a181 = dc.cobar(1).ext_class(1, 9, 0);
    auto a1142 = dc.cobar(2).ext_class(1, 15, 0);
    auto a3182 = dc.cobar(2).ext_class(3, 21, 0);
    auto h0dc = as_dc(0, h0);
    auto h0cube = dc_product(dc, h0dc, dc, dc_product(dc, h0dc, dc, h0dc));

    // eleven rows over trivial coefficients: six vanishing, five not
    c.expect(d1_zero(0, h0), "d1 row h0");
    c.expect(d1_zero(0, h1), "d1 row h1");
    c.expect(d1_zero(0, v14), "d1 row v14");
    c.expect(d1_zero(2, a1142), "d1 row sigma=2 s=1");
    {
        SpVec y1{*K.mono_index(1, {1, 0, 0})};
        c.expect(dmss_d1(dc, 1, 4, y1).value.empty(), "d1 row y1");
        SpVec a0183{*K.mono_index(3, {0, 3, 0}), *K.mono_index(3, {1, 0, 2})};
        c.expect(dmss_d1(dc, 3, 18, a0183).value.empty(), "d1 row sigma=3 degree-18");
    }
    {
        SpVec v2{*K.mono_index(2, {0, 2, 0})};
        auto r = dmss_d1(dc, 2, 12, v2);
        c.expect(r.value == SpVec{*K.mono_index(3, {3, 0, 0})}, "d1 row y2^2 -> y1^3");
    }
    {
        SpVec v4{*K.mono_index(4, {0, 0, 4})};
        auto r = dmss_d1(dc, 4, 28, v4);
        c.expect(r.value == SpVec{*K.mono_index(5, {1, 4, 0})}, "d1 row y3^4 -> y1 y2^4");
    }
    c.expect(eq_cls(2, dc.d_h(as_dc(1, a181)), dc_product(dc, h0dc, dc, mono(2, {2, 0, 0}))),
             "d1 row sigma=1 s=1 -> h0 y1^2");
    c.expect(eq_cls(1, dc.d_h(as_dc(0, v)), dc_product(dc, h0cube, dc, mono(1, {1, 0, 0}))),
             "d1 row v -> h0^3 y1");
    {
        bool ok = true;
        SpVec a0183_u{*K.mono_index(3, {0, 3, 0}), *K.mono_index(3, {1, 0, 2})};
        auto a0183 = lift_of(dc, 3, 18, a0183_u);
        c.expect(ok && eq_cls(3, dc.d_h(as_dc(2, a3182)), dc_product(dc, h0cube, dc, a0183)),
                 "d1 row sigma=2 s=3 -> h0^3 (sigma=3 class)");
    }

    // eight rows over the eight-cell coefficients
    HopfQuotient q = HopfQuotient::make(A2, A1);
    Comodule M = build_A1_comodule(0, 0);
    DoubleComplex dcm(K, M, 44);
    auto d1_row = [&](int sigma, std::array<int, 3> e, bool& ok) {
        SpVec v0 = section_class(K, q, M, sigma, {e}, ok);
        int t = K.piece(sigma).degrees[*K.mono_index(sigma, {e.begin(), e.end()})];
        return dmss_d1(dcm, sigma, t, v0);
    };
    for (auto [sigma, e] : std::vector<std::pair<int, std::array<int, 3>>>{
             {0, {0, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}, {2, {0, 1, 1}},
             {3, {0, 1, 2}}, {4, {0, 1, 3}}}) {
        bool ok = true;
        c.expect(ok && d1_row(sigma, e, ok).value.empty(),
                 "coefficient d1 row sigma=" + std::to_string(sigma));
    }
    {
        bool ok = true;
        auto r = d1_row(2, {0, 0, 2}, ok);
        SpVec want = section_class(K, q, M, 3, {{2, 1, 0}}, ok);
        std::sort(r.value.begin(), r.value.end());
        std::sort(want.begin(), want.end());
        c.expect(ok && r.value == want, "coefficient d1 row y3^2");
    }
    {
        bool ok = true;
        auto r = d1_row(3, {0, 0, 3}, ok);
        SpVec want = section_class(K, q, M, 4, {{2, 1, 1}}, ok);
        std::sort(r.value.begin(), r.value.end());
        std::sort(want.begin(), want.end());
        c.expect(ok && r.value == want, "coefficient d1 row y3^3");
    }
}

// ------------------------------------------------------------- criterion 5

void crit5(Check& c) {
    struct Gen {
        int sigma, stem, ann;  // ann = least k with (first tower class)^k = 0
        std::vector<std::array<int, 3>> rep;
    };
    std::vector<Gen> gens = {
        {0, 0, 3, {{0, 0, 0}}},
        {1, 5, 2, {{0, 1, 0}}},
        {1, 6, 3, {{0, 0, 1}}},
        {2, 11, 2, {{0, 1, 1}}},
        {3, 15, 2, {{0, 3, 0}, {1, 0, 2}}},
        {3, 17, 3, {{0, 1, 2}}},
        {4, 21, 2, {{1, 0, 3}, {0, 3, 1}}},
        {4, 23, 3, {{0, 1, 3}}},
        {6, 30, 1, {{0, 6, 0}, {2, 0, 4}}},
        {6, 32, 1, {{0, 4, 2}, {1, 1, 4}}},
        {7, 36, 1, {{0, 6, 1}, {2, 0, 5}}},
        {7, 38, 1, {{0, 4, 3}, {1, 1, 5}}},
        {8, 42, 1, {{0, 6, 2}, {2, 0, 6}, {1, 3, 4}}},
        {9, 47, 1, {{0, 7, 2}, {2, 1, 6}}},
        {9, 48, 1, {{0, 6, 3}, {2, 0, 7}, {1, 3, 5}}},
        {10, 53, 1, {{0, 7, 3}, {2, 1, 7}}},
    };
    const int T = 70;
    PolyE2 E(18, T);
    auto mul = [](std::vector<std::array<int, 3>> p, std::array<int, 3> m) {
        for (auto& x : p) {
            x[0] += m[0];
            x[1] += m[1];
            x[2] += m[2];
        }
        return p;
    };
    for (auto& g : gens) {
        std::string tag = "generator at stem " + std::to_string(g.stem);
        c.expect(E.is_cycle(g.rep) && !E.is_boundary(g.rep), tag + " is a nonzero cycle");
        int t = g.sigma + g.stem;
        for (int a = 1; a <= 3 && 4 * a + t <= T; ++a)
            c.expect(E.is_boundary(mul(g.rep, {a, 0, 0})) == (a >= g.ann),
                     tag + " annihilator at power " + std::to_string(a));
    }
    // dimension table of the direct sum of the sixteen cyclic modules
    std::map<std::pair<int, int>, int> expect;
    for (auto& g : gens) {
        int t0 = g.sigma + g.stem;
        for (int a = 0; a < g.ann; ++a)
            for (int b = 0;; ++b) {
                if (a > 0 && b > 0) break;
                int base = t0 + 4 * a + 24 * b;
                if (base > T) break;
                for (int cc = 0; base + 56 * cc <= T; ++cc)
                    ++expect[{g.sigma + a + 4 * b + 8 * cc, base + 56 * cc}];
            }
    }
    for (int sigma = 0; sigma <= 18; ++sigma)
        for (int t = 0; t <= T; ++t) {
            int want = expect.count({sigma, t}) ? expect[{sigma, t}] : 0;
            c.expect(E.dim(sigma, t) == want, "page dim at " + at(sigma, t));
        }
    // independent cobar route over the big algebra
    const HopfAlgebra& A2 = builtin_hopf("A2star");
    CobarComplex cb(A2, build_A1_comodule(0, 0), 21);
    for (int s = 0; s <= 3; ++s)
        for (int t = 0; t <= 21; ++t)
            c.expect(cb.ext_dimension(s, t) == E.dim(s, t), "cobar cross-check at " + at(s, t));
}

// ------------------------------------------------------------- criterion 6

void crit6(Check& c) {
    c.expect(exotic_product_lambda(0, 0) == 0, "lambda(0,0)");
    c.expect(exotic_product_lambda(0, 1) == 1, "lambda(0,1)");
    c.expect(exotic_product_lambda(1, 0) == 1, "lambda(1,0)");
    c.expect(exotic_product_lambda(1, 1) == 0, "lambda(1,1)");

    const HopfAlgebra& A2 = builtin_hopf("A2star");
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    HopfQuotient q = HopfQuotient::make(A2, A1);
    KoszulData K(exterior_E(2));
    DoubleComplex dck(K, trivial_comodule(A2), 44);
    Comodule M = build_A1_comodule(0, 0);
    DoubleComplex dcm(K, M, 44);
    bool ok = true;
    auto beta = lift_of(dck, 3, 18,
                        SpVec{*K.mono_index(3, {0, 3, 0}), *K.mono_index(3, {1, 0, 2})});
    auto e315 = lift_of(dcm, 3, 18, section_class(K, q, M, 3, {{0, 3, 0}, {1, 0, 2}}, ok));
    auto e630 = lift_of(dcm, 6, 36, section_class(K, q, M, 6, {{0, 6, 0}, {2, 0, 4}}, ok));
    auto prod = dc_product(dck, beta, dcm, e315);
    c.expect(ok && class_eq(dcm.cobar(6), 0, 36, dcm.to_vec(prod), dcm.to_vec(e630)),
             "degree-18 class times the stem-15 generator is the stem-30 generator");
}

// ------------------------------------------------------------- criterion 7

void crit7(Check& c) {
    GroupTable G = build_g24();
    c.expect(G.validate().empty(), "group table axioms");
    MinimalResolution res(G, G.q8, G.om, 10);
    std::map<int, GModule> mods;
    for (int tm = 0; tm < 6; tm += 2) mods.emplace(tm, morava_module(G, MoravaKind::plain, tm));
    for (int t = -48; t <= 46; t += 2)
        for (int s = 0; s <= 8; ++s)
            c.expect(res.cohomology_dim(s, mods.at(((t % 6) + 6) % 6)) == henn_ring_dim(s, t),
                     "ring dim at " + at(s, t));

    RingReport rep = verify_ring_relations();
    c.expect(rep.errors.empty(), rep.errors.empty() ? "" : rep.errors.front());
    c.expect(rep.ab_zero, "relation a b = 0 at cocycle level");
    c.expect(rep.b3_unit == Scalar::one(), "relation b^3 = v2 a^3 at cocycle level");
    c.expect(rep.z_periodicity, "periodicity of the degree-(4,0) class");

    // independent routes: Sylow-invariants to s = 6, bar complex to s = 2
    GroupTable Q = subgroup_table(G, G.q8);
    std::vector<int> all_q;
    for (int i = 0; i < Q.n; ++i) all_q.push_back(i);
    MinimalResolution qres(Q, all_q, -1, 8);
    for (int tm = 0; tm < 6; tm += 2)
        for (int kind = 0; kind < 2; ++kind) {
            GModule M = morava_module(G, kind ? MoravaKind::a1 : MoravaKind::plain, tm);
            for (int s = 0; s <= 6; ++s)
                c.expect(sylow_invariant_dim(qres, G, G.q8, M, s) == res.cohomology_dim(s, M),
                         "Sylow route at s=" + std::to_string(s) +
                             ", t=" + std::to_string(tm) + ", kind " + std::to_string(kind));
            auto dims = bar_cohomology_dims(M, 2);
            for (int s = 0; s <= 2; ++s)
                c.expect(dims[(std::size_t)s] == res.cohomology_dim(s, M),
                         "bar route at s=" + std::to_string(s) + ", t=" + std::to_string(tm) +
                             ", kind " + std::to_string(kind));
        }
}

// ------------------------------------------------------------- criterion 8

void crit8(Check& c) {
    HfpssE2 e2(12);
    for (int t = -48; t <= 48; ++t)
        for (int s = 0; s <= 12; ++s)
            c.expect(e2.dim(s, t) == (t % 2 ? 0 : hfpss_e2_expected_dim(s, t)),
                     "fixed-point page dim at " + at(s, t));
    // chart window in stem coordinates
    TowerPage fixture = load_page("sseq/hfpss_e2.txt", nullptr);
    for (int s = 0; s <= 4; ++s)
        for (int x = 0; x <= 48; ++x)
            c.expect(fixture.dim(s, x + s) == e2.dim(s, x + s),
                     "chart window at (s=" + std::to_string(s) +
                         ", stem=" + std::to_string(x) + ")");
    RingReport rep = verify_ring_relations();
    c.expect(rep.delta_unit == Scalar::one(),
             "connecting map sends the top generator to a unit times a");
    c.expect(e2.dim(0, 2) == 0, "the two-line extension does not split");
}

// ------------------------------------------------------------- criterion 9

void crit9(Check& c) {
    for (const char* v : {"01", "11"}) {
        EinftyRun run = run_hfpss_to_einfty(v);
        bool late = lambda_version(v) == 1;
        c.expect(run.einfty.gens.size() == (late ? 46u : 48u),
                 std::string("version ") + v + " final module count");
        c.expect(run.diffs.empty(),
                 run.diffs.empty() ? "" : std::string("version ") + v + ": " + run.diffs[0]);
        c.expect(run.checks.empty(),
                 run.checks.empty() ? "" : std::string("version ") + v + ": " + run.checks[0]);
        c.expect(run.vanishing_line_ok, std::string("version ") + v + " vanishing line");
    }
}

// ------------------------------------------------------------ criterion 10

void crit10(Check& c) {
    TowerPage ass = ass_e2_page();
    struct Win {
        const char* file;
        int x0, x1, s0, s1;
    } wins[] = {{"charts/ass_stems_0_48.txt", 0, 48, 0, 11},
                {"charts/ass_stems_48_101.txt", 48, 101, 8, 20},
                {"charts/ass_stems_148_152.txt", 148, 152, 25, 30}};
    for (const Win& w : wins) {
        auto chart = load_chart(w.file);
        ChartDoc doc = chart_of_page(ass, w.x0, w.x1, w.s0, w.s1);
        auto diffs = diff_dots(dot_multiset(doc), chart);
        c.expect(diffs.empty(), diffs.empty() ? "" : std::string(w.file) + " " + diffs[0]);
    }
    for (const char* file : {"axioms/ass_d_0110.txt", "axioms/ass_d_0011.txt"}) {
        bool late = std::string(file).find("0110") != std::string::npos;
        TowerEngine eng(ass_e2_page());
        AxiomFile ax = load_axioms(file);
        eng.define_all(ax.defs);
        eng.apply_all(ax);
        c.expect(eng.check_window(32, 0, 160).empty(),
                 std::string(file) + ": differential consistency");
        // the four washed-out positions of the displayed window, per version
        c.expect(eng.dim(25, 149 + 25) == 0 && eng.dim(28, 148 + 28) == 0 &&
                     eng.dim(26, 149 + 26) == 0 && eng.dim(29, 148 + 29) == 0,
                 std::string(file) + ": both window differentials fire");
        c.expect(eng.dim(30, 150 + 30) == (late ? 0 : 1) &&
                     eng.dim(28, 151 + 28) == (late ? 0 : 1),
                 std::string(file) + ": version-dependent survivors");
    }
    // the late-page figure, one column short of its window edge
    TowerPage e7 = load_page("sseq/hfpss_e7.txt", nullptr);
    auto chart = load_chart("charts/hfpss_e7_stems_0_54.txt");
    chart.erase(chart.lower_bound({54, 0}), chart.end());
    auto diffs = diff_dots(dot_multiset(chart_of_page(e7, 0, 53, 0, 3)), chart);
    c.expect(diffs.empty(), diffs.empty() ? "" : "late-page figure: " + diffs[0]);
}

// ------------------------------------------------------------ criterion 11

void crit11(Check& c) {
    for (const char* v : {"01", "11"}) {
        EinftyRun run = run_hfpss_to_einfty(v);
        auto mod_k = quotient_orders(run.einfty, false, 0, 191);
        std::map<int, int> want{{6, 2}, {15, 1}, {17, 1}, {21, 1}, {23, 2}};
        for (auto& [stem, d] : want)
            c.expect(mod_k[stem] == d, std::string("version ") + v + " table at stem " +
                                           std::to_string(stem));
        auto mod_kn = quotient_orders(run.einfty, true, 0, 191);
        for (auto& [stem, d] : mod_kn) {
            int cap = (stem == 48 || stem == 53) ? 2 : 1;
            c.expect(d <= cap && (cap == 1 || d == 2),
                     std::string("version ") + v + " top-order pattern at stem " +
                         std::to_string(stem));
        }
    }
}

// ------------------------------------------------------------ criterion 12

void crit12(Check& c) {
    // algebra and comodule axioms on every shipped fixture
    for (const char* name : {"A0star", "A1star", "A2star", "B2star", "E1star"})
        c.expect(builtin_hopf(name).validate().empty(), std::string(name) + " axioms");
    for (const char* name : {"H(V0)", "H(Ceta)", "H(Y)", "V3", "V4", "a1_00", "a1_01",
                             "a1_10", "a1_11"})
        c.expect(build_named_comodule(name).validate().empty(),
                 std::string(name) + " comodule axioms");
    for (int sigma = 0; sigma <= 4; ++sigma) {
        c.expect(R_sigma(sigma).validate().empty(),
                 "R piece " + std::to_string(sigma) + " axioms");
        c.expect(S_sigma(sigma).validate().empty(),
                 "S piece " + std::to_string(sigma) + " axioms");
    }

    // Koszul exactness through internal degree 42
    KoszulData KR(exterior_E(2)), KS(exterior_F(2));
    c.expect(KR.check_exactness(42).empty(), "three-variable Koszul complex exactness");
    c.expect(KS.check_exactness(42).empty(), "two-variable Koszul complex exactness");

    // d^2 = 0 on cobar windows
    const HopfAlgebra& A1 = builtin_hopf("A1star");
    const HopfAlgebra& A2 = builtin_hopf("A2star");
    CobarComplex ck(A1, trivial_comodule(A1), 12);
    CobarComplex cm(A2, build_named_comodule("a1_10"), 14);
    for (int s = 0; s <= 3; ++s)
        for (int t = 0; t <= 12; ++t) {
            c.expect(ck.differential(s + 1, t).mul(ck.differential(s, t)).is_zero(),
                     "trivial-coefficient d^2 at " + at(s, t));
            if (t <= 12)
                c.expect(cm.differential(s + 1, t).mul(cm.differential(s, t)).is_zero(),
                         "eight-cell d^2 at " + at(s, t));
        }

    // change of rings on the three quotient pairs
    struct Pair {
        const char* src;
        const char* dst;
    } pairs[] = {{"A1star", "A0star"}, {"A2star", "A1star"}, {"A1star", "E1star"}};
    for (const auto& p : pairs) {
        const HopfAlgebra& A = builtin_hopf(p.src);
        const HopfAlgebra& B = builtin_hopf(p.dst);
        HopfQuotient q = HopfQuotient::make(A, B);
        c.expect(q.validate().empty(), std::string(p.src) + " -> " + p.dst + " quotient");
        CobarComplex big(A, cotensor_unit(q), 14);
        CobarComplex small(B, trivial_comodule(B), 14);
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 14; ++t)
                c.expect(big.ext_dimension(s, t) == small.ext_dimension(s, t),
                         std::string(p.src) + "/" + p.dst + " change of rings at " + at(s, t));
    }

    // cobar vs minimal-resolution oracle
    {
        Comodule m = build_A1_comodule(1, 0);
        MinresTable mt = minimal_resolution_ext(A2, m, 4, 16);
        CobarComplex cb(A2, m, 16);
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 16; ++t)
                c.expect(mt.dim(s, t) == cb.ext_dimension(s, t),
                         "oracle agreement at " + at(s, t));
    }

    // spectral-sequence consistency and axiom-order confluence
    for (const char* v : {"01", "11"}) {
        EinftyRun run = run_hfpss_to_einfty(v);
        c.expect(run.checks.empty(), std::string("version ") + v + " window consistency");
    }
    {
        std::map<std::string, TowerExpr> defs;
        TowerPage base = load_page("sseq/hfpss_e2.txt", &defs);
        AxiomFile shared = load_axioms("axioms/hfpss_d3_d5.txt");
        AxiomFile high = load_axioms("axioms/hfpss_d9_d23_0110.txt");
        TowerEngine straight(base), shuffled(base);
        for (TowerEngine* e : {&straight, &shuffled}) {
            e->define_all(shared.defs);
            e->define_all(high.defs);
        }
        straight.apply_all(shared);
        straight.apply_all(high);
        for (AxiomFile* f : {&shared, &high}) {
            std::size_t i = 0;
            while (i < f->diffs.size()) {
                std::size_t j = i;
                while (j < f->diffs.size() && f->diffs[j].r == f->diffs[i].r) ++j;
                std::reverse(f->diffs.begin() + (long)i, f->diffs.begin() + (long)j);
                i = j;
            }
        }
        shuffled.apply_all(shared);
        shuffled.apply_all(high);
        bool same = true;
        for (int s = 0; s <= 30 && same; ++s)
            for (int x = -20; x <= 200; ++x)
                if (straight.dim(s, x + s) != shuffled.dim(s, x + s)) {
                    same = false;
                    break;
                }
        c.expect(same, "axiom-order confluence of the page dimensions");
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
    struct Entry {
        int id;
        const char* name;
        void (*fn)(Check&);
        const char* summary;
    };
    const Entry entries[] = {
        {1, "height-one Ext ring table", crit1, "resolution and cobar match the presentation"},
        {2, "small-module Ext tables and products", crit2,
         "four modules: dims by two routes, listed relations hold"},
        {3, "column generators, towers and periodicity", crit3,
         "census, towers, v-pattern and periodicity verified"},
        {4, "first-differential ledgers", crit4, "all nineteen rows reproduced"},
        {5, "sixteen-generator second page", crit5,
         "representatives, annihilators, dims, cobar cross-check"},
        {6, "exotic linked products", crit6, "lambda table and the stem-30 product"},
        {7, "group cohomology ring", crit7,
         "dims, cocycle relations, two independent routes"},
        {8, "fixed-point second page", crit8, "rank-two module table and connecting map"},
        {9, "fixed-point final page", crit9,
         "46 and 48 cyclic modules, zero diffs, vanishing line"},
        {10, "Adams page fixtures", crit10,
         "three digitized windows and version differentials"},
        {11, "quotient order table", crit11, "stem table and the two double stems"},
        {12, "property suites", crit12,
         "axioms, exactness, d^2, change of rings, oracle, confluence"},
    };
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end())
            continue;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.fn(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.pass = c.pass();
        r.detail = c.detail(e.summary);
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sseq
