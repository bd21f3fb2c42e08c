#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sseq/comodule.hpp"
#include "sseq/textio.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace sseq;

namespace {

std::vector<int> dims_by_degree(const Comodule& m, int lo, int hi) {
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) out.push_back(static_cast<int>(m.basis_in_degree(d).size()));
    return out;
}

}  // namespace

TEST_CASE("shipped comodule fixtures pass validation") {
    for (const char* name : {"a1_00", "a1_01", "a1_10", "a1_11", "H(V0)", "H(Ceta)", "H(Y)",
                             "V3", "V4"}) {
        Comodule m = build_named_comodule(name);
        auto report = m.validate();
        for (const auto& line : report) MESSAGE(name, ": ", line);
        CHECK(report.empty());
    }
    CHECK_THROWS(build_named_comodule("nope"));
}

TEST_CASE("the four A1 versions differ exactly in the alpha/beta/gamma/lambda terms") {
    const HopfAlgebra& a2 = builtin_hopf("A2star");
    auto coeff = [&](const Comodule& m, const char* src, const std::string& aexpr,
                     const char* dst) {
        SpVec a = a2.parse(aexpr);
        REQUIRE(a.size() == 1);
        uint32_t D = m.dim();
        uint32_t p = a[0] * D + static_cast<uint32_t>(m.find_label(dst));
        const SpVec& c = m.coaction[m.find_label(src)];
        return std::binary_search(c.begin(), c.end(), p) ? 1 : 0;
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Comodule m = build_A1_comodule(i, j);
            // coefficients in the z-monomial basis: the xi-terms expand, e.g.
            // xi2*xi1 = z2*z1 + z1^4, so the z1^4|a0 coefficient of the
            // degree-4 coaction is alpha+1
            CHECK(coeff(m, "a4", "z1^4", "a0") == (i + 1) % 2);
            CHECK(coeff(m, "a4", "z2*z1", "a0") == 1);
            // z1^4|a2 picks up beta+1; z1^6|a0 picks up gamma+lambda+1 = beta;
            // z2^2|a0 is lambda alone
            CHECK(coeff(m, "a6", "z1^4", "a2") == (j + 1) % 2);
            CHECK(coeff(m, "a6", "z1^6", "a0") == j);
            CHECK(coeff(m, "a6", "z2^2", "a0") == (i + j) % 2);
            CHECK(coeff(m, "a1", "z1", "a0") == 1);
        }
}

TEST_CASE("R_sigma, Rprime_sigma, S_sigma: dimensions and validity") {
    for (int sigma = 0; sigma <= 8; ++sigma) {
        Comodule r = R_sigma(sigma);
        CHECK(r.dim() == static_cast<uint32_t>((sigma + 1) * (sigma + 2) / 2));
        CHECK(r.validate().empty());
        CHECK(R_sigma_over(builtin_hopf("A1star"), sigma).validate().empty());
        Comodule rp = Rprime_sigma(sigma);
        CHECK(rp.validate().empty());
        CHECK(S_sigma(sigma).validate().empty());
        // Rprime keeps exactly the monomials with y3-exponent at most 3
        uint32_t expect = 0;
        for (int i = 0; i <= sigma; ++i)
            for (int j = 0; i + j <= sigma; ++j)
                if (sigma - i - j <= 3) ++expect;
        CHECK(rp.dim() == expect);
    }
    Comodule r1 = Rprime_sigma(1);
    CHECK(r1.dim() == 3);
    CHECK(dims_by_degree(r1, 4, 7) == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("R_sigma decomposes as the direct sum of suspended Rprime pieces") {
    // R_sigma = (+)_{j} Rprime_{sigma-4j} (x) F2{y3^{4j}} as graded comodules
    // (the y3-exponent splits uniquely as c + 4j with c <= 3); compare
    // dimensions in every degree
    const HopfAlgebra& a1 = builtin_hopf("A1star");
    for (int sigma = 0; sigma <= 8; ++sigma) {
        Comodule r = R_sigma_over(a1, sigma);
        std::map<int, int> expect;
        for (int j = 0; 4 * j <= sigma; ++j) {
            Comodule rp = Rprime_sigma(sigma - 4 * j);
            for (uint32_t b = 0; b < rp.dim(); ++b) ++expect[rp.degrees[b] + 28 * j];
        }
        std::map<int, int> got;
        for (uint32_t b = 0; b < r.dim(); ++b) ++got[r.degrees[b]];
        CHECK(got == expect);
    }
}

TEST_CASE("multiplication by y1 embeds suspended Rprime_sigma into Rprime_{sigma+1}") {
    for (int sigma = 0; sigma <= 7; ++sigma) {
        Comodule src = suspend(Rprime_sigma(sigma), 4);
        Comodule dst = Rprime_sigma(sigma + 1);
        ComoduleMap f;
        f.image.resize(src.dim());
        for (uint32_t b = 0; b < src.dim(); ++b) {
            std::string lab = Rprime_sigma(sigma).labels[b];
            std::string target;
            if (lab == "1") target = "y1";
            else if (lab.rfind("y1^", 0) == 0) {
                int e = std::stoi(lab.substr(3, lab.find('*') - 3));
                target = "y1^" + std::to_string(e + 1) + lab.substr(lab.find('*') == std::string::npos ? lab.size() : lab.find('*'));
            } else if (lab.rfind("y1*", 0) == 0) target = "y1^2*" + lab.substr(3);
            else if (lab == "y1") target = "y1^2";
            else target = "y1*" + lab;
            int t = dst.find_label(target);
            REQUIRE_MESSAGE(t >= 0, "missing ", target);
            f.image[b] = {static_cast<uint32_t>(t)};
        }
        auto report = validate_map(src, dst, f);
        for (const auto& line : report) MESSAGE("sigma=", sigma, ": ", line);
        CHECK(report.empty());
        // injectivity is clear: distinct monomials map to distinct monomials
    }
}

TEST_CASE("short exact sequences y1*Rprime -> Rprime -> quotient for sigma <= 8") {
    for (int sigma = 1; sigma <= 8; ++sigma) {
        Comodule mid = Rprime_sigma(sigma);
        std::vector<uint32_t> divisible;
        for (uint32_t b = 0; b < mid.dim(); ++b) {
            const std::string& l = mid.labels[b];
            if (l == "y1" || l.rfind("y1*", 0) == 0 || l.rfind("y1^", 0) == 0)
                divisible.push_back(b);
        }
        SES s = sub_quotient_ses(mid, divisible, "y1-part", "quotient");
        auto report = s.validate();
        for (const auto& line : report) MESSAGE("sigma=", sigma, ": ", line);
        CHECK(report.empty());
        // the sub is the suspension of Rprime_{sigma-1} by |y1| = 4
        Comodule prev = Rprime_sigma(sigma - 1);
        std::map<int, int> expect;
        for (uint32_t b = 0; b < prev.dim(); ++b) ++expect[prev.degrees[b] + 4];
        std::map<int, int> got;
        for (uint32_t b = 0; b < s.sub.dim(); ++b) ++got[s.sub.degrees[b]];
        CHECK(got == expect);
    }
}

TEST_CASE("quotient of Rprime_1 is the suspended two-cell V(0) pattern") {
    // 0 -> S^4 k -> Rprime_1 -> S^6 H(V0) -> 0
    Comodule mid = Rprime_sigma(1);
    SES s = sub_quotient_ses(mid, {static_cast<uint32_t>(mid.find_label("y1"))}, "sub", "quot");
    CHECK(s.validate().empty());
    Comodule v0 = suspend(build_named_comodule("H(V0)"), 6);
    REQUIRE(s.quot.dim() == v0.dim());
    CHECK(s.quot.degrees == v0.degrees);
    // same coaction under the degree-matching relabeling
    for (uint32_t b = 0; b < v0.dim(); ++b) CHECK(s.quot.coaction[b] == v0.coaction[b]);
}

TEST_CASE("quotient of Rprime_2 by y1 is the suspended V3 pattern") {
    Comodule mid = Rprime_sigma(2);
    std::vector<uint32_t> divisible;
    for (uint32_t b = 0; b < mid.dim(); ++b)
        if (mid.labels[b].rfind("y1", 0) == 0) divisible.push_back(b);
    SES s = sub_quotient_ses(mid, divisible, "sub", "quot");
    CHECK(s.validate().empty());
    Comodule v3 = suspend(build_named_comodule("V3"), 12);
    REQUIRE(s.quot.dim() == v3.dim());
    CHECK(s.quot.degrees == v3.degrees);
    for (uint32_t b = 0; b < v3.dim(); ++b) CHECK(s.quot.coaction[b] == v3.coaction[b]);
}

TEST_CASE("cotensor_unit: exterior subalgebras of primitives") {
    // A1star over A0star: E(z1^2, z2), degrees 0,2,3,5
    {
        HopfQuotient q = HopfQuotient::make(builtin_hopf("A1star"), builtin_hopf("A0star"));
        Comodule c = cotensor_unit(q);
        CHECK(c.validate().empty());
        std::multiset<int> degs(c.degrees.begin(), c.degrees.end());
        CHECK(degs == std::multiset<int>{0, 2, 3, 5});
    }
    // B2star over A1star: E(z2^2, z3), dim 4
    {
        HopfQuotient q = HopfQuotient::make(builtin_hopf("B2star"), builtin_hopf("A1star"));
        Comodule c = cotensor_unit(q);
        CHECK(c.validate().empty());
        CHECK(c.dim() == 4);
        std::multiset<int> degs(c.degrees.begin(), c.degrees.end());
        CHECK(degs == std::multiset<int>{0, 6, 7, 13});
    }
    // A1star over E1star: dims 1,1,1,1 in degrees 0..3, matching H(Y)
    {
        HopfQuotient q = HopfQuotient::make(builtin_hopf("A1star"), builtin_hopf("E1star"));
        Comodule c = cotensor_unit(q);
        CHECK(c.validate().empty());
        CHECK(dims_by_degree(c, 0, 3) == std::vector<int>{1, 1, 1, 1});
        CHECK(c.dim() == 4);
        Comodule hy = build_named_comodule("H(Y)");
        for (uint32_t b = 0; b < 4; ++b) CHECK(c.coaction[b] == hy.coaction[b]);
    }
}

TEST_CASE("H(Y) is the tensor product of H(V0) and H(Ceta)") {
    Comodule t = tensor(build_named_comodule("H(V0)"), build_named_comodule("H(Ceta)"));
    CHECK(t.validate().empty());
    Comodule hy = build_named_comodule("H(Y)");
    REQUIRE(t.dim() == hy.dim());
    // reorder tensor basis by degree to compare
    std::vector<uint32_t> perm = {0, 1, 2, 3};  // m0c0, m1c0 | m0c2, m1c2 -> degrees 0,1,2,3
    std::sort(perm.begin(), perm.end(),
              [&](uint32_t a, uint32_t b) { return t.degrees[a] < t.degrees[b]; });
    for (uint32_t b = 0; b < 4; ++b) {
        SpVec mapped;
        for (uint32_t p : t.coaction[perm[b]]) {
            uint32_t a = p / t.dim(), m = p % t.dim();
            uint32_t pos = static_cast<uint32_t>(
                std::find(perm.begin(), perm.end(), m) - perm.begin());
            mapped.push_back(a * 4 + pos);
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == hy.coaction[b]);
    }
}

TEST_CASE("H_*(A1) corestricted to A1star is A1star as a comodule over itself") {
    HopfQuotient q = HopfQuotient::make(builtin_hopf("A2star"), builtin_hopf("A1star"));
    Comodule self = hopf_as_comodule(builtin_hopf("A1star"));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Comodule m = corestrict(build_A1_comodule(i, j), q);
            CHECK(m.validate().empty());
            REQUIRE(m.dim() == self.dim());
            // basis order matches degree-sorted monomial order: a0..a6 vs
            // 1, z1, z1^2, z2, z1^3, z1*z2, z1^2*z2, z1^3*z2
            // (both degree-ordered with a3 preceding a3b matching z2, z1^3?)
            // compare degreewise dimensions and primitive counts instead
            for (int d = 0; d <= 6; ++d)
                CHECK(m.basis_in_degree(d).size() == self.basis_in_degree(d).size());
            for (int d = 0; d <= 6; ++d)
                CHECK(primitive_basis(m, d).size() == primitive_basis(self, d).size());
        }
}

TEST_CASE("shearing map is invertible and lands in primitives on cotensors") {
    // Sh on A1star (x) k reduces to chi; inverse composes to identity
    const HopfAlgebra& a1 = builtin_hopf("A1star");
    Comodule self = hopf_as_comodule(a1);
    uint32_t D = self.dim();
    for (uint32_t a = 0; a < a1.dim(); ++a)
        for (uint32_t m = 0; m < D; ++m) {
            SpVec v = {a * D + m};
            CHECK(shear(self, shear(self, v, false), true) == v);
            CHECK(shear(self, shear(self, v, true), false) == v);
        }
}

TEST_CASE("primitives of shipped comodules") {
    // H(Y): unique primitive in degree 0 only
    Comodule hy = build_named_comodule("H(Y)");
    CHECK(primitive_basis(hy, 0).size() == 1);
    for (int d = 1; d <= 3; ++d) CHECK(primitive_basis(hy, d).empty());
    // trivial comodule
    Comodule k = trivial_comodule(builtin_hopf("A1star"));
    CHECK(primitive_basis(k, 0).size() == 1);
    CHECK(k.validate().empty());
}

TEST_CASE("cotensor_primitives recovers the suspension pattern of H(Y)") {
    // A1star cotensor_{E1star} k computed through the generic comodule path
    HopfQuotient q = HopfQuotient::make(builtin_hopf("A1star"), builtin_hopf("E1star"));
    std::vector<std::string> report;
    Comodule c = cotensor_primitives(q, hopf_as_comodule(builtin_hopf("A1star")), &report);
    CHECK(report.empty());
    CHECK(c.validate().empty());
    CHECK(c.dim() == 4);
}
