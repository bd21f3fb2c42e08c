#include "sseq/hopf.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sseq {

SpVec sp_add(const SpVec& a, const SpVec& b) {
    SpVec out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

HopfAlgebra::HopfAlgebra(std::string name, std::vector<int> bounds)
    : name_(std::move(name)), bounds_(std::move(bounds)) {
    build();
}

HopfAlgebra HopfAlgebra::dual_steenrod_quotient(int n, char kind) {
    std::vector<int> bounds;
    std::string name;
    if (kind == 'A') {
        // A(n): z1^{2^{n+1}}, z2^{2^n}, ..., z_{n+1}^2
        for (int i = 0; i <= n; ++i) bounds.push_back(1 << (n + 1 - i));
        name = "A" + std::to_string(n) + "star";
    } else if (kind == 'B') {
        // B(n): z1^{2^n}, z2^{2^n}, z3^{2^{n-1}}, ..., z_{n+1}^2
        bounds.push_back(1 << n);
        for (int i = 1; i <= n; ++i) bounds.push_back(1 << (n + 1 - i));
        name = "B" + std::to_string(n) + "star";
    } else {
        throw std::invalid_argument("kind must be 'A' or 'B'");
    }
    return HopfAlgebra(std::move(name), std::move(bounds));
}

void HopfAlgebra::build() {
    int k = static_cast<int>(bounds_.size());
    gen_deg_.resize(k);
    for (int i = 0; i < k; ++i) gen_deg_[i] = (1 << (i + 1)) - 1;  // |z_{i+1}| = 2^{i+1}-1

    // enumerate monomials, then sort graded-lex (z1 < z2 < ...)
    std::vector<std::vector<uint8_t>> mons;
    std::vector<uint8_t> cur(k, 0);
    // odometer over exponent boxes
    for (;;) {
        mons.push_back(cur);
        int p = 0;
        while (p < k) {
            if (bounds_[p] > 0 && cur[p] + 1 < bounds_[p]) { ++cur[p]; break; }
            cur[p] = 0;
            ++p;
        }
        if (p == k) break;
    }
    auto deg_of = [&](const std::vector<uint8_t>& e) {
        int d = 0;
        for (int i = 0; i < k; ++i) d += e[i] * gen_deg_[i];
        return d;
    };
    std::sort(mons.begin(), mons.end(),
              [&](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
                  int da = deg_of(a), db = deg_of(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    basis_exp_ = std::move(mons);
    basis_deg_.resize(basis_exp_.size());
    for (uint32_t i = 0; i < basis_exp_.size(); ++i) {
        basis_deg_[i] = deg_of(basis_exp_[i]);
        index_[basis_exp_[i]] = i;
    }

    // coproduct of each generator: Delta(z_m) = sum_{i+j=m} z_i (x) z_j^{2^i},
    // with z_0 = 1; terms killed by the truncation are dropped.
    uint32_t n = dim();
    std::vector<SpVec> gen_cop(k);
    for (int m = 1; m <= k; ++m) {
        SpVec cop;
        for (int i = 0; i <= m; ++i) {
            int j = m - i;
            // left factor z_i, right factor z_j^{2^i}
            std::vector<uint8_t> le(k, 0), re(k, 0);
            if (i > 0) {
                if (i > k || bounds_[i - 1] < 2) continue;
                le[i - 1] = 1;
            }
            if (j > 0) {
                int e = 1 << i;
                if (j > k) continue;
                if (e >= bounds_[j - 1]) continue;
                re[j - 1] = static_cast<uint8_t>(e);
            }
            auto li = index_.find(le), ri = index_.find(re);
            if (li == index_.end() || ri == index_.end()) continue;
            cop.push_back(li->second * n + ri->second);
        }
        std::sort(cop.begin(), cop.end());
        gen_cop[m - 1] = std::move(cop);
    }

    // extend multiplicatively: Delta(x*y) = Delta(x)*Delta(y) componentwise
    auto tensor_mul = [&](const SpVec& a, const SpVec& b) {
        SpVec out;
        for (uint32_t pa : a)
            for (uint32_t pb : b) {
                auto l = mono_mul(pa / n, pb / n);
                auto r = mono_mul(pa % n, pb % n);
                if (l && r) out.push_back(*l * n + *r);
            }
        std::sort(out.begin(), out.end());
        // char 2: cancel duplicate pairs
        SpVec clean;
        for (std::size_t i = 0; i < out.size();) {
            std::size_t j = i;
            while (j < out.size() && out[j] == out[i]) ++j;
            if ((j - i) % 2) clean.push_back(out[i]);
            i = j;
        }
        return clean;
    };

    coproduct_.resize(dim());
    for (uint32_t b = 0; b < dim(); ++b) {
        SpVec acc = {0 * n + 0};  // 1 (x) 1
        for (int g = 0; g < k; ++g)
            for (int e = 0; e < basis_exp_[b][g]; ++e) acc = tensor_mul(acc, gen_cop[g]);
        coproduct_[b] = std::move(acc);
    }

    // antipode, by induction on degree: for x with Delta(x) = x(x)1 + 1(x)x +
    // sum x'(x)x'' (proper terms), chi(x) = x + sum chi(x') * x''.
    antipode_.resize(dim());
    // process in degree order; basis is already degree-sorted
    for (uint32_t b = 0; b < dim(); ++b) {
        if (b == 0) { antipode_[0] = {0}; continue; }
        SpVec acc = {b};
        for (uint32_t p : coproduct_[b]) {
            uint32_t l = p / n, r = p % n;
            if (l == b || r == b) continue;  // primitive part
            // l has lower degree than b, so antipode_[l] is ready
            assert(basis_deg_[l] < basis_deg_[b]);
            for (uint32_t li : antipode_[l]) {
                auto m = mono_mul(li, r);
                if (m) acc = sp_add(acc, {*m});
            }
        }
        antipode_[b] = std::move(acc);
    }

    xi_.resize(k);
    for (int g = 0; g < k; ++g) {
        auto gi = generator_index(g);
        xi_[g] = gi ? antipode_[*gi] : SpVec{};
    }
}

int HopfAlgebra::top_degree() const {
    return basis_deg_.empty() ? 0 : basis_deg_.back();
}

std::optional<uint32_t> HopfAlgebra::generator_index(int g) const {
    std::vector<uint8_t> e(bounds_.size(), 0);
    if (bounds_[g] < 2) return std::nullopt;
    e[g] = 1;
    auto it = index_.find(e);
    return it == index_.end() ? std::nullopt : std::optional<uint32_t>(it->second);
}

std::optional<uint32_t> HopfAlgebra::mono_mul(uint32_t a, uint32_t b) const {
    std::vector<uint8_t> e(bounds_.size());
    for (std::size_t g = 0; g < bounds_.size(); ++g) {
        int s = basis_exp_[a][g] + basis_exp_[b][g];
        if (s > 0 && s >= bounds_[g]) return std::nullopt;
        e[g] = static_cast<uint8_t>(s);
    }
    return index_.at(e);
}

SpVec HopfAlgebra::mul(const SpVec& a, const SpVec& b) const {
    SpVec out;
    for (uint32_t x : a)
        for (uint32_t y : b) {
            auto m = mono_mul(x, y);
            if (m) out = sp_add(out, {*m});
        }
    return out;
}

SpVec HopfAlgebra::pow(const SpVec& a, int e) const {
    SpVec out = {0};
    for (int i = 0; i < e; ++i) out = mul(out, a);
    return out;
}

SpVec HopfAlgebra::antipode_vec(const SpVec& v) const {
    SpVec out;
    for (uint32_t i : v) out = sp_add(out, antipode_[i]);
    return out;
}

std::string HopfAlgebra::label(uint32_t i) const {
    const auto& e = basis_exp_[i];
    std::ostringstream os;
    bool any = false;
    for (std::size_t g = 0; g < e.size(); ++g) {
        if (!e[g]) continue;
        if (any) os << "*";
        os << "z" << (g + 1);
        if (e[g] > 1) os << "^" << int(e[g]);
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

std::string HopfAlgebra::str(const SpVec& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << " + ";
        os << label(v[i]);
    }
    return os.str();
}

SpVec HopfAlgebra::parse(const std::string& expr) const {
    SpVec acc = {0};
    std::string tok;
    std::istringstream in(expr);
    while (std::getline(in, tok, '*')) {
        // trim
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        tok = tok.substr(b, e - b + 1);
        if (tok == "1") continue;
        int power = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            power = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        SpVec factor;
        if (tok.size() >= 2 && tok[0] == 'z') {
            int g = std::stoi(tok.substr(1)) - 1;
            if (g < 0 || g >= num_generators())
                throw std::invalid_argument("unknown generator: " + tok);
            auto gi = generator_index(g);
            factor = gi ? SpVec{*gi} : SpVec{};
        } else if (tok.size() >= 3 && tok.compare(0, 2, "xi") == 0) {
            int g = std::stoi(tok.substr(2)) - 1;
            if (g < 0 || g >= num_generators())
                throw std::invalid_argument("unknown generator: " + tok);
            factor = xi_[g];
        } else {
            throw std::invalid_argument("bad token in expression: " + tok);
        }
        acc = mul(acc, pow(factor, power));
    }
    return acc;
}

std::vector<std::string> HopfAlgebra::validate() const {
    std::vector<std::string> report;
    uint32_t n = dim();
    // connectedness: unique basis element in degree 0
    {
        int count = 0;
        for (uint32_t i = 0; i < n; ++i)
            if (basis_deg_[i] == 0) ++count;
        if (count != 1) report.push_back("not connected: dim in degree 0 is " + std::to_string(count));
    }
    for (uint32_t b = 0; b < n; ++b) {
        // degree preservation and counit axiom
        bool left_unit = false, right_unit = false;
        for (uint32_t p : coproduct_[b]) {
            uint32_t l = p / n, r = p % n;
            if (basis_deg_[l] + basis_deg_[r] != basis_deg_[b])
                report.push_back("coproduct not degree-preserving at " + label(b));
            if (l == 0 && r == b) left_unit = true;
            if (r == 0 && l == b) right_unit = true;
        }
        if (!left_unit || !right_unit)
            report.push_back("counit axiom fails at " + label(b));
        // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
        SpVec lhs, rhs;  // packed l*n*n + m*n + r
        for (uint32_t p : coproduct_[b]) {
            uint32_t x = p / n, y = p % n;
            for (uint32_t q : coproduct_[x]) lhs = sp_add(lhs, {(q / n) * n * n + (q % n) * n + y});
            for (uint32_t q : coproduct_[y]) rhs = sp_add(rhs, {x * n * n + (q / n) * n + (q % n)});
        }
        if (lhs != rhs) report.push_back("coassociativity fails at " + label(b));
        // antipode axiom: mu (chi (x) id) Delta = eta eps
        SpVec conv;
        for (uint32_t p : coproduct_[b]) {
            for (uint32_t ci : antipode_[p / n]) {
                auto m = mono_mul(ci, p % n);
                if (m) conv = sp_add(conv, {*m});
            }
        }
        SpVec expected = (b == 0) ? SpVec{0} : SpVec{};
        if (conv != expected) report.push_back("antipode axiom fails at " + label(b));
    }
    // bialgebra compatibility on a basis of products: Delta(xy) = Delta(x)Delta(y)
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            auto ab = mono_mul(a, b);
            if (!ab) continue;
            SpVec direct = coproduct_[*ab];
            SpVec prod;
            for (uint32_t p : coproduct_[a])
                for (uint32_t q : coproduct_[b]) {
                    auto l = mono_mul(p / n, q / n);
                    auto r = mono_mul(p % n, q % n);
                    if (l && r) prod = sp_add(prod, {*l * n + *r});
                }
            if (direct != prod) {
                report.push_back("bialgebra compatibility fails at " + label(a) + " * " + label(b));
                break;
            }
        }
    return report;
}

HopfQuotient HopfQuotient::make(const HopfAlgebra& src, const HopfAlgebra& dst) {
    HopfQuotient q;
    q.src = &src;
    q.dst = &dst;
    q.image.resize(src.dim());
    int kd = dst.num_generators();
    for (uint32_t i = 0; i < src.dim(); ++i) {
        const auto& e = src.exponents(i);
        std::vector<uint8_t> f(kd, 0);
        bool alive = true;
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (!e[g]) continue;
            if (static_cast<int>(g) >= kd || e[g] >= dst.generator_bound(static_cast<int>(g))) {
                alive = false;
                break;
            }
            f[g] = e[g];
        }
        if (!alive) { q.image[i] = std::nullopt; continue; }
        // locate f in dst's basis via the generator product
        SpVec v = {0};
        for (int g = 0; g < kd; ++g)
            if (f[g]) {
                auto gi = dst.generator_index(g);
                v = dst.mul(v, dst.pow(SpVec{*gi}, f[g]));
            }
        assert(v.size() == 1);
        q.image[i] = v[0];
    }
    return q;
}

SpVec HopfQuotient::apply(const SpVec& v) const {
    SpVec out;
    for (uint32_t i : v)
        if (image[i]) out = sp_add(out, {*image[i]});
    return out;
}

std::vector<std::string> HopfQuotient::validate() const {
    std::vector<std::string> report;
    uint32_t ns = src->dim(), nd = dst->dim();
    for (uint32_t b = 0; b < ns; ++b) {
        // (q (x) q) Delta_src = Delta_dst q
        SpVec lhs;
        for (uint32_t p : src->coproduct(b)) {
            auto l = image[p / ns], r = image[p % ns];
            if (l && r) lhs = sp_add(lhs, {*l * nd + *r});
        }
        SpVec rhs;
        if (image[b]) rhs = dst->coproduct(*image[b]);
        if (lhs != rhs) report.push_back("quotient not a coalgebra map at " + src->label(b));
    }
    for (uint32_t a = 0; a < ns; ++a)
        for (uint32_t b = 0; b < ns; ++b) {
            auto ab = src->mono_mul(a, b);
            SpVec lhs;
            if (ab && image[*ab]) lhs = {*image[*ab]};
            SpVec rhs;
            if (image[a] && image[b]) rhs = dst->mul({*image[a]}, {*image[b]});
            if (lhs != rhs) {
                report.push_back("quotient not an algebra map at " + src->label(a) + " * " +
                                 src->label(b));
                a = ns;
                break;
            }
        }
    return report;
}

}  // namespace sseq
