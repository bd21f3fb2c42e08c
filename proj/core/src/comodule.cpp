#include "sseq/comodule.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sseq {

namespace {

using SpVec64 = std::vector<uint64_t>;

SpVec64 sp_add64(const SpVec64& a, const SpVec64& b) {
    SpVec64 out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<uint32_t> Comodule::basis_in_degree(int d) const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < dim(); ++i)
        if (degrees[i] == d) out.push_back(i);
    return out;
}

int Comodule::min_degree() const {
    return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
}

int Comodule::max_degree() const {
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

int Comodule::find_label(const std::string& l) const {
    for (uint32_t i = 0; i < dim(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
    return -1;
}

SpVec Comodule::coact(const SpVec& v) const {
    SpVec out;
    for (uint32_t i : v) out = sp_add(out, coaction[i]);
    return out;
}

std::string Comodule::str(const SpVec& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << " + ";
        os << labels[v[i]];
    }
    return os.str();
}

std::vector<std::string> Comodule::validate() const {
    std::vector<std::string> report;
    uint32_t n = A->dim(), D = dim();
    for (uint32_t m = 0; m < D; ++m) {
        bool unit_term = false;
        for (uint32_t p : coaction[m]) {
            uint32_t a = p / D, mm = p % D;
            if (A->degree(a) + degrees[mm] != degrees[m])
                report.push_back("coaction not degree-preserving at " + labels[m] + " (term " +
                                 A->label(a) + "|" + labels[mm] + ")");
            if (a == A->unit()) {
                if (mm != m)
                    report.push_back("counit law fails at " + labels[m] + " (unit term hits " +
                                     labels[mm] + ")");
                else
                    unit_term = true;
            }
        }
        if (!unit_term) report.push_back("counit law fails at " + labels[m] + " (no unit term)");
        // (Delta x id) psi = (id x psi) psi, packed a1*(n*D) + a2*D + m
        SpVec64 lhs, rhs;
        for (uint32_t p : coaction[m]) {
            uint64_t a = p / D, mm = p % D;
            for (uint32_t q : A->coproduct(static_cast<uint32_t>(a)))
                lhs = sp_add64(lhs, {uint64_t(q / n) * n * D + uint64_t(q % n) * D + mm});
            for (uint32_t q : coaction[mm])
                rhs = sp_add64(rhs, {a * n * D + uint64_t(q / D) * D + (q % D)});
        }
        if (lhs != rhs) report.push_back("coaction coassociativity fails at " + labels[m]);
    }
    return report;
}

SpVec ComoduleMap::apply(const SpVec& v) const {
    SpVec out;
    for (uint32_t i : v) out = sp_add(out, image[i]);
    return out;
}

std::vector<std::string> validate_map(const Comodule& src, const Comodule& dst,
                                      const ComoduleMap& f) {
    std::vector<std::string> report;
    if (src.A != dst.A) {
        report.push_back("source and target live over different algebras");
        return report;
    }
    if (f.image.size() != src.dim()) {
        report.push_back("map image size mismatch");
        return report;
    }
    uint32_t Ds = src.dim(), Dd = dst.dim(), n = src.A->dim();
    (void)n;
    for (uint32_t m = 0; m < Ds; ++m) {
        for (uint32_t t : f.image[m])
            if (dst.degrees[t] != src.degrees[m])
                report.push_back("map not degree-preserving at " + src.labels[m]);
        // (id x f) psi_src(m) = psi_dst(f(m))
        SpVec lhs;
        for (uint32_t p : src.coaction[m]) {
            uint32_t a = p / Ds, mm = p % Ds;
            for (uint32_t t : f.image[mm]) lhs = sp_add(lhs, {a * Dd + t});
        }
        SpVec rhs = dst.coact(f.image[m]);
        if (lhs != rhs) report.push_back("map does not commute with coaction at " + src.labels[m]);
    }
    return report;
}

namespace {

Matrix map_matrix_in_degree(const Comodule& src, const Comodule& dst, const ComoduleMap& f,
                            int d, const std::vector<uint32_t>& sb,
                            const std::vector<uint32_t>& db) {
    Matrix m(Field::GF2, db.size(), sb.size());
    for (std::size_t c = 0; c < sb.size(); ++c)
        for (uint32_t t : f.image[sb[c]]) {
            auto it = std::find(db.begin(), db.end(), t);
            assert(it != db.end());
            m.set(static_cast<std::size_t>(it - db.begin()), c, Scalar::one());
        }
    (void)d;
    return m;
}

}  // namespace

std::vector<std::string> SES::validate() const {
    std::vector<std::string> report = validate_map(sub, mid, incl);
    auto r2 = validate_map(mid, quot, proj);
    report.insert(report.end(), r2.begin(), r2.end());
    if (!report.empty()) return report;
    int lo = mid.min_degree(), hi = mid.max_degree();
    for (int d = lo; d <= hi; ++d) {
        auto sb = sub.basis_in_degree(d), mb = mid.basis_in_degree(d), qb = quot.basis_in_degree(d);
        if (sb.size() + qb.size() != mb.size())
            report.push_back("dimension mismatch in degree " + std::to_string(d));
        Matrix mi = map_matrix_in_degree(sub, mid, incl, d, sb, mb);
        Matrix mp = map_matrix_in_degree(mid, quot, proj, d, mb, qb);
        if (rank(mi) != sb.size())
            report.push_back("inclusion not injective in degree " + std::to_string(d));
        if (rank(mp) != qb.size())
            report.push_back("projection not surjective in degree " + std::to_string(d));
        if (!mp.mul(mi).is_zero())
            report.push_back("composite not zero in degree " + std::to_string(d));
        if (rank(mi) + rank(mp) != mb.size())
            report.push_back("not exact in the middle in degree " + std::to_string(d));
    }
    return report;
}

SES sub_quotient_ses(const Comodule& mid, const std::vector<uint32_t>& sub_basis,
                     const std::string& sub_name, const std::string& quot_name) {
    SES s;
    s.mid = mid;
    uint32_t D = mid.dim();
    std::vector<int> sub_pos(D, -1), quot_pos(D, -1);
    std::vector<uint32_t> comp;
    {
        std::vector<bool> in_sub(D, false);
        for (uint32_t i : sub_basis) in_sub[i] = true;
        int sp = 0;
        for (uint32_t i = 0; i < D; ++i)
            if (in_sub[i]) sub_pos[i] = sp++;
        for (uint32_t i = 0; i < D; ++i)
            if (!in_sub[i]) { quot_pos[i] = static_cast<int>(comp.size()); comp.push_back(i); }
    }
    std::vector<uint32_t> sorted_sub = sub_basis;
    std::sort(sorted_sub.begin(), sorted_sub.end());

    s.sub.name = sub_name;
    s.sub.A = mid.A;
    uint32_t Dsub = static_cast<uint32_t>(sorted_sub.size());
    for (uint32_t i : sorted_sub) {
        s.sub.labels.push_back(mid.labels[i]);
        s.sub.degrees.push_back(mid.degrees[i]);
        SpVec c;
        for (uint32_t p : mid.coaction[i]) {
            uint32_t a = p / D, m = p % D;
            if (sub_pos[m] >= 0) c.push_back(a * Dsub + static_cast<uint32_t>(sub_pos[m]));
        }
        std::sort(c.begin(), c.end());
        s.sub.coaction.push_back(std::move(c));
    }

    s.quot.name = quot_name;
    s.quot.A = mid.A;
    uint32_t Dq = static_cast<uint32_t>(comp.size());
    for (uint32_t i : comp) {
        s.quot.labels.push_back(mid.labels[i]);
        s.quot.degrees.push_back(mid.degrees[i]);
        SpVec c;
        for (uint32_t p : mid.coaction[i]) {
            uint32_t a = p / D, m = p % D;
            if (quot_pos[m] >= 0) c.push_back(a * Dq + static_cast<uint32_t>(quot_pos[m]));
        }
        std::sort(c.begin(), c.end());
        s.quot.coaction.push_back(std::move(c));
    }

    s.incl.image.resize(Dsub);
    for (uint32_t k = 0; k < Dsub; ++k) s.incl.image[k] = {sorted_sub[k]};
    s.proj.image.resize(D);
    for (uint32_t i = 0; i < D; ++i)
        if (quot_pos[i] >= 0) s.proj.image[i] = {static_cast<uint32_t>(quot_pos[i])};
    return s;
}

Comodule trivial_comodule(const HopfAlgebra& A) {
    Comodule m;
    m.name = "k";
    m.A = &A;
    m.labels = {"1"};
    m.degrees = {0};
    m.coaction = {{A.unit() * 1 + 0}};
    return m;
}

Comodule hopf_as_comodule(const HopfAlgebra& A) {
    Comodule m;
    m.name = A.name();
    m.A = &A;
    for (uint32_t i = 0; i < A.dim(); ++i) {
        m.labels.push_back(A.label(i));
        m.degrees.push_back(A.degree(i));
        m.coaction.push_back(A.coproduct(i));  // same packing: a*dim+b
    }
    return m;
}

Comodule suspend(const Comodule& M, int n) {
    Comodule m = M;
    if (n != 0) m.name = "S^" + std::to_string(n) + " " + M.name;
    for (auto& d : m.degrees) d += n;
    return m;
}

Comodule tensor(const Comodule& M, const Comodule& N) {
    assert(M.A == N.A);
    const HopfAlgebra& A = *M.A;
    Comodule t;
    t.name = M.name + "(x)" + N.name;
    t.A = &A;
    uint32_t Dm = M.dim(), Dn = N.dim(), D = Dm * Dn;
    for (uint32_t i = 0; i < Dm; ++i)
        for (uint32_t j = 0; j < Dn; ++j) {
            std::string l = M.labels[i] == "1" ? N.labels[j]
                           : N.labels[j] == "1" ? M.labels[i]
                                                : M.labels[i] + "*" + N.labels[j];
            t.labels.push_back(l);
            t.degrees.push_back(M.degrees[i] + N.degrees[j]);
            SpVec c;
            for (uint32_t p : M.coaction[i])
                for (uint32_t q : N.coaction[j]) {
                    auto a = A.mono_mul(p / Dm, q / Dn);
                    if (a) c.push_back(*a * D + (p % Dm) * Dn + (q % Dn));
                }
            std::sort(c.begin(), c.end());
            SpVec clean;
            for (std::size_t k = 0; k < c.size();) {
                std::size_t e = k;
                while (e < c.size() && c[e] == c[k]) ++e;
                if ((e - k) % 2) clean.push_back(c[k]);
                k = e;
            }
            t.coaction.push_back(std::move(clean));
        }
    return t;
}

Comodule direct_sum(const Comodule& M, const Comodule& N) {
    assert(M.A == N.A);
    Comodule s;
    s.name = M.name + "(+)" + N.name;
    s.A = M.A;
    uint32_t Dm = M.dim(), Dn = N.dim(), D = Dm + Dn;
    s.labels = M.labels;
    s.labels.insert(s.labels.end(), N.labels.begin(), N.labels.end());
    s.degrees = M.degrees;
    s.degrees.insert(s.degrees.end(), N.degrees.begin(), N.degrees.end());
    for (uint32_t i = 0; i < Dm; ++i) {
        SpVec c;
        for (uint32_t p : M.coaction[i]) c.push_back((p / Dm) * D + (p % Dm));
        std::sort(c.begin(), c.end());
        s.coaction.push_back(std::move(c));
    }
    for (uint32_t j = 0; j < Dn; ++j) {
        SpVec c;
        for (uint32_t p : N.coaction[j]) c.push_back((p / Dn) * D + Dm + (p % Dn));
        std::sort(c.begin(), c.end());
        s.coaction.push_back(std::move(c));
    }
    return s;
}

Comodule corestrict(const Comodule& M, const HopfQuotient& q) {
    assert(M.A == q.src);
    Comodule m;
    m.name = M.name + "|" + q.dst->name();
    m.A = q.dst;
    m.labels = M.labels;
    m.degrees = M.degrees;
    uint32_t D = M.dim();
    for (uint32_t i = 0; i < D; ++i) {
        SpVec c;
        for (uint32_t p : M.coaction[i]) {
            auto a = q.image[p / D];
            if (a) c.push_back(*a * D + (p % D));
        }
        std::sort(c.begin(), c.end());
        m.coaction.push_back(std::move(c));
    }
    return m;
}

std::vector<Vec> primitive_basis(const Comodule& M, int degree) {
    const HopfAlgebra& A = *M.A;
    uint32_t D = M.dim(), n = A.dim();
    auto cols = M.basis_in_degree(degree);
    // rows: all pairs (a, m) with a != unit; the unit row of psi(m) - 1(x)m
    // vanishes by the counit law, checked separately in validate()
    Matrix mat(Field::GF2, n * D, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (uint32_t p : M.coaction[cols[c]]) {
            if (p / D == A.unit()) continue;
            mat.set(p, c, Scalar::one());
        }
    return kernel_basis(mat);
}

namespace {

// express each column of "vectors" in terms of the span of "basis"; returns
// coordinates or nullopt
std::optional<std::vector<SpVec>> in_span(const std::vector<Vec>& basis,
                                          const std::vector<Vec>& vectors, std::size_t ambient) {
    Matrix m(Field::GF2, ambient, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r : basis[c].support()) m.set(r, c, Scalar::one());
    std::vector<SpVec> out;
    for (const Vec& v : vectors) {
        Vec b(Field::GF2, ambient);
        for (std::size_t r : v.support()) b.set(r, Scalar::one());
        auto x = solve_particular(m, b);
        if (!x) return std::nullopt;
        SpVec coords;
        for (std::size_t i : x->support()) coords.push_back(static_cast<uint32_t>(i));
        out.push_back(std::move(coords));
    }
    return out;
}

}  // namespace

Comodule cotensor_unit(const HopfQuotient& q) {
    const HopfAlgebra& A = *q.src;
    uint32_t n = A.dim(), nd = q.dst->dim();
    // right-primitives: (id x q)Delta(a) = a (x) 1
    std::vector<Vec> prim;  // vectors in A's basis
    for (int d = 0; d <= A.top_degree(); ++d) {
        std::vector<uint32_t> cols;
        for (uint32_t i = 0; i < n; ++i)
            if (A.degree(i) == d) cols.push_back(i);
        if (cols.empty()) continue;
        Matrix mat(Field::GF2, n * nd, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (uint32_t p : A.coproduct(cols[c])) {
                auto b = q.image[p % n];
                if (!b) continue;
                if (p / n == cols[c] && *b == q.dst->unit()) continue;  // the a(x)1 term
                uint32_t row = (p / n) * nd + *b;
                mat.set(row, c, mat.get(row, c) + Scalar::one());
            }
        }
        for (const Vec& k : kernel_basis(mat)) {
            Vec full(Field::GF2, n);
            for (std::size_t c : k.support()) full.set(cols[c], Scalar::one());
            prim.push_back(full);
        }
    }

    Comodule out;
    out.name = A.name() + "cot" + q.dst->name();
    out.A = &A;
    for (const Vec& v : prim) {
        SpVec sv;
        for (std::size_t i : v.support()) sv.push_back(static_cast<uint32_t>(i));
        out.labels.push_back(A.str(sv));
        out.degrees.push_back(A.degree(static_cast<uint32_t>(v.support().front())));
    }
    uint32_t D = static_cast<uint32_t>(prim.size());
    for (const Vec& v : prim) {
        // Delta(v), grouped by the left tensor factor
        std::map<uint32_t, Vec> by_left;
        for (std::size_t i : v.support())
            for (uint32_t p : A.coproduct(static_cast<uint32_t>(i))) {
                auto [it, fresh] = by_left.try_emplace(p / n, Field::GF2, n);
                it->second.set(p % n, it->second.get(p % n) + Scalar::one());
            }
        SpVec c;
        for (auto& [a, rv] : by_left) {
            if (rv.is_zero()) continue;
            auto coords = in_span(prim, {rv}, n);
            if (!coords) throw std::runtime_error("cotensor_unit: coaction does not close");
            for (uint32_t j : (*coords)[0]) c.push_back(a * D + j);
        }
        std::sort(c.begin(), c.end());
        out.coaction.push_back(std::move(c));
    }
    return out;
}

Comodule cotensor_primitives(const HopfQuotient& q, const Comodule& M,
                             std::vector<std::string>* report) {
    const HopfAlgebra& A = *q.src;
    Comodule Mb = corestrict(M, q);
    uint32_t D = M.dim();
    std::vector<Vec> prim;  // vectors in M's basis
    std::vector<int> prim_deg;
    for (int d = M.min_degree(); d <= M.max_degree(); ++d) {
        auto cols = Mb.basis_in_degree(d);
        for (const Vec& k : primitive_basis(Mb, d)) {
            Vec full(Field::GF2, D);
            for (std::size_t c : k.support()) full.set(cols[c], Scalar::one());
            prim.push_back(full);
            prim_deg.push_back(d);
        }
    }
    Comodule out;
    out.name = M.name + "cot" + q.dst->name();
    out.A = &A;
    uint32_t P = static_cast<uint32_t>(prim.size());
    for (uint32_t k = 0; k < P; ++k) {
        out.labels.push_back(M.str([&] {
            SpVec sv;
            for (std::size_t i : prim[k].support()) sv.push_back(static_cast<uint32_t>(i));
            return sv;
        }()));
        out.degrees.push_back(prim_deg[k]);
    }
    uint32_t n = A.dim();
    for (uint32_t k = 0; k < P; ++k) {
        std::map<uint32_t, Vec> by_left;
        for (std::size_t i : prim[k].support())
            for (uint32_t p : M.coaction[static_cast<uint32_t>(i)]) {
                auto [it, fresh] = by_left.try_emplace(p / D, Field::GF2, D);
                it->second.set(p % D, it->second.get(p % D) + Scalar::one());
            }
        SpVec c;
        bool closed = true;
        for (auto& [a, rv] : by_left) {
            if (rv.is_zero()) continue;
            auto coords = in_span(prim, {rv}, D);
            if (!coords) { closed = false; break; }
            for (uint32_t j : (*coords)[0]) c.push_back(a * P + j);
        }
        (void)n;
        if (!closed) {
            if (report)
                report->push_back("residual coaction does not close at " + out.labels[k]);
            c.clear();
            c.push_back(A.unit() * P + k);
        }
        std::sort(c.begin(), c.end());
        out.coaction.push_back(std::move(c));
    }
    return out;
}

SpVec shear(const Comodule& M, const SpVec& v, bool inverse) {
    const HopfAlgebra& A = *M.A;
    uint32_t D = M.dim();
    SpVec out;
    for (uint32_t p : v) {
        uint32_t a = p / D, m = p % D;
        for (uint32_t t : M.coaction[m]) {
            uint32_t b = t / D, m0 = t % D;
            const SpVec factor = inverse ? SpVec{b} : A.antipode(b);
            for (uint32_t bi : factor) {
                auto prod = A.mono_mul(a, bi);
                if (prod) out = sp_add(out, {*prod * D + m0});
            }
        }
    }
    return out;
}

Comodule polynomial_comodule(const HopfAlgebra& A, const std::vector<std::string>& names,
                             const std::vector<int>& degs,
                             const std::vector<SpVec>& gen_coact, int sigma,
                             int last_bound, const std::string& name) {
    uint32_t ng = static_cast<uint32_t>(names.size());
    using Exp = std::vector<uint8_t>;
    // monomials of polynomial degree sigma
    std::vector<Exp> mons;
    Exp cur(ng, 0);
    std::function<void(uint32_t, int)> rec = [&](uint32_t g, int rem) {
        if (g + 1 == ng) {
            if (last_bound >= 0 && rem > last_bound) return;
            cur[g] = static_cast<uint8_t>(rem);
            mons.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[g] = static_cast<uint8_t>(e);
            rec(g + 1, rem - e);
        }
        cur[g] = 0;
    };
    rec(0, sigma);
    auto deg_of = [&](const Exp& e) {
        int d = 0;
        for (uint32_t g = 0; g < ng; ++g) d += e[g] * degs[g];
        return d;
    };
    std::sort(mons.begin(), mons.end(), [&](const Exp& a, const Exp& b) {
        int da = deg_of(a), db = deg_of(b);
        if (da != db) return da < db;
        return a < b;
    });
    std::map<Exp, uint32_t> index;
    for (uint32_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    uint32_t D = static_cast<uint32_t>(mons.size());

    Comodule out;
    out.name = name.empty() ? "P_" + std::to_string(sigma) : name;
    out.A = &A;
    for (const Exp& e : mons) {
        std::ostringstream os;
        bool any = false;
        for (uint32_t g = 0; g < ng; ++g) {
            if (!e[g]) continue;
            if (any) os << "*";
            os << names[g];
            if (e[g] > 1) os << "^" << int(e[g]);
            any = true;
        }
        if (!any) os << "1";
        out.labels.push_back(os.str());
        out.degrees.push_back(deg_of(e));
    }

    // psi(m) = prod_g psi(y_g)^{e_g}, working over pairs (A-monomial, exponent vector)
    for (const Exp& e : mons) {
        std::map<std::pair<uint32_t, Exp>, int> acc;
        acc[{A.unit(), Exp(ng, 0)}] = 1;
        for (uint32_t g = 0; g < ng; ++g)
            for (int rep = 0; rep < e[g]; ++rep) {
                std::map<std::pair<uint32_t, Exp>, int> next;
                for (const auto& [key, par] : acc) {
                    if (!par) continue;
                    for (uint32_t p : gen_coact[g]) {
                        auto a = A.mono_mul(key.first, p / ng);
                        if (!a) continue;
                        Exp f = key.second;
                        f[p % ng] += 1;
                        if (last_bound >= 0 && f[ng - 1] > last_bound) continue;
                        next[{*a, f}] ^= 1;
                    }
                }
                acc = std::move(next);
            }
        SpVec c;
        for (const auto& [key, par] : acc) {
            if (!par) continue;
            c.push_back(key.first * D + index.at(key.second));
        }
        std::sort(c.begin(), c.end());
        out.coaction.push_back(std::move(c));
    }
    return out;
}

const HopfAlgebra& builtin_hopf(const std::string& name) {
    static const std::map<std::string, HopfAlgebra> algebras = [] {
        std::map<std::string, HopfAlgebra> m;
        m.emplace("A0star", HopfAlgebra::dual_steenrod_quotient(0, 'A'));
        m.emplace("A1star", HopfAlgebra::dual_steenrod_quotient(1, 'A'));
        m.emplace("A2star", HopfAlgebra::dual_steenrod_quotient(2, 'A'));
        m.emplace("B2star", HopfAlgebra::dual_steenrod_quotient(2, 'B'));
        m.emplace("E1star", HopfAlgebra("E1star", {0, 2}));
        return m;
    }();
    auto it = algebras.find(name);
    if (it == algebras.end()) throw std::invalid_argument("unknown algebra: " + name);
    return it->second;
}

namespace {

std::vector<SpVec> r_gen_coactions(const HopfAlgebra& A) {
    // Delta(y1) = 1|y1
    // Delta(y2) = z1^2|y1 + 1|y2
    // Delta(y3) = z2|y1 + z1|y2 + 1|y3
    const uint32_t ng = 3;
    auto term = [&](const char* expr, uint32_t g) {
        SpVec out;
        for (uint32_t a : A.parse(expr)) out.push_back(a * ng + g);
        return out;
    };
    std::vector<SpVec> gc(3);
    gc[0] = term("1", 0);
    gc[1] = sp_add(term("z1^2", 0), term("1", 1));
    gc[2] = sp_add(sp_add(term("z2", 0), term("z1", 1)), term("1", 2));
    for (auto& v : gc) std::sort(v.begin(), v.end());
    return gc;
}

}  // namespace

Comodule R_sigma_over(const HopfAlgebra& A, int sigma) {
    return polynomial_comodule(A, {"y1", "y2", "y3"}, {4, 6, 7}, r_gen_coactions(A), sigma, -1,
                               "R_" + std::to_string(sigma));
}

Comodule R_sigma(int sigma) { return R_sigma_over(builtin_hopf("A2star"), sigma); }

Comodule Rprime_sigma(int sigma) {
    const HopfAlgebra& A = builtin_hopf("A1star");
    return polynomial_comodule(A, {"y1", "y2", "y3"}, {4, 6, 7}, r_gen_coactions(A), sigma, 3,
                               "Rprime_" + std::to_string(sigma));
}

Comodule S_sigma(int sigma) {
    const HopfAlgebra& B = builtin_hopf("B2star");
    // image of the R coaction under y1 -> 0
    const uint32_t ng = 2;
    auto term = [&](const char* expr, uint32_t g) {
        SpVec out;
        for (uint32_t a : B.parse(expr)) out.push_back(a * ng + g);
        return out;
    };
    std::vector<SpVec> gc(2);
    gc[0] = term("1", 0);
    gc[1] = sp_add(term("z1", 0), term("1", 1));
    for (auto& v : gc) std::sort(v.begin(), v.end());
    return polynomial_comodule(B, {"y2", "y3"}, {6, 7}, gc, sigma, -1,
                               "S_" + std::to_string(sigma));
}

}  // namespace sseq
