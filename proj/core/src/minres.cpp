#include "sseq/minres.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

namespace sseq {

namespace {

// parity-accumulating insertion into a sparse vector kept as a sorted set
void toggle(SpVec& v, uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        v.erase(it);
    else
        v.insert(it, x);
}

}  // namespace

MinresTable minimal_resolution_ext(const HopfAlgebra& A, const Comodule& M, int s_max,
                                   int t_max) {
    const uint32_t n = A.dim(), D = M.dim();

    // dual algebra multiplication: b_i b_j = sum_k <coeff of a_i (x) a_j in Delta(a_k)> b_k
    std::map<std::pair<uint32_t, uint32_t>, SpVec> mult;
    for (uint32_t k = 0; k < n; ++k)
        for (uint32_t p : A.coproduct(k)) mult[{p / n, p % n}].push_back(k);

    // dual module action: b_i . f_m = sum_x <coeff of a_i (x) m in psi(x)> f_x
    std::map<std::pair<uint32_t, uint32_t>, SpVec> act;
    for (uint32_t x = 0; x < D; ++x)
        for (uint32_t p : M.coaction[x]) act[{p / D, p % D}].push_back(x);

    auto b_mul_module = [&](uint32_t i, const SpVec& v) {
        SpVec out;
        for (uint32_t m : v) {
            auto it = act.find({i, m});
            if (it == act.end()) continue;
            for (uint32_t x : it->second) toggle(out, x);
        }
        return out;
    };

    struct Stage {
        std::vector<int> gdeg;
        std::vector<SpVec> dgen;  // image in the previous stage's representation
        std::map<int, std::vector<SpVec>> kernel;  // per degree, packed gen*n + i
    };
    std::vector<Stage> stages(static_cast<std::size_t>(s_max) + 1);

    // element of free module over stage "prev": packed gen*n + i
    auto b_mul_free = [&](uint32_t i, const SpVec& v) {
        SpVec out;
        for (uint32_t p : v) {
            uint32_t k = p / n, j = p % n;
            auto it = mult.find({i, j});
            if (it == mult.end()) continue;
            for (uint32_t l : it->second) toggle(out, k * n + l);
        }
        return out;
    };

    auto free_basis_in_degree = [&](const Stage& st, int t) {
        std::vector<uint32_t> out;  // packed gen*n + i
        for (uint32_t k = 0; k < st.gdeg.size(); ++k)
            for (uint32_t i = 0; i < n; ++i)
                if (st.gdeg[k] + A.degree(i) == t) out.push_back(k * n + i);
        return out;
    };

    MinresTable table;
    table.s_max = s_max;
    table.t_max = t_max;
    table.gens.resize(static_cast<std::size_t>(s_max) + 1);

    const int t_min = M.min_degree();

    // stage 0: minimal generators of the dual module M^
    for (int t = t_min; t <= t_max; ++t) {
        auto cols = M.basis_in_degree(t);
        if (cols.empty()) continue;
        std::map<uint32_t, std::size_t> pos;
        for (std::size_t c = 0; c < cols.size(); ++c) pos[cols[c]] = c;
        IncrementalSpan span(Field::GF2, cols.size());
        // the degree-t part of B_+ . M^
        for (uint32_t i = 1; i < n; ++i) {
            int d = A.degree(i);
            if (d <= 0 || t - d < t_min) continue;
            for (uint32_t m : M.basis_in_degree(t - d)) {
                SpVec img = b_mul_module(i, {m});
                Vec v(Field::GF2, cols.size());
                for (uint32_t x : img) v.set(pos.at(x), Scalar::one());
                span.add(v);
            }
        }
        for (uint32_t m : cols) {
            Vec v(Field::GF2, cols.size());
            v.set(pos.at(m), Scalar::one());
            if (span.add(v)) {
                stages[0].gdeg.push_back(t);
                stages[0].dgen.push_back({m});
                ++table.gens[0][t];
            }
        }
    }

    // stages s >= 1: minimal generators of ker(d_{s-1})
    for (int s = 1; s <= s_max; ++s) {
        Stage& prev = stages[s - 1];
        Stage& cur = stages[s];
        for (int t = t_min; t <= t_max; ++t) {
            auto cols = free_basis_in_degree(prev, t);
            if (cols.empty()) continue;
            std::map<uint32_t, std::size_t> cpos;
            for (std::size_t c = 0; c < cols.size(); ++c) cpos[cols[c]] = c;

            // matrix of d_{s-1} in degree t
            std::vector<uint32_t> rows;
            std::map<uint32_t, std::size_t> rpos;
            if (s == 1) {
                for (uint32_t m : M.basis_in_degree(t)) {
                    rpos[m] = rows.size();
                    rows.push_back(m);
                }
            } else {
                for (uint32_t p : free_basis_in_degree(stages[s - 2], t)) {
                    rpos[p] = rows.size();
                    rows.push_back(p);
                }
            }
            Matrix mat(Field::GF2, rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                uint32_t k = cols[c] / n, j = cols[c] % n;
                SpVec img = (s == 1) ? b_mul_module(j, prev.dgen[k])
                                     : b_mul_free(j, prev.dgen[k]);
                for (uint32_t r : img) mat.set(rpos.at(r), c, Scalar::one());
            }
            std::vector<Vec> ker = kernel_basis(mat);
            if (ker.empty()) continue;
            prev.kernel[t].clear();
            for (const Vec& kv : ker) {
                SpVec packed;
                for (std::size_t c : kv.support()) packed.push_back(cols[c]);
                prev.kernel[t].push_back(std::move(packed));
            }

            // span of B_+ . (kernel elements of lower degree)
            IncrementalSpan span(Field::GF2, cols.size());
            for (uint32_t i = 1; i < n; ++i) {
                int d = A.degree(i);
                if (d <= 0) continue;
                auto it = prev.kernel.find(t - d);
                if (it == prev.kernel.end()) continue;
                for (const SpVec& kv : it->second) {
                    SpVec img = b_mul_free(i, kv);
                    Vec v(Field::GF2, cols.size());
                    for (uint32_t p : img) v.set(cpos.at(p), Scalar::one());
                    span.add(v);
                }
            }
            for (const SpVec& kv : prev.kernel[t]) {
                Vec v(Field::GF2, cols.size());
                for (uint32_t p : kv) v.set(cpos.at(p), Scalar::one());
                if (span.add(v)) {
                    cur.gdeg.push_back(t);
                    cur.dgen.push_back(kv);
                    ++table.gens[s][t];
                }
            }
        }
    }
    return table;
}

}  // namespace sseq
