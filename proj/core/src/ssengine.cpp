#include "sseq/ssengine.hpp"

#include "sseq/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sseq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string word_str(const TowerPage& page, const TowerWord& w) {
    std::ostringstream os;
    if (w.ue) os << "u^" << w.ue << " ";
    if (w.ke) os << "k^" << w.ke << " ";
    if (w.ne) os << "n^" << w.ne << " ";
    os << (w.gen >= 0 && w.gen < static_cast<int>(page.gens.size())
               ? page.gens[static_cast<size_t>(w.gen)].name
               : std::string("?"));
    return os.str();
}

}  // namespace

int TowerPage::find(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    return -1;
}

bool TowerPage::alive(const TowerWord& w) const {
    if (w.gen < 0 || w.gen >= static_cast<int>(gens.size())) return false;
    if (w.ke < 0 || w.ne < 0) return false;
    if (!ring.u_invertible && w.ue < 0) return false;
    if (w.ne >= ring.n_cap) return false;
    if (ring.kn_zero && w.ke > 0 && w.ne > 0) return false;
    const TowerGen& g = gens[static_cast<size_t>(w.gen)];
    if (g.k_bound >= 0 && w.ke >= g.k_bound) return false;
    if (g.n_bound >= 0 && w.ne >= g.n_bound) return false;
    return true;
}

int TowerPage::s_of(const TowerWord& w) const {
    const TowerGen& g = gens[static_cast<size_t>(w.gen)];
    return g.s + ring.us * w.ue + ring.ks * w.ke + ring.ns * w.ne;
}

int TowerPage::t_of(const TowerWord& w) const {
    const TowerGen& g = gens[static_cast<size_t>(w.gen)];
    return g.t + ring.ut * w.ue + ring.kt * w.ke + ring.nt * w.ne;
}

std::vector<TowerWord> TowerPage::basis(int s, int t) const {
    std::vector<TowerWord> out;
    if (ring.ks <= 0) fail("basis enumeration needs k with positive s-degree");
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
        const TowerGen& g = gens[static_cast<size_t>(gi)];
        for (int ne = 0; ne < ring.n_cap; ++ne) {
            for (int ke = 0; ring.ks * ke <= s - g.s - ring.ns * ne; ++ke) {
                int rs = s - g.s - ring.ks * ke - ring.ns * ne;
                int rt = t - g.t - ring.kt * ke - ring.nt * ne;
                int ue;
                if (ring.us == 0) {
                    if (rs != 0 || ring.ut == 0 || rt % ring.ut != 0) continue;
                    ue = rt / ring.ut;
                } else {
                    if (rs % ring.us != 0) continue;
                    ue = rs / ring.us;
                    if (rt != ue * ring.ut) continue;
                }
                TowerWord w{gi, ue, ke, ne};
                if (alive(w)) out.push_back(w);
            }
        }
    }
    return out;
}

int TowerPage::dim(int s, int t) const { return static_cast<int>(basis(s, t).size()); }

// ---------------------------------------------------------------- parsing

namespace {

std::string strip_note(const std::string& line, std::string* note) {
    size_t h = line.find('#');
    if (h == std::string::npos) return trim(line);
    if (note) *note = trim(line.substr(h + 1));
    return trim(line.substr(0, h));
}

// one token: U/D/W, K/G, N/H with optional ^e, or a generator name
bool parse_token(const std::string& tok, TowerExpr& e) {
    auto powed = [&](char c, const std::string& t, int& slot) {
        if (t.empty() || (t[0] != c)) return false;
        if (t.size() == 1) {
            slot += 1;
            return true;
        }
        if (t[1] != '^') return false;
        slot += std::stoi(t.substr(2));
        return true;
    };
    for (char c : {'U', 'D', 'W'})
        if (powed(c, tok, e.ue)) return true;
    for (char c : {'K', 'G'})
        if (powed(c, tok, e.ke)) return true;
    for (char c : {'N', 'H'})
        if (powed(c, tok, e.ne)) return true;
    if (!e.gen.empty()) fail("two generator names in expression near '" + tok + "'");
    e.gen = tok;
    return true;
}

TowerExpr parse_expr(const std::vector<std::string>& toks, size_t from, size_t to) {
    TowerExpr e;
    for (size_t i = from; i < to; ++i)
        if (!toks[i].empty()) parse_token(toks[i], e);
    return e;
}

std::vector<std::string> words_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

AxiomFile parse_axioms(std::istream& in) {
    AxiomFile out;
    std::string line;
    while (std::getline(in, line)) {
        std::string note;
        std::string body = strip_note(line, &note);
        if (body.empty()) continue;
        auto toks = words_of(body);
        size_t at = 0;
        bool cert = false;
        if (toks[at] == "certify") {
            cert = true;
            ++at;
        }
        if (toks[at] == "linstep") {
            if (toks.size() != at + 3) fail("linstep wants: linstep <r> <step>");
            out.lin_step[std::stoi(toks[at + 1])] = std::stoi(toks[at + 2]);
        } else if (toks[at] == "def") {
            auto eq = std::find(toks.begin(), toks.end(), "=");
            if (eq == toks.end() || eq - toks.begin() != static_cast<long>(at + 2))
                fail("def wants: def <name> = <expr>");
            out.defs[toks[at + 1]] =
                parse_expr(toks, at + 3, toks.size());
        } else if (toks[at] == "permanent") {
            out.permanents.push_back(parse_expr(toks, at + 1, toks.size()));
        } else if (toks[at] == "d") {
            auto arrow = std::find(toks.begin(), toks.end(), "->");
            if (arrow == toks.end()) fail("differential wants: d <r> <expr> -> <expr>");
            size_t ai = static_cast<size_t>(arrow - toks.begin());
            TowerAxiom ax;
            ax.r = std::stoi(toks[at + 1]);
            ax.src = parse_expr(toks, at + 2, ai);
            ax.certificate = cert;
            ax.note = note;
            if (ai + 1 < toks.size() && toks[ai + 1] == "0" && ai + 2 == toks.size())
                ax.to_zero = true;
            else
                ax.tgt = parse_expr(toks, ai + 1, toks.size());
            out.diffs.push_back(ax);
        } else {
            fail("unrecognized axiom record: " + body);
        }
    }
    std::stable_sort(out.diffs.begin(), out.diffs.end(),
                     [](const TowerAxiom& a, const TowerAxiom& b) { return a.r < b.r; });
    return out;
}

AxiomFile load_axioms(const std::string& path) {
    std::ifstream in(data_dir() + "/" + path);
    if (!in) fail("cannot open axiom file " + path);
    return parse_axioms(in);
}

TowerPage parse_page(std::istream& in, std::map<std::string, TowerExpr>* defs) {
    TowerPage page;
    bool have_ring = false;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_note(line, nullptr);
        if (body.empty()) continue;
        auto toks = words_of(body);
        if (toks[0] == "ring") {
            // ring u <s> <t> <inv> k <s> <t> n <s> <t> ncap <c> knzero <z>
            if (toks.size() != 15 || toks[1] != "u" || toks[5] != "k" || toks[8] != "n" ||
                toks[11] != "ncap" || toks[13] != "knzero")
                fail("bad ring record: " + body);
            page.ring.us = std::stoi(toks[2]);
            page.ring.ut = std::stoi(toks[3]);
            page.ring.u_invertible = std::stoi(toks[4]) != 0;
            page.ring.ks = std::stoi(toks[6]);
            page.ring.kt = std::stoi(toks[7]);
            page.ring.ns = std::stoi(toks[9]);
            page.ring.nt = std::stoi(toks[10]);
            page.ring.n_cap = std::stoi(toks[12]);
            page.ring.kn_zero = std::stoi(toks[14]) != 0;
            have_ring = true;
        } else if (toks[0] == "gen") {
            if (toks.size() < 6) fail("bad gen record: " + body);
            TowerGen g;
            g.name = toks[1];
            g.s = std::stoi(toks[2]);
            int stem = std::stoi(toks[3]);
            g.t = stem + g.s;  // records carry (s, stem); charts use stems
            g.k_bound = std::stoi(toks[4]);
            g.n_bound = std::stoi(toks[5]);
            page.gens.push_back(g);
            if (toks.size() > 6) {
                if (toks[6] != "=" || !defs) {
                    if (toks[6] != "=") fail("bad gen record: " + body);
                } else {
                    (*defs)[g.name] = parse_expr(toks, 7, toks.size());
                }
            }
        } else {
            fail("unrecognized page record: " + body);
        }
    }
    if (!have_ring) fail("page file without ring record");
    return page;
}

TowerPage load_page(const std::string& path, std::map<std::string, TowerExpr>* defs) {
    std::ifstream in(data_dir() + "/" + path);
    if (!in) fail("cannot open page file " + path);
    return parse_page(in, defs);
}

std::map<std::pair<int, int>, int> load_chart(const std::string& path) {
    std::ifstream in(data_dir() + "/" + path);
    if (!in) fail("cannot open chart file " + path);
    std::map<std::pair<int, int>, int> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string body = strip_note(line, nullptr);
        if (body.empty()) continue;
        auto toks = words_of(body);
        if (toks[0] != "dot" || toks.size() < 4) fail("bad chart record: " + body);
        out[{std::stoi(toks[1]), std::stoi(toks[2])}] += std::stoi(toks[3]);
    }
    return out;
}

// ----------------------------------------------------------------- engine

TowerEngine::TowerEngine(TowerPage base) : base_(std::move(base)) {
    for (int i = 0; i < static_cast<int>(base_.gens.size()); ++i)
        names_[base_.gens[static_cast<size_t>(i)].name] = TowerWord{i, 0, 0, 0};
}

void TowerEngine::define(const std::string& name, const TowerWord& w) {
    names_[name] = w;
}

void TowerEngine::define_all(const std::map<std::string, TowerExpr>& defs) {
    // definitions may reference each other; resolve until stable
    size_t pending = defs.size() + 1;
    while (true) {
        size_t left = 0;
        for (const auto& [name, expr] : defs) {
            if (names_.count(name)) continue;
            if (auto w = resolve(expr))
                names_[name] = *w;
            else
                ++left;
        }
        if (left == 0) break;
        if (left >= pending) fail("unresolvable definitions in axiom file");
        pending = left;
    }
}

std::optional<TowerWord> TowerEngine::resolve(const TowerExpr& e) const {
    auto it = names_.find(e.gen);
    if (it == names_.end()) return std::nullopt;
    TowerWord w = it->second;
    w.ue += e.ue;
    w.ke += e.ke;
    w.ne += e.ne;
    return w;
}

void TowerEngine::apply_round(int r, int u_step, const std::vector<TowerAxiom>& rows) {
    std::vector<Rule> rules;
    for (const TowerAxiom& ax : rows) {
        if (ax.r != r) fail("round page mismatch in axiom list");
        if (ax.to_zero) continue;  // no removal content
        auto src = resolve(ax.src);
        auto tgt = resolve(ax.tgt);
        if (!src || !tgt) fail("unknown generator name in differential for page " +
                               std::to_string(r));
        // bidegree consistency: d_r : (s,t) -> (s+r, t+r-1)
        if (base_.s_of(*tgt) != base_.s_of(*src) + r ||
            base_.t_of(*tgt) != base_.t_of(*src) + r - 1)
            fail("bidegree-inconsistent differential on page " + std::to_string(r) +
                 ": " + word_str(base_, *src) + " -> " + word_str(base_, *tgt));
        rules.push_back(Rule{*src, *tgt, u_step});
    }
    rounds_.push_back(std::move(rules));
    round_pages_.push_back(r);
    cache_.clear();
}

void TowerEngine::apply_all(const AxiomFile& ax) {
    std::vector<TowerAxiom> batch;
    for (size_t i = 0; i < ax.diffs.size(); ++i) {
        batch.push_back(ax.diffs[i]);
        bool flush = (i + 1 == ax.diffs.size()) || (ax.diffs[i + 1].r != ax.diffs[i].r);
        if (flush) {
            int r = batch.front().r;
            auto st = ax.lin_step.find(r);
            apply_round(r, st == ax.lin_step.end() ? 1 : st->second, batch);
            batch.clear();
        }
    }
}

int TowerEngine::page_of_round(int i) const { return round_pages_[static_cast<size_t>(i)]; }

namespace {

struct Shift {
    int du, dk, dn;
};

std::optional<Shift> match_pattern(const TowerWord& w, const TowerWord& pat, int u_step,
                                   bool u_inv) {
    if (w.gen != pat.gen) return std::nullopt;
    Shift m{w.ue - pat.ue, w.ke - pat.ke, w.ne - pat.ne};
    if (m.dk < 0 || m.dn < 0) return std::nullopt;
    if (m.du % u_step != 0) return std::nullopt;
    if (!u_inv && m.du < 0) return std::nullopt;
    return m;
}

TowerWord shifted(const TowerWord& w, const Shift& m) {
    return TowerWord{w.gen, w.ue + m.du, w.ke + m.dk, w.ne + m.dn};
}

}  // namespace

bool TowerEngine::alive_at(const TowerWord& w, int nrounds) const {
    auto key = std::make_pair(w, nrounds);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool a = alive_uncached(w, nrounds);
    cache_.emplace(key, a);
    return a;
}

bool TowerEngine::alive_uncached(const TowerWord& w, int nrounds) const {
    if (!base_.alive(w)) return false;
    for (int i = 0; i < nrounds; ++i)
        for (const Rule& rule : rounds_[static_cast<size_t>(i)]) {
            if (auto m = match_pattern(w, rule.src, rule.u_step, base_.ring.u_invertible))
                if (alive_at(shifted(rule.tgt, *m), i)) return false;
            if (auto m = match_pattern(w, rule.tgt, rule.u_step, base_.ring.u_invertible))
                if (alive_at(shifted(rule.src, *m), i)) return false;
        }
    return true;
}

bool TowerEngine::alive(const TowerWord& w) const { return alive_at(w, rounds()); }

int TowerEngine::dim_at(int s, int t, int nrounds) const {
    int n = 0;
    for (const TowerWord& w : base_.basis(s, t))
        if (alive_at(w, nrounds)) ++n;
    return n;
}

int TowerEngine::dim(int s, int t) const { return dim_at(s, t, rounds()); }

std::vector<std::string> TowerEngine::check_window(int s_max, int x_min, int x_max) const {
    std::vector<std::string> errs;
    for (int s = 0; s <= s_max; ++s)
        for (int x = x_min; x <= x_max; ++x)
            for (const TowerWord& w : base_.basis(s, x + s)) {
                for (int i = 0; i < rounds(); ++i) {
                    if (!alive_at(w, i)) break;
                    int hits = 0;
                    for (const Rule& rule : rounds_[static_cast<size_t>(i)]) {
                        if (auto m = match_pattern(w, rule.src, rule.u_step,
                                                   base_.ring.u_invertible))
                            if (alive_at(shifted(rule.tgt, *m), i)) ++hits;
                        if (auto m = match_pattern(w, rule.tgt, rule.u_step,
                                                   base_.ring.u_invertible))
                            if (alive_at(shifted(rule.src, *m), i)) ++hits;
                    }
                    if (hits > 1)
                        errs.push_back("page " + std::to_string(round_pages_[static_cast<size_t>(i)]) +
                                       ": word " + word_str(base_, w) +
                                       " matched by " + std::to_string(hits) + " rules");
                }
            }
    return errs;
}

std::vector<TowerEngine::Arrow> TowerEngine::round_arrows(int round, int s_max, int x_min,
                                                          int x_max) const {
    std::vector<Arrow> out;
    if (round < 0 || round >= rounds()) return out;
    int page = round_pages_[static_cast<size_t>(round)];
    for (int s = 0; s <= s_max; ++s)
        for (int x = x_min; x <= x_max; ++x)
            for (const TowerWord& w : base_.basis(s, x + s)) {
                if (!alive_at(w, round)) continue;
                for (const Rule& rule : rounds_[static_cast<size_t>(round)])
                    if (auto m = match_pattern(w, rule.src, rule.u_step,
                                               base_.ring.u_invertible)) {
                        TowerWord tgt = shifted(rule.tgt, *m);
                        if (alive_at(tgt, round)) out.push_back(Arrow{w, tgt, page});
                    }
            }
    return out;
}

std::string TowerEngine::word_label(const TowerWord& w) const {
    return word_str(base_, w);
}

std::vector<std::string> TowerEngine::compare_at(const TowerPage& proposed, int nrounds,
                                                 int s_max, int x_min, int x_max) const {
    std::vector<std::string> errs;
    for (int s = 0; s <= s_max; ++s)
        for (int x = x_min; x <= x_max; ++x) {
            int got = dim_at(s, x + s, nrounds);
            int want = proposed.dim(s, x + s);
            if (got != want)
                errs.push_back("(s=" + std::to_string(s) + ", stem=" + std::to_string(x) +
                               "): computed " + std::to_string(got) + ", table " +
                               std::to_string(want));
        }
    return errs;
}

std::vector<std::string> TowerEngine::compare(const TowerPage& proposed, int s_max,
                                              int x_min, int x_max) const {
    return compare_at(proposed, rounds(), s_max, x_min, x_max);
}

// ---------------------------------------------------------- tower pairing

namespace {

struct Candidate {
    int y, n, r;
};

std::vector<std::vector<Candidate>> build_candidates(
    const std::vector<TowerFamily>& fams, const std::vector<bool>& permanent, int r_min,
    int r_max, int n_max) {
    std::vector<std::vector<Candidate>> cand(fams.size());
    for (size_t x = 0; x < fams.size(); ++x) {
        if (permanent[x]) continue;
        for (size_t y = 0; y < fams.size(); ++y) {
            if (!permanent[y]) continue;
            for (int n = 1; n <= n_max; ++n) {
                // d_r(x) = k^n u^m y: stems k = 20, u = 192
                int need = fams[x].stem - 1 - fams[y].stem - 20 * n;
                if (need % 192 != 0) continue;
                int r = fams[y].s + 4 * n - fams[x].s;
                if (r < r_min || r > r_max || r % 2 == 0) continue;
                cand[x].push_back(Candidate{static_cast<int>(y), n, r});
            }
        }
    }
    return cand;
}

void enumerate_matchings(const std::vector<std::vector<Candidate>>& cand,
                         const std::vector<int>& order, size_t at,
                         std::vector<int>& pick, std::vector<bool>& used,
                         std::vector<std::vector<int>>& found) {
    if (found.size() >= 2) return;
    if (at == order.size()) {
        found.push_back(pick);
        return;
    }
    int x = order[at];
    for (size_t ci = 0; ci < cand[static_cast<size_t>(x)].size(); ++ci) {
        const Candidate& c = cand[static_cast<size_t>(x)][ci];
        if (used[static_cast<size_t>(c.y)]) continue;
        used[static_cast<size_t>(c.y)] = true;
        pick[static_cast<size_t>(x)] = static_cast<int>(ci);
        enumerate_matchings(cand, order, at + 1, pick, used, found);
        used[static_cast<size_t>(c.y)] = false;
        pick[static_cast<size_t>(x)] = -1;
    }
}

}  // namespace

PairingResult pair_towers(const std::vector<TowerFamily>& families,
                          const std::vector<bool>& permanent,
                          const std::vector<TowerPairing>& certificates, int r_min,
                          int r_max, int n_max) {
    PairingResult out;
    auto cand = build_candidates(families, permanent, r_min, r_max, n_max);
    // impose certificates by shrinking the candidate lists
    for (const TowerPairing& c : certificates) {
        auto& lst = cand[static_cast<size_t>(c.x)];
        std::vector<Candidate> keep;
        for (const Candidate& k : lst)
            if (k.y == c.y && k.n == c.n && k.r == c.r) keep.push_back(k);
        if (keep.empty()) {
            out.notes.push_back("certificate for " + families[static_cast<size_t>(c.x)].name +
                                " contradicts the bidegree constraints");
            return out;
        }
        lst = keep;
    }
    std::vector<int> order;
    for (size_t x = 0; x < families.size(); ++x)
        if (!permanent[x]) {
            if (cand[x].empty()) {
                out.notes.push_back("family " + families[x].name +
                                    " has no admissible truncation target");
                return out;
            }
            order.push_back(static_cast<int>(x));
        }
    // search the scarcest families first
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cand[static_cast<size_t>(a)].size() < cand[static_cast<size_t>(b)].size();
    });
    std::vector<int> pick(families.size(), -1);
    std::vector<bool> used(families.size(), false);
    std::vector<std::vector<int>> found;
    enumerate_matchings(cand, order, 0, pick, used, found);
    out.matchings_found = static_cast<int>(found.size());
    if (found.size() == 1) {
        for (int x : order) {
            const Candidate& c =
                cand[static_cast<size_t>(x)][static_cast<size_t>(found[0][static_cast<size_t>(x)])];
            out.matching.push_back(TowerPairing{x, c.y, c.n, c.r});
        }
        std::sort(out.matching.begin(), out.matching.end(),
                  [](const TowerPairing& a, const TowerPairing& b) {
                      return std::make_pair(a.r, a.x) < std::make_pair(b.r, b.x);
                  });
    } else if (found.size() >= 2) {
        for (int x : order)
            if (found[0][static_cast<size_t>(x)] != found[1][static_cast<size_t>(x)])
                out.notes.push_back("ambiguous truncation for family " +
                                    families[static_cast<size_t>(x)].name);
    }
    return out;
}

std::map<int, int> quotient_orders(const TowerPage& einfty, bool mod_n, int stem_min,
                                   int stem_max) {
    std::map<int, int> out;
    for (int x = stem_min; x <= stem_max; ++x) out[x] = 0;
    int period = einfty.ring.u_invertible ? einfty.ring.ut - einfty.ring.us : 0;
    for (const TowerGen& g : einfty.gens) {
        for (int ne = 0; mod_n ? ne == 0 : ne < einfty.ring.n_cap; ++ne) {
            if (g.n_bound >= 0 && ne >= g.n_bound) break;
            int stem0 = g.t - g.s + (einfty.ring.nt - einfty.ring.ns) * ne;
            for (int x = stem_min; x <= stem_max; ++x) {
                bool hit = period > 0 ? ((x - stem0) % period == 0) : (x == stem0);
                if (hit) ++out[x];
            }
        }
    }
    return out;
}

// -------------------------------------------------------------- pipelines

EinftyRun run_hfpss_to_einfty(const std::string& version) {
    bool late = (version == "01" || version == "10");
    std::map<std::string, TowerExpr> defs;
    TowerPage base = load_page("sseq/hfpss_e2.txt", &defs);
    TowerPage einfty = load_page(late ? "sseq/hfpss_einfty_0110.txt"
                                      : "sseq/hfpss_einfty_0011.txt",
                                 &defs);
    AxiomFile shared = load_axioms("axioms/hfpss_d3_d5.txt");
    AxiomFile high = load_axioms(late ? "axioms/hfpss_d9_d23_0110.txt"
                                      : "axioms/hfpss_d9_d23_0011.txt");
    EinftyRun run{TowerEngine(base), einfty, {}, {}, false};
    run.engine.define_all(shared.defs);
    run.engine.define_all(high.defs);
    run.engine.define_all(defs);
    run.engine.apply_all(shared);
    run.engine.apply_all(high);
    const int s_max = 40, x_min = -30, x_max = 200;
    run.checks = run.engine.check_window(s_max, x_min, x_max);
    run.diffs = run.engine.compare(run.einfty, s_max, x_min, x_max);
    run.vanishing_line_ok = true;
    for (int s = 24; s <= s_max + 24; ++s)
        for (int x = x_min; x <= x_max; ++x)
            if (run.engine.dim(s, x + s) != 0) run.vanishing_line_ok = false;
    return run;
}

TowerPage ass_e2_page() { return load_page("sseq/ass_e2.txt", nullptr); }

int lambda_version(const std::string& version) {
    if (version == "01" || version == "10") return 1;
    if (version == "00" || version == "11") return 0;
    fail("unknown version " + version);
}

}  // namespace sseq
