#pragma once

// Multiplicative spectral-sequence bookkeeping for pages that are direct
// sums of cyclic modules over a three-generator coefficient ring
//   F[u^{±1} or u, k, n] / (n^ncap, optionally k n = 0).
// Every page element is a monomial word u^a k^b n^c times a cyclic
// generator.  Differentials are imposed as axioms "d_r(word) = word" and
// closed under multiplication by k, n and a declared power of u; with the
// axiom sets used here every differential matches basis words in pairs, so
// page turning is the removal of matched source/target words.  A word is
// removed by a round exactly when its partner is still alive entering that
// round; this makes the model exact on dimensions and lets any later page
// be compared against an independently presented table of cyclic modules.
//
// Two instances are used: the homotopy fixed point spectral sequence with
// (u, k, n) = (Delta, kbar, nu), and the Adams spectral sequence with
// (u, k, n) = (w2, g, h2).

#include "sseq/gf.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

// coefficient ring: monoid generators u, k, n with bidegrees (s, t)
struct TriRing {
    int us = 0, ut = 0;
    int ks = 0, kt = 0;
    int ns = 0, nt = 0;
    bool u_invertible = false;
    bool kn_zero = false;  // the relation k n = 0
    int n_cap = 3;         // the relation n^n_cap = 0
};

// a cyclic module generator; exponent bounds are strict upper bounds on the
// k- and n-exponents of surviving words (-1 = no bound beyond the ring)
struct TowerGen {
    std::string name;
    int s = 0, t = 0;
    int k_bound = -1;
    int n_bound = -1;
};

// u^ue k^ke n^ne * gens[gen]
struct TowerWord {
    int gen = -1;
    int ue = 0, ke = 0, ne = 0;
    friend bool operator==(const TowerWord&, const TowerWord&) = default;
    friend auto operator<=>(const TowerWord&, const TowerWord&) = default;
};

struct TowerPage {
    TriRing ring;
    std::vector<TowerGen> gens;

    int find(const std::string& name) const;  // -1 when absent
    bool alive(const TowerWord& w) const;
    int s_of(const TowerWord& w) const;
    int t_of(const TowerWord& w) const;
    std::vector<TowerWord> basis(int s, int t) const;
    int dim(int s, int t) const;
};

// a monomial expression in a named generator, as written in axiom files
struct TowerExpr {
    std::string gen;
    int ue = 0, ke = 0, ne = 0;
};

struct TowerAxiom {
    int r = 0;
    TowerExpr src;
    TowerExpr tgt;         // ignored when to_zero
    bool to_zero = false;  // "-> 0": an explicit no-differential assertion
    bool certificate = false;
    std::string note;
};

struct AxiomFile {
    std::vector<TowerAxiom> diffs;           // sorted by page on load
    std::vector<TowerExpr> permanents;       // permanent-cycle certificates
    std::map<int, int> lin_step;             // page -> u-linearity step
    std::map<std::string, TowerExpr> defs;   // name -> definition
};

// Axiom file grammar (one record per line, '#' starts a note):
//   linstep <r> <step>
//   def <name> = <expr>
//   d <r> <expr> -> <expr> | d <r> <expr> -> 0
//   permanent <expr>
//   certify d <r> <expr> -> <expr>     (a tie-breaking certificate)
// where <expr> is a product of tokens U/D/W, K/G, N/H (aliases for u, k, n)
// with optional ^exponent, and a generator name.
AxiomFile parse_axioms(std::istream& in);
AxiomFile load_axioms(const std::string& path);  // relative to data_dir()

// page fixture file grammar:
//   ring u <s> <t> <inv 0|1> k <s> <t> n <s> <t> ncap <c> knzero <0|1>
//   gen <name> <s> <t> <k_bound> <n_bound> [= <expr>]
// definitions re-express a generator as a word of an earlier base page
TowerPage parse_page(std::istream& in, std::map<std::string, TowerExpr>* defs = nullptr);
TowerPage load_page(const std::string& path, std::map<std::string, TowerExpr>* defs = nullptr);

// chart fixture: "dot <stem> <s> <count>" records
std::map<std::pair<int, int>, int> load_chart(const std::string& path);

class TowerEngine {
public:
    explicit TowerEngine(TowerPage base);

    const TowerPage& base() const { return base_; }
    // register name -> base word (resolving earlier definitions)
    void define(const std::string& name, const TowerWord& w);
    void define_all(const std::map<std::string, TowerExpr>& defs);
    std::optional<TowerWord> resolve(const TowerExpr& e) const;

    // impose one page of differentials, closed under multiplication by k, n
    // and u^u_step; zero-assertions and certificates carry no removal data
    void apply_round(int r, int u_step, const std::vector<TowerAxiom>& rows);
    // convenience: apply every page of the file in ascending page order
    void apply_all(const AxiomFile& ax);

    int rounds() const { return static_cast<int>(rounds_.size()); }
    int page_of_round(int i) const;
    bool alive(const TowerWord& w) const;   // after all applied rounds
    bool alive_at(const TowerWord& w, int rounds) const;
    int dim(int s, int t) const;
    int dim_at(int s, int t, int rounds) const;

    // scan a window for words matched by two different rules with live
    // partners (ambiguous kills, d o d != 0); returns human-readable errors
    std::vector<std::string> check_window(int s_max, int x_min, int x_max) const;
    // the differentials of round i (0-based) whose source lies in the window
    // and is alive entering the round, as (source, target, page) triples
    struct Arrow {
        TowerWord src, tgt;
        int page = 0;
    };
    std::vector<Arrow> round_arrows(int round, int s_max, int x_min, int x_max) const;
    std::string word_label(const TowerWord& w) const;
    // per-bidegree dimension diff of the current page against a proposed
    // presentation; empty = exact match over the window
    std::vector<std::string> compare(const TowerPage& proposed, int s_max, int x_min,
                                     int x_max) const;
    std::vector<std::string> compare_at(const TowerPage& proposed, int rounds, int s_max,
                                        int x_min, int x_max) const;

private:
    struct Rule {
        TowerWord src, tgt;
        int u_step = 1;
    };
    TowerPage base_;
    std::map<std::string, TowerWord> names_;
    std::vector<std::vector<Rule>> rounds_;
    std::vector<int> round_pages_;
    mutable std::map<std::pair<TowerWord, int>, bool> cache_;

    bool alive_uncached(const TowerWord& w, int rounds) const;
};

// one kbar-free tower on a late page, taken modulo u = Delta^8
struct TowerFamily {
    std::string name;  // e.g. "D^2 e[1,23]"
    int s = 0;
    int stem = 0;
};

// x kills k^n u^... times y on page r (Delta-exponent differences are
// recorded via the target family only; u-shifts are implicit)
struct TowerPairing {
    int x = -1, y = -1;  // indices into the family list
    int n = 0, r = 0;
    friend bool operator==(const TowerPairing&, const TowerPairing&) = default;
};

struct PairingResult {
    int matchings_found = 0;  // counted up to 2
    std::vector<TowerPairing> matching;  // valid when matchings_found == 1
    std::vector<std::string> notes;      // ambiguities / infeasibility trace
};

// Perfect matching between non-permanent and permanent kbar-free families:
// each non-permanent family x must truncate exactly one permanent family y
// with d_r(x) = k^n y', y' in the u-orbit of y, subject to bidegree
// arithmetic (k has stem 20, u has stem 192), odd r with r_min <= r <=
// r_max, and 1 <= n <= n_max.  Certificates pre-impose pairs.  When more
// than one perfect matching survives, both are reported and the caller must
// supply more certificates.
PairingResult pair_towers(const std::vector<TowerFamily>& families,
                          const std::vector<bool>& permanent,
                          const std::vector<TowerPairing>& certificates,
                          int r_min = 8, int r_max = 23, int n_max = 6);

// per-stem dimension of the final page modulo k-multiples (and optionally
// n-multiples), folded along u when it is invertible (period = stem of u)
std::map<int, int> quotient_orders(const TowerPage& einfty, bool mod_n, int stem_min,
                                   int stem_max);

// preassembled pipelines ---------------------------------------------------

struct EinftyRun {
    TowerEngine engine;          // base = HFPSS E2/E3, all rounds applied
    TowerPage einfty;            // the shipped expected table
    std::vector<std::string> diffs;   // empty = exact match
    std::vector<std::string> checks;  // consistency scan of every round
    bool vanishing_line_ok = false;   // nothing above s = 23 at the end
};

// version in {"00", "01", "10", "11"}; loads the shipped axiom and fixture
// files and runs the homotopy fixed point spectral sequence to the end
EinftyRun run_hfpss_to_einfty(const std::string& version);

// the 16-generator Adams E2 page over F2[h2, g, w2]/(h2^3, h2 g)
TowerPage ass_e2_page();
// lambda factor of the w2-linked products for model version "ij"
int lambda_version(const std::string& version);

}  // namespace sseq
