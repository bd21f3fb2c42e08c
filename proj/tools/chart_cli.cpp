// Command-line front door: run the named computations, verify them against
// the shipped fixtures, export tables as JSON lines, and render SVG charts.
//
// Exit codes: 0 success, 1 fixture mismatch, 2 bad input, 3 resource guard.

#include "sseq/acceptance.hpp"
#include "sseq/chart.hpp"
#include "sseq/cobar.hpp"
#include "sseq/dmss.hpp"
#include "sseq/groupcoh.hpp"
#include "sseq/minres.hpp"
#include "sseq/ssengine.hpp"
#include "sseq/textio.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace sseq;

namespace {

struct Options {
    std::string version = "01";
    int s_max = -1, t_max = -1, sigma_max = -1;
    std::string axioms, out, format = "json", to = "einfty";
    std::string algebra = "A1star", comodule, page, only;
    int stem_min = 0, stem_max = 48;
    int jobs = 1;
};

[[noreturn]] void usage(int code) {
    std::ostream& os = code ? std::cerr : std::cout;
    os << "usage: sseq-chart <command> [flags]\n"
          "\n"
          "commands:\n"
          "  ext        Ext table of a comodule fixture (minimal resolution,\n"
          "             cobar cross-check when --jobs > 1)\n"
          "  dmss       first and second pages of the polynomial model\n"
          "  group-coh  cohomology ring table of the order-24 group\n"
          "  hfpss      fixed-point spectral sequence; --to e5|e7|einfty\n"
          "  ass        Adams pages against the digitized chart fixtures\n"
          "  lambda     the linked-product coefficient of a version\n"
          "  verify     run the numbered verification suite (--only 1,2,...)\n"
          "  chart      render a page fixture as SVG or JSON\n"
          "\n"
          "flags (defaults in parentheses):\n"
          "  --version {00,01,10,11}   module version (01)\n"
          "  --s-max N                 filtration bound (command-specific)\n"
          "  --t-max N                 internal-degree bound (command-specific)\n"
          "  --sigma-max N             polynomial-degree bound (12)\n"
          "  --axioms NAME             axiom file override (version default)\n"
          "  --out DIR                 write artifacts there instead of stdout\n"
          "  --jobs N                  worker threads for bidegree loops (1)\n"
          "  --format {json,svg}       chart output format (json)\n"
          "  --algebra NAME            ext: one of A0star..E1star (A1star)\n"
          "  --comodule NAME           ext: fixture name (trivial comodule)\n"
          "  --to PAGE                 hfpss: e5, e7 or einfty (einfty)\n"
          "  --page NAME               chart: hfpss-e2|hfpss-e5|hfpss-e7|\n"
          "                            hfpss-einfty|ass-e2\n"
          "  --stem-min N --stem-max N chart window (0..48)\n"
          "  --only LIST               verify: comma-separated criterion ids\n"
          "\n"
          "exit codes: 0 ok, 1 fixture mismatch, 2 bad input, 3 resource guard\n";
    std::exit(code);
}

int to_int(const std::string& s) {
    try {
        std::size_t p = 0;
        int v = std::stoi(s, &p);
        if (p != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        std::cerr << "error: not an integer: " << s << "\n";
        std::exit(2);
    }
}

Options parse(int argc, char** argv, int first) {
    Options o;
    for (int i = first; i < argc; ++i) {
        std::string a = argv[i];
        auto val = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "error: flag " << a << " needs a value\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (a == "--version")
            o.version = val();
        else if (a == "--s-max")
            o.s_max = to_int(val());
        else if (a == "--t-max")
            o.t_max = to_int(val());
        else if (a == "--sigma-max")
            o.sigma_max = to_int(val());
        else if (a == "--axioms")
            o.axioms = val();
        else if (a == "--out")
            o.out = val();
        else if (a == "--jobs")
            o.jobs = to_int(val());
        else if (a == "--format")
            o.format = val();
        else if (a == "--algebra")
            o.algebra = val();
        else if (a == "--comodule")
            o.comodule = val();
        else if (a == "--to")
            o.to = val();
        else if (a == "--page")
            o.page = val();
        else if (a == "--stem-min")
            o.stem_min = to_int(val());
        else if (a == "--stem-max")
            o.stem_max = to_int(val());
        else if (a == "--only")
            o.only = val();
        else if (a == "--help" || a == "-h")
            usage(0);
        else {
            std::cerr << "error: unknown flag " << a << "\n";
            std::exit(2);
        }
    }
    if (o.version != "00" && o.version != "01" && o.version != "10" && o.version != "11") {
        std::cerr << "error: --version must be one of 00, 01, 10, 11\n";
        std::exit(2);
    }
    if (o.format != "json" && o.format != "svg") {
        std::cerr << "error: --format must be json or svg\n";
        std::exit(2);
    }
    if (o.jobs < 1 || o.jobs > 256) {
        std::cerr << "error: --jobs out of range\n";
        std::exit(2);
    }
    // resource guard: these bounds blow past anything the tables need
    if (o.s_max > 200 || o.t_max > 400 || o.sigma_max > 60 ||
        o.stem_max - o.stem_min > 400) {
        std::cerr << "resource guard: requested window is too large\n";
        std::exit(3);
    }
    return o;
}

// write to <out>/<name> when --out is set, stdout otherwise
void emit(const Options& o, const std::string& name, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::create_directories(o.out);
    std::ofstream f(o.out + "/" + name, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << o.out << "/" << name << "\n";
        std::exit(2);
    }
    f << body;
}

int cmd_ext(const Options& o) {
    int s_max = o.s_max < 0 ? 8 : o.s_max;
    int t_max = o.t_max < 0 ? 24 : o.t_max;
    const HopfAlgebra* A = nullptr;
    try {
        A = &builtin_hopf(o.algebra);
    } catch (const std::exception&) {
        std::cerr << "error: unknown algebra " << o.algebra << "\n";
        return 2;
    }
    Comodule M;
    try {
        M = o.comodule.empty() ? trivial_comodule(*A) : build_named_comodule(o.comodule);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (M.A != A) {
        std::cerr << "error: comodule " << o.comodule << " does not live over " << o.algebra
                  << "\n";
        return 2;
    }
    MinresTable mt = minimal_resolution_ext(*A, M, s_max, t_max);
    std::ostringstream body;
    for (int s = 0; s <= s_max; ++s)
        for (int t = s; t <= t_max; ++t)
            if (mt.dim(s, t))
                body << "{\"s\":" << s << ",\"t\":" << t << ",\"stem\":" << t - s
                     << ",\"dim\":" << mt.dim(s, t) << "}\n";
    emit(o, "ext.jsonl", body.str());
    if (o.jobs > 1) {
        // cobar cross-check, bidegrees partitioned over worker threads
        int cap = std::min(t_max, 16);
        std::vector<std::thread> pool;
        std::vector<std::string> errs(static_cast<std::size_t>(o.jobs));
        for (int w = 0; w < o.jobs; ++w)
            pool.emplace_back([&, w]() {
                CobarComplex cb(*A, M, cap);
                for (int t = w; t <= cap; t += o.jobs)
                    for (int s = 0; s <= std::min(s_max, 5); ++s)
                        if (cb.ext_dimension(s, t) != mt.dim(s, t))
                            errs[static_cast<std::size_t>(w)] =
                                "cobar mismatch at s=" + std::to_string(s) +
                                ", t=" + std::to_string(t);
            });
        for (auto& th : pool) th.join();
        for (const auto& e : errs)
            if (!e.empty()) {
                std::cerr << e << "\n";
                return 1;
            }
        std::cerr << "cobar cross-check ok (t <= " << cap << ", " << o.jobs << " jobs)\n";
    }
    return 0;
}

int cmd_dmss(const Options& o) {
    int sigma_max = o.sigma_max < 0 ? 12 : o.sigma_max;
    int t_max = o.t_max < 0 ? 70 : o.t_max;
    PolyE2 E(sigma_max, t_max);
    std::ostringstream body;
    for (int sigma = 0; sigma <= sigma_max; ++sigma)
        for (int t = 0; t <= t_max; ++t)
            if (E.e1_dim(sigma, t) || E.dim(sigma, t))
                body << "{\"sigma\":" << sigma << ",\"t\":" << t
                     << ",\"e1\":" << E.e1_dim(sigma, t) << ",\"e2\":" << E.dim(sigma, t)
                     << "}\n";
    emit(o, "dmss.jsonl", body.str());
    return 0;
}

int cmd_group_coh(const Options& o) {
    int s_max = o.s_max < 0 ? 8 : o.s_max;
    GroupTable G = build_g24();
    MinimalResolution res(G, G.q8, G.om, s_max + 2);
    std::ostringstream body;
    int bad = 0;
    for (int s = 0; s <= s_max; ++s)
        for (int t = 0; t <= 46; t += 2) {
            GModule M = morava_module(G, MoravaKind::plain, t % 6);
            int got = res.cohomology_dim(s, M);
            int want = henn_ring_dim(s, t);
            if (got != want) ++bad;
            if (got || want)
                body << "{\"s\":" << s << ",\"t\":" << t << ",\"dim\":" << got
                     << ",\"ring\":" << want << "}\n";
        }
    emit(o, "group_coh.jsonl", body.str());
    if (bad) {
        std::cerr << bad << " positions differ from the ring presentation\n";
        return 1;
    }
    std::cerr << "all positions match the ring presentation\n";
    return 0;
}

int cmd_hfpss(const Options& o) {
    if (o.to != "einfty" && o.to != "e5" && o.to != "e7") {
        std::cerr << "error: --to must be e5, e7 or einfty\n";
        return 2;
    }
    EinftyRun run = run_hfpss_to_einfty(o.version);
    if (o.to != "einfty") {
        TowerPage want = load_page("sseq/hfpss_" + o.to + ".txt", nullptr);
        int rounds = o.to == "e5" ? 1 : 2;
        auto diffs = run.engine.compare_at(want, rounds, 30, -30, 200);
        std::cout << want.gens.size() << " cyclic modules, " << diffs.size() << " diffs\n";
        for (const auto& d : diffs) std::cerr << d << "\n";
        return diffs.empty() ? 0 : 1;
    }
    std::cout << run.einfty.gens.size() << " cyclic modules, " << run.diffs.size()
              << " diffs\n";
    for (const auto& d : run.diffs) std::cerr << d << "\n";
    for (const auto& e : run.checks) std::cerr << e << "\n";
    if (!run.vanishing_line_ok) std::cerr << "vanishing line fails\n";
    if (!o.out.empty()) {
        ChartDoc doc = chart_of_page(run.einfty, 0, 192, 0, 8, o.format == "svg",
                                     "final page, version " + o.version);
        emit(o, "hfpss_einfty." + o.format, o.format == "svg" ? to_svg(doc) : to_json(doc));
    }
    return (run.diffs.empty() && run.checks.empty() && run.vanishing_line_ok) ? 0 : 1;
}

int cmd_ass(const Options& o) {
    TowerPage page = ass_e2_page();
    struct Win {
        const char* file;
        int x0, x1, s0, s1;
    } wins[] = {{"charts/ass_stems_0_48.txt", 0, 48, 0, 11},
                {"charts/ass_stems_48_101.txt", 48, 101, 8, 20},
                {"charts/ass_stems_148_152.txt", 148, 152, 25, 30}};
    int bad = 0;
    for (const Win& w : wins) {
        auto fixture = load_chart(w.file);
        ChartDoc doc = chart_of_page(page, w.x0, w.x1, w.s0, w.s1);
        auto diffs = diff_dots(dot_multiset(doc), fixture);
        std::cout << w.file << ": " << diffs.size() << " diffs\n";
        for (const auto& d : diffs) std::cerr << "  " << d << "\n";
        bad += static_cast<int>(diffs.size());
    }
    TowerEngine eng(page);
    std::string axfile = o.axioms;
    if (axfile.empty())
        axfile = lambda_version(o.version) ? "axioms/ass_d_0110.txt" : "axioms/ass_d_0011.txt";
    AxiomFile ax = load_axioms(axfile);
    eng.define_all(ax.defs);
    eng.apply_all(ax);
    auto errs = eng.check_window(32, 0, 160);
    std::cout << axfile << ": " << eng.rounds() << " pages of differentials, " << errs.size()
              << " consistency errors\n";
    for (const auto& e : errs) std::cerr << "  " << e << "\n";
    bad += static_cast<int>(errs.size());
    if (!o.out.empty()) {
        ChartDoc doc = chart_of_engine(eng, 0, 148, 152, 25, 30,
                                       "displayed window, version " + o.version);
        emit(o, "ass_window." + o.format, o.format == "svg" ? to_svg(doc) : to_json(doc));
    }
    return bad ? 1 : 0;
}

int cmd_lambda(const Options& o) {
    std::cout << exotic_product_lambda(o.version[0] - '0', o.version[1] - '0') << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<int> only;
    if (!o.only.empty())
        for (const std::string& tok : split(o.only, ','))
            if (!trim(tok).empty()) only.push_back(to_int(trim(tok)));
    auto results = run_acceptance(only.empty() && !o.only.empty() ? std::vector<int>{-1}
                                                                  : only);
    bool all = true;
    for (const auto& r : results) {
        std::ostringstream line;
        line << "[" << (r.id < 10 ? " " : "") << r.id << "/12] "
             << (r.pass ? "PASS" : "FAIL") << " " << r.name << " — " << r.detail << " ("
             << static_cast<int>(r.seconds * 10 + 0.5) / 10.0 << "s)";
        std::cout << line.str() << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

int cmd_chart(const Options& o) {
    static const std::map<std::string, std::string> pages = {
        {"hfpss-e2", "sseq/hfpss_e2.txt"},
        {"hfpss-e5", "sseq/hfpss_e5.txt"},
        {"hfpss-e7", "sseq/hfpss_e7.txt"},
        {"ass-e2", "sseq/ass_e2.txt"},
    };
    std::string path;
    if (o.page == "hfpss-einfty")
        path = lambda_version(o.version) ? "sseq/hfpss_einfty_0110.txt"
                                         : "sseq/hfpss_einfty_0011.txt";
    else if (auto it = pages.find(o.page); it != pages.end())
        path = it->second;
    else {
        std::cerr << "error: --page must be one of hfpss-e2, hfpss-e5, hfpss-e7, "
                     "hfpss-einfty, ass-e2\n";
        return 2;
    }
    if (o.stem_min > o.stem_max) {
        std::cerr << "error: empty stem window\n";
        return 2;
    }
    TowerPage page = load_page(path, nullptr);
    int s_max = o.s_max < 0 ? 8 : o.s_max;
    ChartDoc doc =
        chart_of_page(page, o.stem_min, o.stem_max, 0, s_max, o.format == "svg", o.page);
    emit(o, o.page + "." + o.format, o.format == "svg" ? to_svg(doc) : to_json(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) usage(2);
    std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") usage(0);
    Options o = parse(argc, argv, 2);
    try {
        if (cmd == "ext") return cmd_ext(o);
        if (cmd == "dmss") return cmd_dmss(o);
        if (cmd == "group-coh") return cmd_group_coh(o);
        if (cmd == "hfpss") return cmd_hfpss(o);
        if (cmd == "ass") return cmd_ass(o);
        if (cmd == "lambda") return cmd_lambda(o);
        if (cmd == "verify") return cmd_verify(o);
        if (cmd == "chart") return cmd_chart(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: unknown command " << cmd << "\n";
    usage(2);
}
