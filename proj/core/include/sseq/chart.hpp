#pragma once

// Adams-style chart documents: one dot per field-dimension unit at
// (stem, filtration), optional multiplication segments, differential arrows
// of slope (-1, +r).  Rendered as SVG for reading and as JSON dot lists for
// machine diffing against digitized figure fixtures.  Both outputs are
// byte-stable across runs for identical inputs.

#include "sseq/ssengine.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sseq {

struct ChartDot {
    int x = 0, s = 0, count = 0;
};

// multiplication segment between two dot positions; kind names the operator
struct ChartLine {
    int x0 = 0, s0 = 0, x1 = 0, s1 = 0;
    std::string kind;
};

// a d_r arrow from (x0, s0) to (x0 - 1, s0 + r)
struct ChartArrow {
    int x0 = 0, s0 = 0, r = 0;
    std::string label;
};

struct ChartDoc {
    std::string title;
    int x_min = 0, x_max = 0, s_min = 0, s_max = 0;
    std::vector<ChartDot> dots;      // sorted by (x, s)
    std::vector<ChartLine> lines;    // sorted by (kind, x0, s0)
    std::vector<ChartArrow> arrows;  // sorted by (r, x0, s0)
};

// dots of a cyclic-module page over a window; with_lines adds n- and
// k-multiplication segments wherever both endpoints carry classes
ChartDoc chart_of_page(const TowerPage& page, int x_min, int x_max, int s_min, int s_max,
                       bool with_lines = false, std::string title = "");

// dots of the engine's page after `rounds` rounds, plus the arrows of round
// `rounds` itself (differentials leaving the displayed page)
ChartDoc chart_of_engine(const TowerEngine& eng, int rounds, int x_min, int x_max,
                         int s_min, int s_max, std::string title = "");

// (x, s) -> dot count, for diffing against load_chart fixtures
std::map<std::pair<int, int>, int> dot_multiset(const ChartDoc& doc);
// per-position count differences, empty = equal
std::vector<std::string> diff_dots(const std::map<std::pair<int, int>, int>& got,
                                   const std::map<std::pair<int, int>, int>& want);

std::string to_json(const ChartDoc& doc);
std::string to_svg(const ChartDoc& doc);

}  // namespace sseq
