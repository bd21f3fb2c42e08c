#include "sseq/chart.hpp"

#include <algorithm>
#include <sstream>

namespace sseq {

namespace {

void sort_doc(ChartDoc& doc) {
    std::sort(doc.dots.begin(), doc.dots.end(), [](const ChartDot& a, const ChartDot& b) {
        return std::make_pair(a.x, a.s) < std::make_pair(b.x, b.s);
    });
    std::sort(doc.lines.begin(), doc.lines.end(), [](const ChartLine& a, const ChartLine& b) {
        return std::tie(a.kind, a.x0, a.s0, a.x1, a.s1) <
               std::tie(b.kind, b.x0, b.s0, b.x1, b.s1);
    });
    std::sort(doc.arrows.begin(), doc.arrows.end(),
              [](const ChartArrow& a, const ChartArrow& b) {
                  return std::tie(a.r, a.x0, a.s0, a.label) <
                         std::tie(b.r, b.x0, b.s0, b.label);
              });
}

void add_dots(ChartDoc& doc, const TowerPage& page) {
    for (int x = doc.x_min; x <= doc.x_max; ++x)
        for (int s = doc.s_min; s <= doc.s_max; ++s) {
            int d = page.dim(s, x + s);
            if (d > 0) doc.dots.push_back(ChartDot{x, s, d});
        }
}

}  // namespace

ChartDoc chart_of_page(const TowerPage& page, int x_min, int x_max, int s_min, int s_max,
                       bool with_lines, std::string title) {
    ChartDoc doc;
    doc.title = std::move(title);
    doc.x_min = x_min;
    doc.x_max = x_max;
    doc.s_min = s_min;
    doc.s_max = s_max;
    add_dots(doc, page);
    if (with_lines) {
        const TriRing& r = page.ring;
        struct Op {
            const char* kind;
            int ds, dx;
        } ops[2] = {{"n", r.ns, r.nt - r.ns}, {"k", r.ks, r.kt - r.ks}};
        for (const Op& op : ops)
            for (int x = x_min; x <= x_max; ++x)
                for (int s = s_min; s <= s_max; ++s)
                    for (const TowerWord& w : page.basis(s, x + s)) {
                        TowerWord up = w;
                        if (op.kind[0] == 'n')
                            ++up.ne;
                        else
                            ++up.ke;
                        if (!page.alive(up)) continue;
                        if (x + op.dx > x_max || s + op.ds > s_max) continue;
                        doc.lines.push_back(
                            ChartLine{x, s, x + op.dx, s + op.ds, op.kind});
                    }
        doc.lines.erase(std::unique(doc.lines.begin(), doc.lines.end(),
                                    [](const ChartLine& a, const ChartLine& b) {
                                        return std::tie(a.kind, a.x0, a.s0, a.x1, a.s1) ==
                                               std::tie(b.kind, b.x0, b.s0, b.x1, b.s1);
                                    }),
                        doc.lines.end());
    }
    sort_doc(doc);
    return doc;
}

ChartDoc chart_of_engine(const TowerEngine& eng, int rounds, int x_min, int x_max,
                         int s_min, int s_max, std::string title) {
    ChartDoc doc;
    doc.title = std::move(title);
    doc.x_min = x_min;
    doc.x_max = x_max;
    doc.s_min = s_min;
    doc.s_max = s_max;
    for (int x = x_min; x <= x_max; ++x)
        for (int s = s_min; s <= s_max; ++s) {
            int d = eng.dim_at(s, x + s, rounds);
            if (d > 0) doc.dots.push_back(ChartDot{x, s, d});
        }
    for (const TowerEngine::Arrow& a : eng.round_arrows(rounds, s_max, x_min, x_max)) {
        int sx = eng.base().s_of(a.src), tx = eng.base().t_of(a.src);
        doc.arrows.push_back(ChartArrow{tx - sx, sx, a.page, eng.word_label(a.src)});
    }
    sort_doc(doc);
    return doc;
}

std::map<std::pair<int, int>, int> dot_multiset(const ChartDoc& doc) {
    std::map<std::pair<int, int>, int> out;
    for (const ChartDot& d : doc.dots) out[{d.x, d.s}] += d.count;
    return out;
}

std::vector<std::string> diff_dots(const std::map<std::pair<int, int>, int>& got,
                                   const std::map<std::pair<int, int>, int>& want) {
    std::vector<std::string> errs;
    auto scan = [&](const std::map<std::pair<int, int>, int>& a,
                    const std::map<std::pair<int, int>, int>& b, bool swap) {
        for (const auto& [pos, n] : a) {
            auto it = b.find(pos);
            int m = it == b.end() ? 0 : it->second;
            if (swap && it != b.end()) continue;  // already reported
            if (n != m)
                errs.push_back("(stem=" + std::to_string(pos.first) +
                               ", s=" + std::to_string(pos.second) + "): computed " +
                               std::to_string(swap ? m : n) + ", fixture " +
                               std::to_string(swap ? n : m));
        }
    };
    scan(got, want, false);
    scan(want, got, true);
    return errs;
}

std::string to_json(const ChartDoc& doc) {
    std::ostringstream out;
    out << "{\"title\":\"" << doc.title << "\",\"window\":{\"x\":[" << doc.x_min << ","
        << doc.x_max << "],\"s\":[" << doc.s_min << "," << doc.s_max << "]},\n";
    out << "\"dots\":[";
    for (std::size_t i = 0; i < doc.dots.size(); ++i) {
        const ChartDot& d = doc.dots[i];
        out << (i ? ",\n  " : "\n  ") << "{\"x\":" << d.x << ",\"s\":" << d.s
            << ",\"count\":" << d.count << "}";
    }
    out << "],\n\"lines\":[";
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
        const ChartLine& l = doc.lines[i];
        out << (i ? ",\n  " : "\n  ") << "{\"kind\":\"" << l.kind << "\",\"from\":[" << l.x0
            << "," << l.s0 << "],\"to\":[" << l.x1 << "," << l.s1 << "]}";
    }
    out << "],\n\"arrows\":[";
    for (std::size_t i = 0; i < doc.arrows.size(); ++i) {
        const ChartArrow& a = doc.arrows[i];
        out << (i ? ",\n  " : "\n  ") << "{\"r\":" << a.r << ",\"from\":[" << a.x0 << ","
            << a.s0 << "],\"to\":[" << a.x0 - 1 << "," << a.s0 + a.r
            << "],\"source\":\"" << a.label << "\"}";
    }
    out << "]}\n";
    return out.str();
}

std::string to_svg(const ChartDoc& doc) {
    // one grid cell per (stem, filtration); dots of a cell stack horizontally
    const int cell = 20, pad = 30, rdot = 3;
    int w = (doc.x_max - doc.x_min + 1) * cell + 2 * pad;
    int h = (doc.s_max - doc.s_min + 1) * cell + 2 * pad;
    auto px = [&](double x) { return pad + (x - doc.x_min + 0.5) * cell; };
    auto py = [&](double s) { return h - pad - (s - doc.s_min + 0.5) * cell; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    if (!doc.title.empty())
        out << "<text x=\"" << pad << "\" y=\"" << 18 << "\" font-size=\"12\">" << doc.title
            << "</text>\n";
    // axes with ticks every 4 stems / 4 filtrations
    out << "<g stroke=\"#888\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad
        << "\" y2=\"" << h - pad << "\"/>\n";
    out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << pad << "\" y2=\""
        << pad << "\"/>\n</g>\n";
    out << "<g font-size=\"9\" fill=\"#444\" text-anchor=\"middle\">\n";
    for (int x = doc.x_min; x <= doc.x_max; ++x)
        if (x % 4 == 0)
            out << "<text x=\"" << px(x) << "\" y=\"" << h - pad + 14 << "\">" << x
                << "</text>\n";
    for (int s = doc.s_min; s <= doc.s_max; ++s)
        if (s % 4 == 0)
            out << "<text x=\"" << pad - 10 << "\" y=\"" << py(s) + 3 << "\">" << s
                << "</text>\n";
    out << "</g>\n";
    out << "<g stroke=\"#555\" stroke-width=\"1\">\n";
    for (const ChartLine& l : doc.lines)
        out << "<line x1=\"" << px(l.x0) << "\" y1=\"" << py(l.s0) << "\" x2=\"" << px(l.x1)
            << "\" y2=\"" << py(l.s1) << "\"/>\n";
    out << "</g>\n";
    out << "<g stroke=\"#c00\" stroke-width=\"1\">\n";
    for (const ChartArrow& a : doc.arrows) {
        double x1 = px(a.x0 - 1), y1 = py(a.s0 + a.r);
        out << "<line x1=\"" << px(a.x0) << "\" y1=\"" << py(a.s0) << "\" x2=\"" << x1
            << "\" y2=\"" << y1 << "\"/>\n";
        out << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"1.5\" fill=\"#c00\"/>\n";
    }
    out << "</g>\n";
    out << "<g fill=\"#000\">\n";
    for (const ChartDot& d : doc.dots)
        for (int i = 0; i < d.count; ++i) {
            double off = (i - (d.count - 1) / 2.0) * (2 * rdot + 1);
            out << "<circle cx=\"" << px(d.x) + off << "\" cy=\"" << py(d.s) << "\" r=\""
                << rdot << "\"/>\n";
        }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace sseq
