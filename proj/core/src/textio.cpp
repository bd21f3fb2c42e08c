#include "sseq/textio.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sseq {

std::string& data_dir() {
    static std::string dir = [] {
        const char* env = std::getenv("SSEQ_DATA_DIR");
        return env ? std::string(env) : std::string("data");
    }();
    return dir;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

HopfAlgebra load_hopf(const std::string& path) {
    std::string name;
    char kind = 0;
    int n = -1;
    for (const std::string& line : read_lines(path)) {
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "hopf") {
            in >> name;
        } else if (key == "builtin") {
            std::string k;
            in >> k >> n;
            kind = k.empty() ? 0 : k[0];
        } else {
            throw std::runtime_error(path + ": unknown declaration " + key);
        }
    }
    if (name.empty() || kind == 0) throw std::runtime_error(path + ": incomplete hopf fixture");
    if (kind == 'E') {
        if (n != 1) throw std::runtime_error(path + ": only E 1 is supported");
        return HopfAlgebra(name, {0, 2});
    }
    HopfAlgebra a = HopfAlgebra::dual_steenrod_quotient(n, kind);
    std::vector<int> bounds;
    for (int g = 0; g < a.num_generators(); ++g) bounds.push_back(a.generator_bound(g));
    return HopfAlgebra(name, bounds);  // rebuilt under the fixture's name
}

Comodule load_comodule(const std::string& path) {
    Comodule m;
    std::vector<std::pair<std::string, std::string>> coaction_lines;
    for (const std::string& line : read_lines(path)) {
        std::istringstream in(line);
        std::string key;
        in >> key;
        if (key == "comodule") {
            in >> m.name;
        } else if (key == "hopf") {
            std::string a;
            in >> a;
            m.A = &builtin_hopf(a);
        } else if (key == "basis") {
            std::string label;
            int deg;
            in >> label >> deg;
            m.labels.push_back(label);
            m.degrees.push_back(deg);
        } else if (key == "coaction") {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error(path + ": malformed coaction line");
            std::string label = trim(line.substr(8, colon - 8));
            coaction_lines.emplace_back(label, trim(line.substr(colon + 1)));
        } else {
            throw std::runtime_error(path + ": unknown declaration " + key);
        }
    }
    if (!m.A) throw std::runtime_error(path + ": missing hopf declaration");
    uint32_t D = m.dim();
    m.coaction.assign(D, {});
    std::vector<bool> seen(D, false);
    for (const auto& [label, rhs] : coaction_lines) {
        int idx = m.find_label(label);
        if (idx < 0) throw std::runtime_error(path + ": coaction for unknown basis " + label);
        SpVec c;
        for (const std::string& raw_term : split(rhs, '+')) {
            std::string term = trim(raw_term);
            auto bar = term.find('|');
            if (bar == std::string::npos)
                throw std::runtime_error(path + ": term without '|': " + term);
            std::string expr = trim(term.substr(0, bar));
            std::string target = trim(term.substr(bar + 1));
            int t = m.find_label(target);
            if (t < 0) throw std::runtime_error(path + ": unknown target label " + target);
            for (uint32_t a : m.A->parse(expr))
                c = sp_add(c, {a * D + static_cast<uint32_t>(t)});
        }
        m.coaction[idx] = std::move(c);
        seen[idx] = true;
    }
    for (uint32_t i = 0; i < D; ++i)
        if (!seen[i])
            throw std::runtime_error(path + ": missing coaction for " + m.labels[i]);
    return m;
}

Comodule build_A1_comodule(int i, int j) {
    if ((i | j) > 1 || i < 0 || j < 0) throw std::invalid_argument("version bits must be 0 or 1");
    std::string name = "a1_" + std::to_string(i) + std::to_string(j);
    return load_comodule(data_dir() + "/comodules/" + name + ".txt");
}

Comodule build_named_comodule(const std::string& name, int sigma) {
    if (name == "H(V0)") return load_comodule(data_dir() + "/comodules/hv0.txt");
    if (name == "H(Ceta)") return load_comodule(data_dir() + "/comodules/hceta.txt");
    if (name == "H(Y)") return load_comodule(data_dir() + "/comodules/hy.txt");
    if (name == "V3") return load_comodule(data_dir() + "/comodules/v3.txt");
    if (name == "V4") return load_comodule(data_dir() + "/comodules/v4.txt");
    if (name == "R_sigma") return R_sigma(sigma);
    if (name == "Rprime_sigma") return Rprime_sigma(sigma);
    if (name == "S_sigma") return S_sigma(sigma);
    if (name.rfind("a1_", 0) == 0 && name.size() == 5)
        return build_A1_comodule(name[3] - '0', name[4] - '0');
    throw std::invalid_argument("unknown comodule name: " + name);
}

}  // namespace sseq
