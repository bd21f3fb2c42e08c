// Standalone verification binary: runs the twelve numbered end-to-end
// criteria and prints one PASS/FAIL line for each.  Exits nonzero when any
// criterion fails.

#include "sseq/acceptance.hpp"

#include <cstdio>

int main() {
    auto results = sseq::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%2d/12] %s %s — %s (%.1fs)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    if (results.size() != 12) {
        std::printf("expected 12 criteria, ran %zu\n", results.size());
        return 1;
    }
    return all ? 0 : 1;
}
