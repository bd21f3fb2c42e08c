#pragma once

// The shipped verification suite: twelve numbered end-to-end checks, each
// recomputing one headline table or relation family from scratch and
// comparing it against its frozen expected form.  Used by the `verify` CLI
// subcommand and by the standalone acceptance test binary.

#include <string>
#include <vector>

namespace sseq {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary of what held
    double seconds = 0.0;
};

// run the numbered criteria (all twelve when `only` is empty); results come
// back in ascending id order
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

}  // namespace sseq
