#pragma once

// Independent Ext oracle: a minimal free resolution over the dual algebra.
// The dual of the Hopf algebra A is the finite-dimensional associative
// algebra B with multiplication transposed from the coproduct; a comodule M
// dualizes to a left B-module on the same graded basis.  The generator
// degrees of a minimal free resolution of M^ over B count dim Ext^{s,t},
// with no cobar machinery involved.

#include "sseq/comodule.hpp"
#include "sseq/hopf.hpp"

#include <map>
#include <vector>

namespace sseq {

struct MinresTable {
    int s_max = 0, t_max = 0;
    std::vector<std::map<int, int>> gens;  // per s: internal degree -> count

    int dim(int s, int t) const {
        if (s < 0 || s > s_max || t > t_max) return 0;
        auto it = gens[s].find(t);
        return it == gens[s].end() ? 0 : it->second;
    }
};

MinresTable minimal_resolution_ext(const HopfAlgebra& A, const Comodule& M, int s_max,
                                   int t_max);

}  // namespace sseq
