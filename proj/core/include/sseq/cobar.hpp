#pragma once

// Ext over a finite graded Hopf algebra via the reduced (normalized) cobar
// complex, computed bidegree by bidegree with memoization.  Canonical
// representatives make named classes reproducible across runs.

#include "sseq/comodule.hpp"
#include "sseq/gf.hpp"
#include "sseq/hopf.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

struct ExtClass {
    int s = 0, t = 0;
    Vec rep;  // cocycle in the cobar basis at (s,t)
    std::string name;
};

class CobarComplex {
public:
    // the coefficient comodule is copied and owned
    CobarComplex(const HopfAlgebra& A, Comodule M, int t_max = 64);

    const HopfAlgebra& algebra() const { return *A_; }
    const Comodule& coefficients() const { return M_; }

    // ordered basis of Abar^{(x) s} (x) M in internal degree t: each word is
    // s positive-degree algebra indices followed by a comodule index,
    // enumerated lexicographically
    const std::vector<std::vector<uint32_t>>& basis(int s, int t);
    uint32_t basis_index(int s, int t, const std::vector<uint32_t>& word);
    // differential (s,t) -> (s+1,t); rows are indexed by basis(s+1,t)
    const Matrix& differential(int s, int t);
    Vec d_apply(int s, int t, const Vec& v);

    int ext_dimension(int s, int t);
    // canonical cocycles completing the boundaries to the cocycles; the k-th
    // class of the bidegree is ext_basis(s,t)[k]
    const std::vector<Vec>& ext_basis(int s, int t);
    ExtClass ext_class(int s, int t, uint32_t k, std::string name = "");
    // coordinates of a cocycle modulo boundaries; nullopt if v is no cocycle
    std::optional<Vec> ext_coords(int s, int t, const Vec& v);
    bool is_boundary(int s, int t, const Vec& v);

    // [a_1|...|a_p] * [b_1|...|b_q|m] by concatenation; x must live over the
    // trivial coefficient comodule of the same algebra
    ExtClass product(CobarComplex& xk, const ExtClass& x, const ExtClass& y);

    int t_max() const { return t_max_; }

private:
    struct Bidegree {
        bool has_basis = false;
        std::vector<std::vector<uint32_t>> basis;
        std::map<std::vector<uint32_t>, uint32_t> index;
        bool has_d = false;
        Matrix d;
        bool has_ext = false;
        std::vector<Vec> ext;          // canonical representatives
        Matrix coord_solver;           // [boundaries | reps] for ext_coords
        std::size_t boundary_rank = 0;
    };
    Bidegree& bd(int s, int t);
    void ensure_basis(Bidegree& b, int s, int t);
    void ensure_d(int s, int t);
    void ensure_ext(int s, int t);

    const HopfAlgebra* A_;
    Comodule M_;
    int t_max_;
    std::vector<uint32_t> abar_;  // positive-degree algebra indices
    std::map<std::pair<int, int>, Bidegree> memo_;
    std::recursive_mutex mu_;
};

// cup product along a pairing mu: M (x) N -> L of comodules over one algebra
// (mu indexed on the tensor comodule, m * dimN + n).  x lives in cx over M,
// y in cy over N; the result lives in cz over L.  The coefficient of x is
// coacted y.s times, the extracted letters multiply into y's letters in
// order, and the residual coefficient is paired with y's coefficient.
ExtClass pairing_product(CobarComplex& cx, CobarComplex& cy, CobarComplex& cz,
                         const ComoduleMap& mu, const ExtClass& x, const ExtClass& y);

// pushforward of an ext class along a comodule map (same algebra both sides)
ExtClass ext_map(const ComoduleMap& f, CobarComplex& src, CobarComplex& dst,
                 const ExtClass& x);

// connecting homomorphism of the long exact sequence of a validated SES,
// computed by the cobar zig-zag; x lives on the quotient
ExtClass connecting_hom(const SES& ses, CobarComplex& csub, CobarComplex& cmid,
                        CobarComplex& cquot, const ExtClass& x);

struct MasseyResult {
    bool defined = false;
    std::string reason;            // set when not defined
    ExtClass value;                // one representative u*z + x*v
    std::vector<Vec> indeterminacy;  // ext-coordinate vectors at the target
};

// <x, y, z> with x, y over (A, k) and z over (A, M)
MasseyResult massey_triple(CobarComplex& ck, CobarComplex& cm, const ExtClass& x,
                           const ExtClass& y, const ExtClass& z);

}  // namespace sseq
