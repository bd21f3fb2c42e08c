#pragma once

// Cohomology of the order-24 binary tetrahedral group (quaternions extended
// by a cyclic 3) with coefficients in graded GF(4)-modules, computed from a
// minimal projective resolution over the group algebra.  The 2-Sylow
// subgroup is normal, so the radical of the group algebra is generated by
// the augmentation ideal of the quaternion part, projective indecomposables
// are parametrised by characters of the cyclic complement, and minimal
// resolutions stay small (ranks <= 3) out to any practical cohomological
// degree.  A normalized bar complex (low degrees) and restriction to the
// 2-Sylow subgroup followed by invariants of the 3-cycle serve as
// independent cross-checks.

#include "sseq/gf.hpp"

#include <map>
#include <string>
#include <vector>

namespace sseq {

struct GroupTable {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> mul;  // mul[g][h] = index of g*h
    int e = -1;                         // identity
    int om = -1, gi = -1, gj = -1, gk = -1, m1 = -1;  // omega, i, j, k, -1
    std::vector<int> q8, c3, c6;        // subgroup element index lists

    int inv(int g) const;
    int pow(int g, int k) const;  // k >= 0
    // associativity, identity, inverses, and the defining relations
    // i^4 = 1, i^2 = j^2, i j i^-1 = j^-1, w i w^2 = j, w j w^2 = k, w^3 = 1
    std::vector<std::string> validate() const;
};

// the full order-24 group; q8/c3/c6 markers filled in
GroupTable build_g24();
// the subgroup on the listed element indices, relabelled 0..k-1; generator
// slots are filled when the corresponding elements belong to the subgroup
GroupTable subgroup_table(const GroupTable& G, const std::vector<int>& elems);

// GF(4)-linear action of G on a finite-dimensional module
struct GModule {
    const GroupTable* G = nullptr;
    int dim = 0;
    std::vector<Matrix> act;  // one dim x dim matrix per group element

    std::vector<std::string> validate() const;  // identity + multiplicativity
};

GModule trivial_gmodule(const GroupTable& G);
// restriction along subgroup_table(G, elems)
GModule restrict_gmodule(const GModule& M, const GroupTable& sub,
                         const std::vector<int>& elems);

// graded pieces of the coefficients of the elliptic Lubin-Tate theory
// reduced modulo the maximal ideal: kind plain is the one-dimensional piece
// spanned by u^{-t/2}; kind a1 is the rank-two piece spanned by u^{-t/2} e0
// and u^{-(t-2)/2} e2, with the quaternion generators moving e2 over e0.
enum class MoravaKind { plain, a1 };
GModule morava_module(const GroupTable& g24, MoravaKind kind, int t);  // t even

// Minimal resolution of the trivial module over the group algebra.  P_s is a
// direct sum of rank(s) projective indecomposables, each of GF(4)-dimension
// |Sylow| and tagged with a character 0..2 of the complement; the GF(4)
// basis of P_s is (summand, Sylow element) in row-major order.  Cochains
// Hom over the group algebra into M are coordinatised by the values on the
// summand generators, each constrained to the matching eigenspace of the
// 3-cycle on M.
class MinimalResolution {
public:
    MinimalResolution(const GroupTable& G, std::vector<int> sylow, int omega,
                      int s_max);

    const GroupTable& group() const { return *G_; }
    const std::vector<int>& sylow() const { return sylow_; }
    int s_max() const { return s_max_; }
    int rank(int s) const { return static_cast<int>(chars_[static_cast<size_t>(s)].size()); }
    const std::vector<int>& chars(int s) const { return chars_[static_cast<size_t>(s)]; }
    int dim(int s) const { return rank(s) * static_cast<int>(sylow_.size()); }
    const Matrix& d(int s) const { return d_[static_cast<size_t>(s)]; }  // P_s -> P_{s-1}
    Matrix action(int s, int g) const;  // g on P_s
    int basis_index(int s, int summand, int g) const;  // g a Sylow element

    int cochain_dim(int s, const GModule& M) const;
    Matrix cochain_d(int s, const GModule& M) const;  // C^s -> C^{s+1}
    // full cochain as a dim(M) x dim(s) matrix, and back
    Matrix cochain_matrix(int s, const GModule& M, const Vec& coords) const;
    Vec cochain_coords(int s, const GModule& M, const Matrix& f) const;
    int cohomology_dim(int s, const GModule& M) const;
    std::vector<Vec> cohomology_basis(int s, const GModule& M) const;  // coords
    bool is_coboundary(int s, const GModule& M, const Vec& coords) const;
    bool is_cocycle(int s, const GModule& M, const Vec& coords) const;

    // chain maps U_s : P_{s+q} -> P_s (twisted by the complement character c)
    // lifting the functional f : P_q -> GF4(chi^c); cup product with [f] on
    // any H^s(G, M) is precomposition with U_s; indexed by s = 0..s_top
    std::vector<Matrix> chain_lift(int q, int c, const Vec& f, int s_top) const;
    // chain self-maps covering an automorphism of the Sylow group given as a
    // permutation of Sylow positions (conjugation by the 3-cycle)
    std::vector<Matrix> twisted_self_lift(const std::vector<int>& perm,
                                          int s_top) const;

private:
    const GroupTable* G_;
    std::vector<int> sylow_;
    int omega_;
    int s_max_;
    std::vector<std::vector<int>> chars_;
    std::vector<Matrix> d_;
    std::vector<int> syl_pos_;  // group element -> position in sylow_, or -1

    std::vector<Vec> eigenbasis(const Matrix& a, int m) const;
    friend int sylow_invariant_dim(const MinimalResolution&, const GroupTable&,
                                   const std::vector<int>&, const GModule&, int);
};

// dims of H^s(G, M) for s <= s_max via the normalized bar complex
std::vector<int> bar_cohomology_dims(const GModule& M, int s_max);
// bar cochains are indexed by tuples of non-identity elements (row-major,
// most significant first) times dim(M)
Vec bar_d(const GModule& M, int s, const Vec& cochain);
bool bar_is_coboundary(const GModule& M, int s, const Vec& cocycle);
// cup product for one-dimensional coefficient modules, the pairing being
// multiplication of the spanning vectors
Vec bar_cup(const GModule& Mx, int p, const Vec& x, const GModule& My, int q,
            const Vec& y);
// bar representative of a minimal-resolution 1-cocycle (one-dim coefficients)
Vec bar_rep_h1(const MinimalResolution& res, const GModule& M, const Vec& coords);

// H^s of the big group via the resolution of its 2-Sylow subgroup and
// invariants of the induced action of the 3-cycle (the index is odd, so
// restriction is injective onto the invariants)
int sylow_invariant_dim(const MinimalResolution& sylow_res, const GroupTable& bigG,
                        const std::vector<int>& sylow_elems, const GModule& bigM,
                        int s);

// expected coefficient-ring dimensions: monomials v2^m z^p a^i (i <= 3) and
// v2^m z^p b^j (j = 1, 2) with v2 at (0,6), z at (4,0), a at (1,2), b (1,4)
int henn_ring_dim(int s, int t);
// expected rank-two-module dimensions: v2^m z^p b^j (j <= 2) on generators
// at (0,0) and (1,6)
int hfpss_e2_expected_dim(int s, int t);

// computed cohomology of the rank-two coefficients; the coefficient module
// only depends on the internal degree mod 6
class HfpssE2 {
public:
    explicit HfpssE2(int s_max = 12);
    int dim(int s, int t) const;  // 0 for odd t
    int s_max() const { return s_max_; }

private:
    int s_max_;
    std::map<std::pair<int, int>, int> dims_;  // keyed (s, t mod 6)
};

struct RingReport {
    bool ab_zero = false;        // a.b vanishes (resolution and bar cochains)
    Scalar b3_unit;              // b^3 = unit * v2 a^3; zero when failed
    bool z_periodicity = false;  // cup with z iso for 1 <= s <= checked bound
    Scalar delta_unit;           // connecting map sends the top generator to
                                 // unit * a times the bottom one
    std::vector<std::string> errors;
};
RingReport verify_ring_relations();

}  // namespace sseq
