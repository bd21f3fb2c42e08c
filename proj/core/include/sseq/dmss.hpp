#pragma once

// The Koszul-complex machinery: exterior comodule algebras E over a Hopf
// algebra, their polynomial Koszul duals P, the exact complexes (E (x) P, d),
// and the double complex A^{(x)s} (x) E (x) P_sigma (x) M whose filtration
// spectral sequence has E_1 = Ext over the smaller algebra.  Chain-level
// products in the double complex settle the multiplicative questions that the
// page-level bookkeeping cannot see.

#include "sseq/cobar.hpp"
#include "sseq/comodule.hpp"
#include "sseq/gf.hpp"
#include "sseq/hopf.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

// Exterior algebra E = Lambda(x_1, ..., x_k) of A-comodule algebras whose
// generators coact through k (+) V only ("almost graded"): psi(x_j) is a sum
// of terms a (x) 1 and a (x) x_l.  Basis elements are generator subsets,
// indexed by bitmask (bit j-1 = x_j present).
struct ExteriorAlgebra {
    std::string name;
    const HopfAlgebra* A = nullptr;
    std::vector<std::string> gen_names;
    std::vector<int> gen_degrees;
    // coaction of x_j, packed a * (k + 1) + slot with slot 0 = unit, slot l = x_l
    std::vector<SpVec> gen_coact;

    uint32_t gens() const { return static_cast<uint32_t>(gen_names.size()); }
    uint32_t dim() const { return 1u << gens(); }
    int mask_degree(uint32_t mask) const;
    std::string mask_label(uint32_t mask) const;
    Comodule comodule() const;  // multiplicative extension of the coaction
    // comodule axioms plus the comodule-algebra property of the extension
    std::vector<std::string> validate() const;
};

// E(x_1, ..., x_{n+1}) over the kind-A dual Steenrod quotient of height n,
// with x_i = z_i^{2^(n+1-i)}; the F variant drops x_1 over the kind-B quotient.
ExteriorAlgebra exterior_E(int n);
ExteriorAlgebra exterior_F(int n);

// The polynomial dual P = F2[y_1, ..., y_k] of E, one generator y_j per x_j
// in the same internal degree, coacting through the x -> y image of the
// generator coactions.  piece(sigma) is the polynomial-degree-sigma comodule;
// the Koszul differential d(x_S (x) z (x) m) = sum_{j in S} x_{S\j} (x) y_j z (x) m
// raises sigma by one and commutes with the coaction.
class KoszulData {
public:
    KoszulData(ExteriorAlgebra E, int last_bound = -1);

    const ExteriorAlgebra& exterior() const { return E_; }
    const Comodule& exterior_comodule() const { return ecom_; }
    const HopfAlgebra& algebra() const { return *E_.A; }
    const std::vector<std::string>& dual_names() const { return y_names_; }

    const Comodule& piece(int sigma);
    const std::vector<std::vector<int>>& exponents(int sigma);
    std::optional<uint32_t> mono_index(int sigma, const std::vector<int>& e);

    // Koszul differential on E (x) piece(sigma) (x) M, basis packed
    // (mask * dimP + p) * dimM + m; M must live over the same algebra
    SpVec koszul_d(const Comodule& M, int sigma, const SpVec& v);

    // exactness of k -> E -> E (x) P_1 -> ... in every internal degree <= bound;
    // empty report = exact
    std::vector<std::string> check_exactness(int t_bound);

private:
    ExteriorAlgebra E_;
    Comodule ecom_;
    std::vector<std::string> y_names_;
    std::vector<int> y_degs_;
    std::vector<SpVec> y_coact_;
    int last_bound_;
    std::map<int, Comodule> pieces_;
    std::map<int, std::vector<std::vector<int>>> exps_;
};

// multiplication map piece_a (x) piece_b -> piece_ab of a polynomial comodule
// algebra, as a map from the tensor comodule (monomials past an exponent
// truncation go to zero)
ComoduleMap poly_mul_map(KoszulData& K, int sigma_a, int sigma_b);

// A homogeneous element of the double complex A^{(x)s} (x) E (x) P_sigma (x) M:
// each term is s positive-degree algebra letters followed by an index into the
// column comodule E (x) P_sigma (x) M.  Terms are kept sorted and reduced mod 2.
struct DcElement {
    int s = 0, sigma = 0, t = 0;
    std::vector<std::vector<uint32_t>> terms;

    bool is_zero() const { return terms.empty(); }
};

class DoubleComplex {
public:
    // M is copied; pass trivial_comodule(A) for the coefficient-free complex
    DoubleComplex(KoszulData& K, Comodule M, int t_max = 64);

    KoszulData& koszul() { return *K_; }
    const Comodule& coefficients() const { return M_; }
    const Comodule& column(int sigma);     // E (x) P_sigma (x) M
    CobarComplex& cobar(int sigma);        // vertical pages: Ext_A of the column

    uint32_t column_index(int sigma, uint32_t mask, const std::vector<int>& yexp,
                          uint32_t m);
    DcElement make(int s, int sigma, std::vector<std::vector<uint32_t>> terms);
    bool coeff(const DcElement& x, const std::vector<uint32_t>& term);

    DcElement d_v(const DcElement& x);     // reduced cobar differential, s + 1
    DcElement d_h(const DcElement& x);     // Koszul differential, sigma + 1

    Vec to_vec(const DcElement& x);        // in the cobar basis of its column
    DcElement from_vec(int s, int sigma, int t, const Vec& v);

    // canonical solution of d_v(P) = rhs with rhs.s == 1 (free variables zero)
    std::optional<DcElement> solve_dv(const DcElement& rhs);
    // kernel of d_v on the s = 0 part: the coaction-primitive elements
    std::vector<DcElement> dv_kernel(int sigma, int t);

private:
    KoszulData* K_;
    Comodule M_;
    int t_max_;
    std::map<int, Comodule> columns_;
    std::map<int, std::unique_ptr<CobarComplex>> cobars_;
};

// product of double-complex elements; x must come from the coefficient-free
// complex over the same Koszul data, y from dcy.  For q = y.s letters the
// coefficient of x is coacted q times and multiplied into y's letters.
DcElement dc_product(DoubleComplex& dcx, const DcElement& x, DoubleComplex& dcy,
                     const DcElement& y);

// push along a map of pairs (A, E) -> (B, F): algebra letters through q,
// exterior and polynomial generators matched by name (missing names -> 0).
// dst's coefficients must be the corestriction of src's (same labels).
DcElement compare_push(DoubleComplex& src, DoubleComplex& dst, const HopfQuotient& q,
                       const DcElement& x);

// first-page differential on a cohomological-degree-zero class: v is a
// primitive vector of piece(sigma) (x) M over the quotient algebra; the lift
// is the unique coaction-primitive of the column with unit exterior component
// v, and the value is the unit exterior component of its Koszul image.
struct D1Result {
    SpVec lift;   // in the column at sigma, packed as in column_index
    SpVec value;  // in piece(sigma + 1) (x) M, packed p * dimM + m
};
D1Result dmss_d1(DoubleComplex& dc, int sigma, int t, const SpVec& v);

// first-page differential in any cohomological degree: apply the Koszul
// differential to a vertical-Ext representative and read the class at
// sigma + 1; x must be an Ext class of dc.cobar(sigma)
ExtClass dmss_d1_ext(DoubleComplex& dc, int sigma, const ExtClass& x);

// E_1-term via change of rings: Ext over q.dst of piece(sigma) (x) M
// corestricted along q; q.src must be the algebra of K
class DmssE1 {
public:
    DmssE1(KoszulData& K, const HopfQuotient& q, Comodule M, int t_max = 64);
    CobarComplex& complex(int sigma);
    int dim(int s, int t, int sigma);

private:
    KoszulData* K_;
    const HopfQuotient* q_;
    Comodule M_;
    int t_max_;
    std::map<int, std::unique_ptr<CobarComplex>> complexes_;
};

// Homology of the rank-eight first page of the eight-cell-module spectral
// sequence in its polynomial model F2[y1, y2, y3]: the differential is
// propagated from the generator values by the Leibniz rule over the subring
// F2[y1, y2^2, y3^4].  Monomials are (a, b, c) = y1^a y2^b y3^c with
// filtration a + b + c and internal degree 4a + 6b + 7c.
class PolyE2 {
public:
    PolyE2(int sigma_max, int t_max);

    static std::vector<std::array<int, 3>> d1_monomial(const std::array<int, 3>& m);
    static std::vector<std::array<int, 3>> d1(const std::vector<std::array<int, 3>>& p);

    int e1_dim(int sigma, int t) const;
    int dim(int sigma, int t) const;
    bool is_cycle(const std::vector<std::array<int, 3>>& p) const;
    bool is_boundary(const std::vector<std::array<int, 3>>& p) const;
    // whether two cycles represent the same homology class
    bool same_class(const std::vector<std::array<int, 3>>& p,
                    const std::vector<std::array<int, 3>>& q) const;

private:
    struct Slot {
        std::vector<std::array<int, 3>> mons;
        std::map<std::array<int, 3>, uint32_t> index;
        Matrix d_in;    // from (sigma - 1, t)
        std::size_t rank_in = 0, rank_out = 0;
    };
    const Slot* slot(int sigma, int t) const;
    int sigma_max_, t_max_;
    std::map<std::pair<int, int>, Slot> slots_;
};

// the coefficient distinguishing the four eight-cell comodule versions: form
// the two section-level representatives over the kind-B quotient, multiply,
// solve d_v(P) = MN and read the y2^7 (x) a0 coefficient of d_h(P)
uint32_t exotic_product_lambda(int i, int j);

}  // namespace sseq
