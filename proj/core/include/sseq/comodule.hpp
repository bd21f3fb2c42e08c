#pragma once

// Left comodules over the truncated dual-Steenrod Hopf algebras, with the
// constructions the Davis-Mahowald machinery needs: suspension, tensor
// product, corestriction along a Hopf quotient, cotensor/primitives, the
// shearing map, sub/quotient short exact sequences, and the polynomial
// comodule algebras R and S.

#include "sseq/gf.hpp"
#include "sseq/hopf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sseq {

struct Comodule {
    std::string name;
    const HopfAlgebra* A = nullptr;
    std::vector<std::string> labels;
    std::vector<int> degrees;        // may be negative for suspensions
    std::vector<SpVec> coaction;     // per basis element, packed a*dim()+m

    uint32_t dim() const { return static_cast<uint32_t>(labels.size()); }
    std::vector<uint32_t> basis_in_degree(int d) const;
    int min_degree() const;
    int max_degree() const;
    int find_label(const std::string& l) const;  // -1 when absent
    SpVec coact(const SpVec& v) const;           // linear extension
    std::string str(const SpVec& v) const;
    std::vector<std::string> validate() const;   // degree, counit, coassociativity
};

// Map of comodules over the same algebra, given on basis elements.
struct ComoduleMap {
    std::vector<SpVec> image;  // per source basis index, vector in target basis
    SpVec apply(const SpVec& v) const;
};

std::vector<std::string> validate_map(const Comodule& src, const Comodule& dst,
                                      const ComoduleMap& f);

struct SES {
    Comodule sub, mid, quot;
    ComoduleMap incl, proj;
    std::vector<std::string> validate() const;  // maps + per-degree exactness
};

// Sub/quotient pair spanned by a subset of the basis of mid (which must be a
// subcomodule; validate() reports otherwise).
SES sub_quotient_ses(const Comodule& mid, const std::vector<uint32_t>& sub_basis,
                     const std::string& sub_name, const std::string& quot_name);

Comodule trivial_comodule(const HopfAlgebra& A);         // k in degree 0
Comodule hopf_as_comodule(const HopfAlgebra& A);         // A over itself
Comodule suspend(const Comodule& M, int n);
Comodule tensor(const Comodule& M, const Comodule& N);   // diagonal coaction
Comodule direct_sum(const Comodule& M, const Comodule& N);

// Corestriction along a Hopf quotient q: A -> B; same basis, coaction (q x id).
Comodule corestrict(const Comodule& M, const HopfQuotient& q);

// Basis of {m : psi(m) = 1 (x) m} in one internal degree.
std::vector<Vec> primitive_basis(const Comodule& M, int degree);

// A cotensor_B k inside A, via the right B-coaction (id x q)Delta; the result
// is a left A-subcomodule of A (e.g. the exterior subalgebras of primitives).
Comodule cotensor_unit(const HopfQuotient& q);

// Primitives of the corestriction of M along q, with the residual A-coaction
// when it closes on the primitive subspace (reported otherwise).
Comodule cotensor_primitives(const HopfQuotient& q, const Comodule& M,
                             std::vector<std::string>* report = nullptr);

// Degreewise linear map on A (x) M: a (x) m |-> sum a*chi(m_(-1)) (x) m_(0);
// the inverse variant omits the antipode.  Restricting to the cotensor
// subspace gives the shearing isomorphism.
SpVec shear(const Comodule& M, const SpVec& v, bool inverse);  // v packed a*dim+m

// Polynomial comodule algebra on generators with A-linear coaction; returns
// the polynomial-degree-sigma piece.  gen_coact entries are packed a*n+g.
// last_bound >= 0 truncates the exponent of the last generator (monomials
// beyond the bound are zero); the truncation must be coaction-stable.
Comodule polynomial_comodule(const HopfAlgebra& A, const std::vector<std::string>& names,
                             const std::vector<int>& degs,
                             const std::vector<SpVec>& gen_coact, int sigma,
                             int last_bound = -1, const std::string& name = "");

// Builtin Hopf algebras by fixture name: A0star, A1star, A2star, B2star, E1star.
const HopfAlgebra& builtin_hopf(const std::string& name);

// y1,y2,y3 of degrees 4,6,7 with the standard coaction over A2star (or its
// corestriction over A1star); y2,y3 over B2star for S.
Comodule R_sigma(int sigma);                       // over A2star
Comodule R_sigma_over(const HopfAlgebra& A, int sigma);
Comodule Rprime_sigma(int sigma);                  // over A1star, y3-exponent <= 3
Comodule S_sigma(int sigma);                       // over B2star

}  // namespace sseq
