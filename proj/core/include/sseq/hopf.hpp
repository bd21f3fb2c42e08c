#pragma once

// Graded commutative Hopf algebras over GF(2), given by a truncated
// polynomial presentation F2[z1,...,zk]/(z_i^{b_i}) with |z_i| = 2^i - 1 and
// the diagonal Delta(z_k) = sum_{i+j=k} z_i (x) z_j^{2^i}.  This covers the
// finite quotients of the dual Steenrod algebra used everywhere downstream.
//
// Sparse GF(2) vectors are sorted index lists; addition is symmetric
// difference.  Tensor indices are packed as a*dim+b.

#include "sseq/gf.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

using SpVec = std::vector<uint32_t>;  // sorted, unique

SpVec sp_add(const SpVec& a, const SpVec& b);  // symmetric difference

class HopfAlgebra {
public:
    // bounds[i] is the exponent bound of z_{i+1} (z^bound = 0); bound 0 drops
    // the generator entirely.
    HopfAlgebra(std::string name, std::vector<int> bounds);

    // F2[z1,...,z_{n+1}] / (z1^{2^{n+1}}, z2^{2^n}, ..., z_{n+1}^2)  (kind A)
    // F2[z1,...,z_{n+1}] / (z1^{2^n}, z2^{2^n}, z3^{2^{n-1}}, ..., z_{n+1}^2)  (kind B)
    static HopfAlgebra dual_steenrod_quotient(int n, char kind);

    const std::string& name() const { return name_; }
    uint32_t dim() const { return static_cast<uint32_t>(basis_deg_.size()); }
    int degree(uint32_t i) const { return basis_deg_[i]; }
    int top_degree() const;
    const std::vector<uint8_t>& exponents(uint32_t i) const { return basis_exp_[i]; }
    std::string label(uint32_t i) const;
    uint32_t unit() const { return 0; }
    int num_generators() const { return static_cast<int>(bounds_.size()); }
    int generator_bound(int g) const { return bounds_[g]; }
    std::optional<uint32_t> generator_index(int g) const;  // z_{g+1} as basis elt

    // monomial product; nullopt when killed by the truncation
    std::optional<uint32_t> mono_mul(uint32_t a, uint32_t b) const;
    SpVec mul(const SpVec& a, const SpVec& b) const;
    SpVec pow(const SpVec& a, int n) const;

    // coproduct of a basis element, packed a*dim+b, coefficient 1
    const SpVec& coproduct(uint32_t i) const { return coproduct_[i]; }
    const SpVec& antipode(uint32_t i) const { return antipode_[i]; }
    SpVec antipode_vec(const SpVec& v) const;

    // xi_i := antipode(z_i), as a vector in the monomial basis
    const SpVec& xi(int g) const { return xi_[g]; }

    // parse a monomial expression: "1", "z1^2*z2", "xi2*xi1^3", ...
    SpVec parse(const std::string& expr) const;
    std::string str(const SpVec& v) const;

    // Hopf axioms; empty report = valid
    std::vector<std::string> validate() const;

private:
    void build();
    std::string name_;
    std::vector<int> bounds_;
    std::vector<int> gen_deg_;
    std::vector<std::vector<uint8_t>> basis_exp_;
    std::vector<int> basis_deg_;
    std::map<std::vector<uint8_t>, uint32_t> index_;
    std::vector<SpVec> coproduct_;
    std::vector<SpVec> antipode_;
    std::vector<SpVec> xi_;
};

// Quotient morphism of Hopf algebras matched by generator position: z_i maps
// to z_i when the target keeps it (with a smaller or equal bound), to 0
// otherwise.
struct HopfQuotient {
    const HopfAlgebra* src = nullptr;
    const HopfAlgebra* dst = nullptr;
    std::vector<std::optional<uint32_t>> image;  // per src basis index

    static HopfQuotient make(const HopfAlgebra& src, const HopfAlgebra& dst);
    SpVec apply(const SpVec& v) const;
    std::vector<std::string> validate() const;
};

}  // namespace sseq
