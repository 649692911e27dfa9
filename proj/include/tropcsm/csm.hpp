#ifndef TROPCSM_CSM_HPP
#define TROPCSM_CSM_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tropcsm/bergman.hpp"

namespace tropcsm {

// Weight of the chain cone: (-1)^{d-k} * product of beta invariants of the
// chain minors M|F_{i+1}/F_i, with F_0 = empty and F_{k+1} = E.
Int csm_chain_weight(const Matroid& m, const std::vector<Subset>& chain);

struct CsmConeReport {
    std::vector<Subset> chain;
    Int weight; // direct beta-invariant formula
};

struct CsmCycle {
    Matroid matroid;
    int k = 0;
    WeightedFan fan;                  // nonzero-weight cones only
    std::vector<CsmConeReport> cones; // every chain, zero weights included
};

// k-dimensional CSM cycle; empty fan when the matroid has a loop.
CsmCycle csm_cycle(const Matroid& m, int k);

// All graded pieces, k = 0 .. rank-1.
std::vector<CsmCycle> csm_total(const Matroid& m);

// Alternating sum over the wedge-span dimensions:
// sum_i (-1)^i dim F_i(Sigma) lambda^{d-i}.
Polynomial psi_polynomial(const WeightedFan& f);

// Star of the chain cone inside the Bergman fan, assembled directly from the
// maximal chains containing it (chain rays become lineality). The cones are
// generator-level data for psi_polynomial, not normalized via make_cone.
WeightedFan star_of_chain(const BergmanFan& bf, const std::vector<Subset>& chain);

struct PsiWeight {
    Int weight;       // psi / (lambda-1)^k evaluated at lambda = 1
    int exponent = 0; // observed multiplicity of the root lambda = 1
    Polynomial psi;
};

PsiWeight chain_weight_via_psi(const BergmanFan& bf, const std::vector<Subset>& chain);

// Batch form of chain_weight_via_psi. The generator set of a star cone is
// exactly the ray set of the maximal chain it comes from, independent of the
// chain whose star is taken, so the wedge rows are computed once per maximal
// chain and shared across all chain-weight queries. Thread-safe.
class PsiOracle {
public:
    explicit PsiOracle(BergmanFan bf);
    const BergmanFan& fan() const { return bf_; }
    PsiWeight chain_weight(const std::vector<Subset>& chain) const;

private:
    // echelon-reduced wedge rows of maximal chain mc, all degrees p = 1..d;
    // entries are small (p x p minors of 0/+-1 ray matrices), so machine
    // integers suffice and the reduction stays exact
    const std::vector<std::vector<std::vector<long long>>>& rows_for(size_t mc) const;

    BergmanFan bf_;
    int d_ = -1;
    mutable std::vector<std::unique_ptr<std::once_flag>> once_;
    mutable std::vector<std::vector<std::vector<std::vector<long long>>>> rows_;
};

// Oracle route for an explicit cone: locates the chain whose cone equals
// sigma, computes the psi-quotient weight and asserts it matches the direct
// formula. Throws ConeNotInFan when sigma is not a cone of the Bergman fan.
PsiWeight csm_weight_via_psi(const Matroid& m, const Cone& sigma);

struct GradeComparison {
    int grade = 0;
    bool equal = false;
};

struct ProductCheckReport {
    bool matroidal = false;
    std::string identified; // catalog name of the stable-intersection matroid
    std::vector<GradeComparison> grades;
    bool all_equal = false;
};

// Degree-by-degree check that csm(M) * csm(M') = csm(N) where N is the
// matroid of the stable intersection of the two Bergman fans, identified
// against a catalog of small matroids. Throws NotMatroidalIntersection when
// the intersection matches no catalog entry.
ProductCheckReport product_check(const Matroid& m, const Matroid& mp);

} // namespace tropcsm

#endif
