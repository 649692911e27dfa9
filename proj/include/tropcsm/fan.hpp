#ifndef TROPCSM_FAN_HPP
#define TROPCSM_FAN_HPP

#include <optional>
#include <vector>

#include "tropcsm/cone.hpp"

namespace tropcsm {

struct WCone {
    Cone cone;
    Int weight;
};

// Weighted fan stored non-redundantly: maximal cones with weights.
struct WeightedFan {
    int ambient_dim = 0;
    std::vector<WCone> cones;

    bool empty() const { return cones.empty(); }
    // Common dimension of the cones; -1 for the empty fan.
    int dim() const;
    bool pure() const;
};

// Aggregates weights of equal cones (canonical comparison), drops zeros,
// orders cones deterministically.
WeightedFan make_fan(int ambient_dim, std::vector<WCone> cones);

struct BalanceWitness {
    Cone tau;
    IVec residual;
};

// Checks the balancing condition around every codimension-one face.
bool is_balanced(const WeightedFan& f, BalanceWitness* witness = nullptr);

// Lattice point of sigma mapping to the primitive generator of the rank-one
// quotient N_sigma / N_tau, oriented away from tau.
IVec primitive_normal_vector(const Cone& sigma, const Cone& tau);

// Star of tau: cones sigma containing tau as a face, with span(tau) added to
// the lineality. Throws ConeNotInFan when tau is not a face of any cone.
WeightedFan star_fan(const WeightedFan& f, const Cone& tau);

// Fan displacement rule with a deterministic sequence of generic rational
// displacement vectors; throws GenericityFailure after the retry budget.
WeightedFan stable_intersection(const WeightedFan& a, const WeightedFan& b);

// Normalized p-fold wedge rows of a generator matrix; they span Lambda^p of
// the row span of the generators.
std::vector<IVec> wedge_rows_of(const IMat& gens, int ambient_dim, int p);

// Rank of the span of all p-fold wedges of each cone's generator set.
int fp_dimension(const WeightedFan& f, int p);        // OpenMP over cones
int fp_dimension_serial(const WeightedFan& f, int p); // reference implementation

Int degree0(const WeightedFan& z);

// Image fan under an integer matrix with determinant +-1 (weights unchanged);
// throws NotUnimodular otherwise.
WeightedFan apply_unimodular(const WeightedFan& f, const IMat& u);

// Equality as weighted cycles: both fans are refined by every facet hyperplane
// of both and the weighted cone multisets compared.
bool cycles_equal(const WeightedFan& a, const WeightedFan& b);

// Polyhedral cell conv(vertices) + cone; a single vertex is an apex.
struct Cell {
    QMat vertices;
    Cone cone;
    Int weight;
};

struct PolyhedralCycle {
    int ambient_dim = 0;
    std::vector<Cell> cells;
};

int cell_dim(const Cell& c);

WeightedFan recession_cycle(const PolyhedralCycle& a);

} // namespace tropcsm

#endif
