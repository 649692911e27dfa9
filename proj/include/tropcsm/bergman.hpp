#ifndef TROPCSM_BERGMAN_HPP
#define TROPCSM_BERGMAN_HPP

#include <cstdint>
#include <vector>

#include "tropcsm/fan.hpp"
#include "tropcsm/matroid.hpp"

namespace tropcsm {

// Coordinates on R^E / R*1 via the drop-coordinate-0 chart:
// (x_0,...,x_{n-1}) maps to (x_1 - x_0, ..., x_{n-1} - x_0), so the section
// x -> (0, x) inverts the chart. Ray of a flat F = image of -e_F.
IVec flat_ray(int n, Subset f);

// Cone of an ascending chain of proper nonempty flats.
Cone chain_cone(int n, const std::vector<Subset>& chain);

// Strictly ascending chains of exactly k proper nonempty flats.
std::vector<std::vector<Subset>> flat_chains(const Matroid& m, int k);

// Bergman fan with the chain annotation kept alongside the cones:
// fan.cones[i] is the cone of max_chains[i], all weights 1.
struct BergmanFan {
    Matroid matroid;
    int ambient_dim = 0;
    std::vector<std::vector<Subset>> max_chains;
    WeightedFan fan;
};

// Empty fan iff the matroid has a loop; otherwise pure of dimension rank - 1.
BergmanFan bergman_fan(const Matroid& m);

// Circuit criterion on the lift (0, x): true iff every circuit attains its
// coordinate maximum at least twice (max matches the -cone(e_F) convention).
bool support_contains(const Matroid& m, const QVec& x);

struct ParallelMapReport {
    IMat matrix; // chart matrix of the gluing isomorphism
    Int det;     // +-1
    bool cones_forward_ok = false;   // rays of every max cone of B(P) land in the product support
    bool points_forward_ok = false;  // sampled interior lattice points land in the product support
    bool points_backward_ok = false; // sampled product-support points pull back into |B(P)|
    int points_per_cone = 0;
};

// Linear isomorphism identifying the Bergman fan of the parallel connection
// P(M1, M2) with the product of the two Bergman supports, with sampled
// verification in both directions.
ParallelMapReport parallel_connection_map(const Matroid& m1, int p1, const Matroid& m2, int p2,
                                          uint64_t seed = 0, int points_per_cone = 1000);

} // namespace tropcsm

#endif
