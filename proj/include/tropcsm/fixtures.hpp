#ifndef TROPCSM_FIXTURES_HPP
#define TROPCSM_FIXTURES_HPP

#include <random>

#include "tropcsm/fan.hpp"
#include "tropcsm/matroid.hpp"

namespace tropcsm {

// 2-dimensional tropical hypersurface dual to the pyramid over a unit square:
// rays (0,0,-1), (-1,0,0), (0,-1,0), (1,0,1), (0,1,1), with one 2-dimensional
// cone per edge of the pyramid (8 cones, all weights 1).
WeightedFan pyramid_hypersurface_fan();

// Its 1-skeleton (the five rays) with a constant weight on every ray.
WeightedFan pyramid_skeleton(const Int& weight);

// Graphic matroid of the complete graph K4.
Matroid graphic_k4();

// Random integer matrix of determinant +-1, built from elementary row
// operations on the identity.
IMat random_unimodular(int n, std::mt19937_64& rng, int ops = 12);

} // namespace tropcsm

#endif
