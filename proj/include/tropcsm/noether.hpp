#ifndef TROPCSM_NOETHER_HPP
#define TROPCSM_NOETHER_HPP

#include <array>
#include <vector>

#include "tropcsm/linalg.hpp"

namespace tropcsm {

struct Facet3 {
    IVec normal;            // primitive outward normal
    Int support;            // normal . x = support on the facet
    std::vector<int> cycle; // vertex indices in convex position around the facet
};

struct Edge3 {
    int a = 0, b = 0; // vertex indices, a < b
    Int length;       // lattice length = gcd of coordinate differences
};

struct LatticePolytope3 {
    IMat vertices; // hull vertices only
    std::vector<Facet3> facets;
    std::vector<Edge3> edges;
};

// Exact convex hull of full-dimensional integer point sets in R^3.
LatticePolytope3 hull(const IMat& points);

// 3! times the Euclidean volume; an integer.
Int normalized_volume(const LatticePolytope3& p);

// 2! times the Euclidean area measured in the facet plane's saturated lattice.
Int facet_area(const LatticePolytope3& p, int facet);
Int total_facet_area(const LatticePolytope3& p);

Int lattice_perimeter(const LatticePolytope3& p);

// The integer with -tau * n_F = sum over facets F' of L(F meet F') * n_F';
// shared edges contribute their lattice length, other contacts contribute 0.
// Throws NonProportional when the right-hand side is not parallel to n_F.
Int tau(const LatticePolytope3& p, int facet);

// Lattice points strictly inside the polytope.
long interior_points(const LatticePolytope3& p);        // OpenMP over slices
long interior_points_serial(const LatticePolytope3& p); // reference implementation

struct NoetherReport {
    long interior = 0;
    Int volume, area, perimeter;
    std::vector<Int> tau_list;
    Int lhs, rhs;
    bool holds = false;
};

// 12(1 + #interior) = 2 Vol - 3 Area + 3 Peri + sum tau_i, evaluated exactly.
NoetherReport noether_check(const LatticePolytope3& p);

struct Triangulation {
    IMat points;
    std::vector<std::array<int, 4>> tets;
};

// Staircase (Freudenthal-type) unimodular triangulations.
Triangulation staircase_cube(int d);    // [0,d]^3
Triangulation staircase_simplex(int d); // conv{0, d e1, d e2, d e3}

struct CensusReport {
    long tets = 0;            // dual vertices of sedentarity 0
    long facet_triangles = 0; // sedentarity 1
    long edge_segments = 0;   // sedentarity 2
    std::vector<Int> tau_list;
    Int lhs, rhs;
    bool holds = false;
};

// Vertex census of the dual compactified hypersurface:
// 2#tets - 3#facet-triangles + 3#edge-segments + sum tau = 12(1 + #interior).
// Validates that the triangulation is unimodular and covers the polytope.
CensusReport dual_census_check(const LatticePolytope3& p, const Triangulation& t);

} // namespace tropcsm

#endif
