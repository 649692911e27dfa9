#include <doctest.h>

#include "tropcsm/noether.hpp"

using namespace tropcsm;

namespace {

IVec iv(std::vector<long> v) {
    IVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

LatticePolytope3 simplex(long d) {
    return hull({iv({0, 0, 0}), iv({d, 0, 0}), iv({0, d, 0}), iv({0, 0, d})});
}

LatticePolytope3 cube(long d) {
    IMat pts;
    for (long x : {0L, d})
        for (long y : {0L, d})
            for (long z : {0L, d}) pts.push_back(iv({x, y, z}));
    return hull(pts);
}

long binom3(long n) { return n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0; }

} // namespace

TEST_CASE("hull facet and edge structure") {
    LatticePolytope3 s = simplex(1);
    CHECK(s.vertices.size() == 4);
    CHECK(s.facets.size() == 4);
    CHECK(s.edges.size() == 6);
    LatticePolytope3 c = cube(1);
    CHECK(c.vertices.size() == 8);
    CHECK(c.facets.size() == 6);
    CHECK(c.edges.size() == 12);
    for (const auto& f : c.facets) CHECK(f.cycle.size() == 4);
    // interior and duplicate points do not create vertices
    IMat pts = {iv({0, 0, 0}), iv({2, 0, 0}), iv({0, 2, 0}), iv({0, 0, 2}),
                iv({0, 0, 0}), iv({1, 0, 0})};
    CHECK(hull(pts).vertices.size() == 4);
    CHECK_THROWS_AS(hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0})}), Error);
}

TEST_CASE("normalized volume") {
    CHECK(normalized_volume(simplex(1)) == 1);
    for (long d = 1; d <= 3; ++d) {
        CHECK(normalized_volume(cube(d)) == 6 * d * d * d);
        CHECK(normalized_volume(simplex(d)) == d * d * d);
    }
}

TEST_CASE("lattice areas and perimeter") {
    for (long d = 1; d <= 3; ++d) {
        LatticePolytope3 s = simplex(d);
        for (size_t i = 0; i < s.facets.size(); ++i) CHECK(facet_area(s, static_cast<int>(i)) == d * d);
        CHECK(total_facet_area(s) == 4 * d * d);
        CHECK(lattice_perimeter(s) == 6 * d);
        LatticePolytope3 c = cube(d);
        for (size_t i = 0; i < c.facets.size(); ++i)
            CHECK(facet_area(c, static_cast<int>(i)) == 2 * d * d);
        CHECK(total_facet_area(c) == 12 * d * d);
        CHECK(lattice_perimeter(c) == 12 * d);
    }
}

TEST_CASE("boundary contributions tau") {
    for (long d = 1; d <= 3; ++d) {
        LatticePolytope3 s = simplex(d);
        Int sum = 0;
        for (size_t i = 0; i < s.facets.size(); ++i) {
            Int t = tau(s, static_cast<int>(i));
            CHECK(t == d);
            sum += t;
        }
        CHECK(sum == 4 * d);
        LatticePolytope3 c = cube(d);
        for (size_t i = 0; i < c.facets.size(); ++i) CHECK(tau(c, static_cast<int>(i)) == 0);
    }
    // skewed simplex: the edge-normal sum around the base is not parallel to it
    LatticePolytope3 bad = hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 2})});
    bool threw = false;
    for (size_t i = 0; i < bad.facets.size() && !threw; ++i) {
        try {
            tau(bad, static_cast<int>(i));
        } catch (const Error& e) {
            threw = (e.code() == Err::NonProportional);
        }
    }
    CHECK(threw);
}

TEST_CASE("interior lattice points") {
    CHECK(interior_points(simplex(3)) == 0);
    CHECK(interior_points(simplex(4)) == 1);
    CHECK(interior_points(cube(2)) == 1);
    for (long d = 1; d <= 6; ++d) CHECK(interior_points(simplex(d)) == binom3(d - 1));
    for (long d = 1; d <= 4; ++d)
        CHECK(interior_points(cube(d)) == (d - 1) * (d - 1) * (d - 1));
    // serial reference agrees with the parallel kernel
    for (long d = 1; d <= 4; ++d) {
        CHECK(interior_points(simplex(d)) == interior_points_serial(simplex(d)));
        CHECK(interior_points(cube(d)) == interior_points_serial(cube(d)));
    }
}

TEST_CASE("Noether identity on simplices and cubes") {
    NoetherReport unit = noether_check(simplex(1));
    CHECK(unit.lhs == 12);
    CHECK(unit.rhs == 12);
    CHECK(unit.holds);
    NoetherReport s4 = noether_check(simplex(4));
    CHECK(s4.lhs == 24);
    CHECK(s4.rhs == 24);
    NoetherReport c2 = noether_check(cube(2));
    CHECK(c2.lhs == 24);
    CHECK(c2.rhs == 24);
    for (long d = 1; d <= 5; ++d) CHECK(noether_check(simplex(d)).holds);
    for (long d = 1; d <= 4; ++d) CHECK(noether_check(cube(d)).holds);
}

TEST_CASE("staircase triangulations") {
    for (int d = 1; d <= 3; ++d) {
        Triangulation tc = staircase_cube(d);
        CHECK(static_cast<long>(tc.tets.size()) == 6L * d * d * d);
        Triangulation ts = staircase_simplex(d);
        CHECK(static_cast<long>(ts.tets.size()) == static_cast<long>(d) * d * d);
    }
}

TEST_CASE("dual vertex census matches the polytope ledger") {
    for (long d = 1; d <= 3; ++d) {
        LatticePolytope3 s = simplex(d);
        CensusReport rs = dual_census_check(s, staircase_simplex(static_cast<int>(d)));
        CHECK(Int(rs.tets) == normalized_volume(s));
        CHECK(Int(rs.facet_triangles) == total_facet_area(s));
        CHECK(Int(rs.edge_segments) == lattice_perimeter(s));
        CHECK(rs.holds);
        CHECK(rs.lhs == noether_check(s).lhs);
        LatticePolytope3 c = cube(d);
        CensusReport rc = dual_census_check(c, staircase_cube(static_cast<int>(d)));
        CHECK(Int(rc.tets) == normalized_volume(c));
        CHECK(Int(rc.facet_triangles) == total_facet_area(c));
        CHECK(Int(rc.edge_segments) == lattice_perimeter(c));
        CHECK(rc.holds);
    }
}

TEST_CASE("census rejects invalid triangulations") {
    // a lattice-volume-2 tetrahedron is not unimodular
    LatticePolytope3 tall = hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 2})});
    Triangulation one;
    one.points = {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 2})};
    one.tets = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(dual_census_check(tall, one), Error);
    // too few tetrahedra do not cover the cube
    Triangulation partial = staircase_cube(1);
    partial.tets.resize(3);
    CHECK_THROWS_AS(dual_census_check(cube(1), partial), Error);
    // duplicated tetrahedra keep the volume sum right but overlap
    Triangulation dup = staircase_cube(1);
    dup.tets[0] = dup.tets[1];
    CHECK_THROWS_AS(dual_census_check(cube(1), dup), Error);
    // a point outside the polytope
    Triangulation outside = staircase_simplex(1);
    outside.points.push_back(iv({5, 5, 5}));
    outside.tets.push_back({0, 1, 2, static_cast<int>(outside.points.size()) - 1});
    CHECK_THROWS_AS(dual_census_check(simplex(1), outside), Error);
}
