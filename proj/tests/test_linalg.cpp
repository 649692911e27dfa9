#include <doctest.h>

#include "tropcsm/linalg.hpp"
#include "tropcsm/polynomial.hpp"

using namespace tropcsm;

TEST_CASE("primitive vectors") {
    CHECK(primitive({Int(4), Int(-6), Int(10)}) == IVec{Int(2), Int(-3), Int(5)});
    CHECK(primitive({Int(0), Int(-7)}) == IVec{Int(0), Int(-1)});
    CHECK_THROWS_AS(primitive({Int(0), Int(0)}), Error);
}

TEST_CASE("hnf shape and invariance under row operations") {
    IMat a = {{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(4), Int(16)}};
    IMat h = hnf(a);
    // pivots positive, entries above pivots reduced
    int col = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        while (h[i][col] == 0) ++col;
        CHECK(h[i][col] > 0);
        for (size_t k = 0; k < i; ++k) {
            CHECK(h[k][col] >= 0);
            CHECK(h[k][col] < h[i][col]);
        }
    }
    // same lattice after unimodular row ops -> same HNF
    IMat b = {add(a[0], scale(a[1], Int(3))), a[1], sub(a[2], a[0])};
    CHECK(hnf(b) == h);
}

TEST_CASE("integer kernel annihilates and is saturated") {
    IMat a = {{Int(1), Int(2), Int(3), Int(4)}, {Int(2), Int(4), Int(6), Int(8)},
              {Int(0), Int(1), Int(1), Int(0)}};
    IMat k = integer_kernel(a, 4);
    CHECK(k.size() == 2);
    for (const auto& v : k)
        for (const auto& row : a) CHECK(dot(v, row) == 0);
    CHECK(saturation(k, 4) == k);
}

TEST_CASE("saturation clears finite index") {
    IMat a = {{Int(2), Int(4)}, {Int(0), Int(6)}};
    IMat s = saturation(a, 2); // full rank in the plane, so the whole lattice
    CHECK(s == IMat{{Int(1), Int(0)}, {Int(0), Int(1)}});
    IMat a2 = {{Int(2), Int(4)}};
    CHECK(saturation(a2, 2) == IMat{{Int(1), Int(2)}});
}

TEST_CASE("lattice index") {
    CHECK(lattice_index({{Int(2), Int(0)}, {Int(0), Int(3)}}, 2) == 6);
    CHECK(lattice_index({{Int(1), Int(5)}, {Int(0), Int(1)}}, 2) == 1);
    CHECK(lattice_index({{Int(1), Int(0)}, {Int(2), Int(0)}, {Int(1), Int(3)}}, 2) == 3);
    CHECK_THROWS_AS(lattice_index({{Int(1), Int(1)}}, 2), Error);
}

TEST_CASE("solve_in_span") {
    IMat basis = {{Int(1), Int(0), Int(1)}, {Int(0), Int(2), Int(0)}};
    auto x = solve_in_span(basis, {Int(3), Int(1), Int(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(3));
    CHECK((*x)[1] == Rat(1, 2));
    CHECK(!solve_in_span(basis, {Int(0), Int(0), Int(1)}).has_value());
}

TEST_CASE("rank") {
    CHECK(rank_of({{Int(1), Int(2)}, {Int(2), Int(4)}, {Int(0), Int(1)}}) == 2);
    RowSpace rs;
    CHECK(rs.insert({Int(1), Int(1), Int(0)}));
    CHECK(!rs.insert({Int(2), Int(2), Int(0)}));
    CHECK(rs.insert({Int(0), Int(0), Int(5)}));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains({Int(3), Int(3), Int(-1)}));
    CHECK(!rs.contains({Int(1), Int(0), Int(0)}));
}

TEST_CASE("polynomial arithmetic and division by t-1") {
    Polynomial p({Int(2), Int(-3), Int(1)}); // (t-1)(t-2)
    CHECK(p.eval(1) == 0);
    CHECK(p.eval(5) == 12);
    Polynomial q;
    REQUIRE(p.divide_by_x_minus_one(q));
    CHECK(q == Polynomial({Int(-2), Int(1)}));
    CHECK(p.root_one_multiplicity() == 1);
    Polynomial cube = Polynomial::x_minus(1) * Polynomial::x_minus(1) * Polynomial::x_minus(1);
    CHECK(cube.root_one_multiplicity() == 3);
    Polynomial r({Int(1), Int(1)});
    CHECK(!r.divide_by_x_minus_one(q));
    CHECK(r.to_string() == "t + 1");
    CHECK(Polynomial({Int(-2), Int(0), Int(-1)}).to_string() == "-t^2 - 2");
}
