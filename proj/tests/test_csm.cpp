#include <doctest.h>

#include <set>

#include "tropcsm/csm.hpp"

using namespace tropcsm;

namespace {

IVec iv(std::vector<long> v) {
    IVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

Matroid k4() {
    return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Polynomial poly(std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.push_back(Int(x));
    return Polynomial(c);
}

// 2-dimensional tropical hypersurface dual to the pyramid over a unit square:
// 5 rays, 8 two-dimensional cones (one per polytope edge).
WeightedFan pyramid_hypersurface() {
    IVec base = iv({0, 0, -1}), xm = iv({-1, 0, 0}), ym = iv({0, -1, 0});
    IVec xp = iv({1, 0, 1}), yp = iv({0, 1, 1});
    std::vector<std::pair<IVec, IVec>> pairs = {{base, ym}, {base, xp}, {base, yp}, {base, xm},
                                                {xm, ym},   {ym, xp},  {xm, yp},  {xp, yp}};
    std::vector<WCone> cones;
    for (const auto& [a, b] : pairs) cones.push_back({make_cone(3, {a, b}, {}), Int(1)});
    return make_fan(3, std::move(cones));
}

} // namespace

TEST_CASE("psi polynomial of Bergman fans equals the reduced characteristic polynomial") {
    CHECK(psi_polynomial(bergman_fan(Matroid::uniform(2, 3)).fan) == poly({-2, 1}));
    CHECK(psi_polynomial(bergman_fan(Matroid::free_matroid(3)).fan) == poly({1, -2, 1}));
    for (const auto& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 4), Matroid::uniform(2, 5),
                          k4(), Matroid::fano(), Matroid::non_fano()})
        CHECK(psi_polynomial(bergman_fan(m).fan) == m.reduced_characteristic());
    WeightedFan empty;
    empty.ambient_dim = 2;
    CHECK_THROWS_AS(psi_polynomial(empty), Error);
}

TEST_CASE("psi of ray stars of the pyramid hypersurface") {
    WeightedFan x = pyramid_hypersurface();
    for (auto dir : {iv({0, 0, -1}), iv({-1, 0, 0}), iv({0, -1, 0}), iv({1, 0, 1}), iv({0, 1, 1})}) {
        WeightedFan star = star_fan(x, make_cone(3, {dir}, {}));
        CHECK(psi_polynomial(star) == poly({2, -3, 1})); // (lambda-1)(lambda-2)
    }
}

TEST_CASE("stars of chains are Bergman fans of the chain minors") {
    for (const auto& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 4), k4()}) {
        BergmanFan bf = bergman_fan(m);
        Subset full = (1u << m.size()) - 1;
        for (int k = 0; k <= m.rank() - 1; ++k) {
            for (const auto& chain : flat_chains(m, k)) {
                Matroid sum = m.minor(chain.empty() ? full : chain[0], 0);
                Subset prev = chain.empty() ? full : chain[0];
                for (size_t i = 1; i <= chain.size(); ++i) {
                    Subset next = (i < chain.size()) ? chain[i] : full;
                    sum = Matroid::direct_sum(sum, m.minor(next, prev));
                    prev = next;
                }
                CHECK(psi_polynomial(star_of_chain(bf, chain)) == sum.reduced_characteristic());
            }
        }
    }
}

TEST_CASE("csm cycles of U(2,3)") {
    Matroid u23 = Matroid::uniform(2, 3);
    CsmCycle c1 = csm_cycle(u23, 1);
    CHECK(c1.fan.cones.size() == 3);
    for (const auto& wc : c1.fan.cones) CHECK(wc.weight == 1);
    CHECK(cycles_equal(c1.fan, bergman_fan(u23).fan));
    CsmCycle c0 = csm_cycle(u23, 0);
    REQUIRE(c0.fan.cones.size() == 1);
    CHECK(cones_equal(c0.fan.cones[0].cone, origin_cone(2)));
    CHECK(c0.fan.cones[0].weight == -1);
    CHECK(degree0(c0.fan) == -1);
    CHECK_THROWS_AS(csm_cycle(u23, 2), Error);
    CHECK_THROWS_AS(csm_cycle(u23, -1), Error);
}

TEST_CASE("csm_1 of U(3,4) kills the rank-two flats") {
    CsmCycle c = csm_cycle(Matroid::uniform(3, 4), 1);
    CHECK(c.cones.size() == 10); // 4 singleton flats + 6 pairs in the report
    int zeros = 0;
    for (const auto& r : c.cones)
        if (r.weight == 0) ++zeros;
    CHECK(zeros == 6);
    REQUIRE(c.fan.cones.size() == 4);
    for (const auto& wc : c.fan.cones) CHECK(wc.weight == -1);
    CHECK(is_balanced(c.fan));
}

TEST_CASE("csm cycles are balanced, top piece is the Bergman fan, degree rule") {
    for (const auto& m : {Matroid::uniform(2, 4), Matroid::uniform(3, 5), k4(), Matroid::fano()}) {
        int d = m.rank() - 1;
        auto total = csm_total(m);
        for (const auto& c : total)
            if (!c.fan.empty()) CHECK(is_balanced(c.fan));
        CHECK(cycles_equal(total[d].fan, bergman_fan(m).fan));
        Int deg = degree0(total[0].fan);
        CHECK(deg == (d % 2 != 0 ? -m.beta() : m.beta()));
    }
}

TEST_CASE("psi-quotient oracle matches the direct weight on every chain") {
    for (const auto& m : {Matroid::uniform(2, 3), Matroid::uniform(2, 4), Matroid::uniform(3, 4),
                          Matroid::uniform(2, 5), k4(), Matroid::non_fano()}) {
        BergmanFan bf = bergman_fan(m);
        for (int k = 0; k <= m.rank() - 1; ++k)
            for (const auto& chain : flat_chains(m, k))
                CHECK(chain_weight_via_psi(bf, chain).weight == csm_chain_weight(m, chain));
    }
}

TEST_CASE("psi-quotient oracle on explicit cones") {
    Matroid u23 = Matroid::uniform(2, 3);
    PsiWeight p0 = csm_weight_via_psi(u23, origin_cone(2));
    CHECK(p0.weight == -1);
    CHECK(p0.exponent == 0);
    Matroid u34 = Matroid::uniform(3, 4);
    // singleton flat {0}: ray (1,1,1)
    PsiWeight ps = csm_weight_via_psi(u34, make_cone(3, {iv({1, 1, 1})}, {}));
    CHECK(ps.weight == -1);
    CHECK(ps.exponent == 1);
    // rank-two flat {0,1}: ray of -e_{01}; observed exponent exceeds the cone dim
    PsiWeight pf = csm_weight_via_psi(u34, make_cone(3, {flat_ray(4, 0b0011)}, {}));
    CHECK(pf.weight == 0);
    CHECK(pf.exponent == 2);
    // maximal chains give weight 1
    PsiWeight pm = csm_weight_via_psi(u23, make_cone(2, {iv({1, 1})}, {}));
    CHECK(pm.weight == 1);
    CHECK_THROWS_AS(csm_weight_via_psi(u23, make_cone(2, {iv({1, -1})}, {})), Error);
}

TEST_CASE("csm of small degenerate matroids") {
    // free matroid on two elements: top piece is the full line, csm_0 vanishes
    Matroid f2 = Matroid::free_matroid(2);
    CsmCycle top = csm_cycle(f2, 1);
    WeightedFan line = make_fan(1, {{make_cone(1, {}, {iv({1})}), Int(1)}});
    CHECK(cycles_equal(top.fan, line));
    CsmCycle c0 = csm_cycle(f2, 0);
    CHECK(c0.fan.empty());
    REQUIRE(c0.cones.size() == 1);
    CHECK(c0.cones[0].weight == 0);
    // rank one: a single point of weight +1
    auto u13 = csm_total(Matroid::uniform(1, 3));
    REQUIRE(u13.size() == 1);
    CHECK(degree0(u13[0].fan) == 1);
    // loops: all graded pieces empty
    Matroid loopy = Matroid::from_bases(3, {{0, 1}});
    CHECK(csm_cycle(loopy, 0).fan.empty());
    CHECK(csm_cycle(loopy, 1).fan.empty());
}

TEST_CASE("psi weights are invariant under unimodular transforms of the star") {
    IMat u = {iv({1, 2}), iv({1, 3})}; // det 1
    Matroid u23 = Matroid::uniform(2, 3);
    BergmanFan bf = bergman_fan(u23);
    for (int k = 0; k <= 1; ++k) {
        for (const auto& chain : flat_chains(u23, k)) {
            WeightedFan star = star_of_chain(bf, chain);
            CHECK(psi_polynomial(apply_unimodular(star, u)) == psi_polynomial(star));
        }
    }
    IMat bad = {iv({2, 0}), iv({0, 1})};
    CHECK_THROWS_AS(apply_unimodular(bf.fan, bad), Error);
}

TEST_CASE("product formula for CSM cycles") {
    Matroid u23 = Matroid::uniform(2, 3);
    ProductCheckReport rep = product_check(u23, u23);
    CHECK(rep.matroidal);
    CHECK(rep.identified == "U(1,3)");
    REQUIRE(rep.grades.size() == 1);
    CHECK(rep.all_equal);
    // intersecting with the ambient space reproduces the other factor
    ProductCheckReport rep2 = product_check(Matroid::free_matroid(3), u23);
    CHECK(rep2.identified == "right input");
    CHECK(rep2.grades.size() == 2);
    CHECK(rep2.all_equal);
    // two copies of the same line meet nowhere after displacement
    Matroid line = Matroid::direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 2));
    CHECK_THROWS_AS(product_check(line, line), Error);
    CHECK_THROWS_AS(product_check(u23, Matroid::uniform(2, 4)), Error);
}
