#include <doctest.h>

#include <random>
#include <set>

#include "tropcsm/bergman.hpp"

using namespace tropcsm;

namespace {

IVec iv(std::vector<long> v) {
    IVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

QVec qv(std::vector<long> v) {
    QVec out;
    for (long x : v) out.push_back(Rat(x));
    return out;
}

Matroid k4() {
    return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

} // namespace

TEST_CASE("Bergman fan of U(2,3)") {
    BergmanFan bf = bergman_fan(Matroid::uniform(2, 3));
    CHECK(bf.ambient_dim == 2);
    REQUIRE(bf.max_chains.size() == 3);
    std::set<IVec> rays;
    for (const auto& wc : bf.fan.cones) {
        CHECK(wc.weight == 1);
        REQUIRE(wc.cone.rays.size() == 1);
        rays.insert(wc.cone.rays[0]);
    }
    CHECK(rays == std::set<IVec>{iv({1, 1}), iv({-1, 0}), iv({0, -1})});
    CHECK(bf.fan.dim() == 1);
    CHECK(is_balanced(bf.fan));
}

TEST_CASE("matroids with loops give the empty fan") {
    Matroid loopy = Matroid::from_bases(2, {{0}}); // element 1 is a loop
    BergmanFan bf = bergman_fan(loopy);
    CHECK(bf.fan.empty());
    CHECK(bf.max_chains.empty());
    CHECK(bf.ambient_dim == 1);
}

TEST_CASE("free matroid fan covers the whole space") {
    BergmanFan bf = bergman_fan(Matroid::free_matroid(3));
    CHECK(bf.max_chains.size() == 6); // orderings of the two flag steps
    CHECK(bf.fan.dim() == 2);
    CHECK(is_balanced(bf.fan));
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) CHECK(support_contains(bf.matroid, qv({a, b})));
}

TEST_CASE("support membership via the circuit criterion") {
    Matroid u23 = Matroid::uniform(2, 3);
    CHECK(support_contains(u23, qv({-1, 0})));  // ray of the flat {1}
    CHECK(!support_contains(u23, qv({1, -1}))); // lift (0,1,-1) has a unique max
    CHECK(support_contains(u23, qv({0, 0})));
    CHECK(support_contains(u23, qv({2, 2}))); // ray of the flat {0}
    CHECK_THROWS_AS(support_contains(u23, qv({1, 0, 0})), Error);
    // a loop is a one-element circuit, so nothing is in the support
    Matroid loopy = Matroid::from_bases(2, {{0}});
    CHECK(!support_contains(loopy, qv({0})));
}

TEST_CASE("cones and circuit criterion agree on sampled points") {
    std::mt19937_64 rng(7);
    std::vector<Matroid> suite = {Matroid::uniform(2, 3), Matroid::uniform(2, 4),
                                  Matroid::uniform(3, 4), k4(), Matroid::fano()};
    for (const auto& m : suite) {
        BergmanFan bf = bergman_fan(m);
        int n = m.size();
        // interior points of every maximal cone are in the support
        for (const auto& wc : bf.fan.cones) {
            for (int t = 0; t < 100; ++t) {
                IVec x(n - 1, 0);
                for (const auto& r : wc.cone.rays) x = add(x, scale(r, Int(rng() % 8 + 1)));
                CHECK(support_contains(m, to_rat(x)));
            }
        }
        // random lattice points: circuit criterion == membership in some cone
        for (int t = 0; t < 100; ++t) {
            QVec x(n - 1);
            for (auto& c : x) c = Rat(static_cast<long>(rng() % 9) - 4);
            bool in_cone = false;
            for (const auto& wc : bf.fan.cones)
                if (cone_contains(wc.cone, x)) in_cone = true;
            CHECK(support_contains(m, x) == in_cone);
        }
    }
}

TEST_CASE("direct sum support splits across the factors") {
    Matroid m1 = Matroid::uniform(2, 3), m2 = Matroid::uniform(1, 2);
    Matroid sum = Matroid::direct_sum(m1, m2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        QVec x(4);
        for (auto& c : x) c = Rat(static_cast<long>(rng() % 7) - 3);
        // lift (0, x), split at the component boundary and re-chart each factor
        QVec y = {Rat(0), x[0], x[1], x[2], x[3]};
        QVec u = {y[1] - y[0], y[2] - y[0]};
        QVec w = {y[4] - y[3]};
        CHECK(support_contains(sum, x) == (support_contains(m1, u) && support_contains(m2, w)));
    }
}

TEST_CASE("Bergman fans of the test suite are balanced with unit weights") {
    for (const auto& m : {Matroid::uniform(3, 5), Matroid::non_fano(), k4()}) {
        BergmanFan bf = bergman_fan(m);
        CHECK(bf.fan.dim() == m.rank() - 1);
        CHECK(bf.fan.pure());
        for (const auto& wc : bf.fan.cones) CHECK(wc.weight == 1);
        CHECK(is_balanced(bf.fan));
    }
}

TEST_CASE("parallel connection gluing map") {
    Matroid u23 = Matroid::uniform(2, 3);
    ParallelMapReport rep = parallel_connection_map(u23, 0, u23, 0, 3, 50);
    CHECK(rep.matrix.size() == 4);
    CHECK((rep.det == 1 || rep.det == -1));
    CHECK(rep.cones_forward_ok);
    CHECK(rep.points_forward_ok);
    CHECK(rep.points_backward_ok);
    // other basepoints and mixed ranks
    ParallelMapReport rep2 = parallel_connection_map(u23, 2, Matroid::uniform(2, 4), 1, 5, 50);
    CHECK((rep2.det == 1 || rep2.det == -1));
    CHECK(rep2.cones_forward_ok);
    CHECK(rep2.points_forward_ok);
    CHECK(rep2.points_backward_ok);
    Matroid loopy = Matroid::from_bases(2, {{0}});
    CHECK_THROWS_AS(parallel_connection_map(loopy, 0, u23, 0), Error);
}
