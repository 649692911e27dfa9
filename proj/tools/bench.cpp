// Compares the OpenMP kernels against their serial reference implementations:
// wedge-span dimensions of Bergman fans and interior-point counts of polytopes.

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "tropcsm/bergman.hpp"
#include "tropcsm/csm.hpp"
#include "tropcsm/fixtures.hpp"
#include "tropcsm/noether.hpp"

using namespace tropcsm;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

LatticePolytope3 dilated_simplex(long d) {
    const Int dd(d);
    return hull({{Int(0), Int(0), Int(0)}, {dd, Int(0), Int(0)}, {Int(0), dd, Int(0)}, {Int(0), Int(0), dd}});
}

LatticePolytope3 cube(long d) {
    IMat pts;
    for (Int x : {Int(0), Int(d)})
        for (Int y : {Int(0), Int(d)})
            for (Int z : {Int(0), Int(d)}) pts.push_back({x, y, z});
    return hull(pts);
}

} // namespace

int main() {
    std::printf("%-40s %12s %12s %8s\n", "workload", "parallel/ms", "serial/ms", "match");

    struct FanCase {
        const char* name;
        Matroid m;
    };
    const FanCase fans[] = {
        {"fp_dimension B(U(3,6)), p=1..3", Matroid::uniform(3, 6)},
        {"fp_dimension B(U(4,7)), p=1..3", Matroid::uniform(4, 7)},
        {"fp_dimension B(K5), p=1..3", Matroid::graphic(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                            {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})},
    };
    for (const auto& c : fans) {
        WeightedFan f = bergman_fan(c.m).fan;
        const int pmax = std::min(3, f.dim());
        std::vector<int> par, ser;
        double tp = time_ms([&] {
            for (int p = 1; p <= pmax; ++p) par.push_back(fp_dimension(f, p));
        });
        double ts = time_ms([&] {
            for (int p = 1; p <= pmax; ++p) ser.push_back(fp_dimension_serial(f, p));
        });
        std::printf("%-40s %12.1f %12.1f %8s\n", c.name, tp, ts, par == ser ? "yes" : "NO");
    }

    struct PolyCase {
        const char* name;
        LatticePolytope3 p;
    };
    const PolyCase polys[] = {
        {"interior_points 60-dilated simplex", dilated_simplex(60)},
        {"interior_points cube [0,80]^3", cube(80)},
    };
    for (const auto& c : polys) {
        long np = 0, ns = 0;
        double tp = time_ms([&] { np = interior_points(c.p); });
        double ts = time_ms([&] { ns = interior_points_serial(c.p); });
        std::printf("%-40s %12.1f %12.1f %8s\n", c.name, tp, ts, np == ns ? "yes" : "NO");
    }
    return 0;
}
