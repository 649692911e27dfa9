#include "tropcsm/fixtures.hpp"

namespace tropcsm {

namespace {

IMat pyramid_rays() {
    return {{Int(0), Int(0), Int(-1)},
            {Int(-1), Int(0), Int(0)},
            {Int(0), Int(-1), Int(0)},
            {Int(1), Int(0), Int(1)},
            {Int(0), Int(1), Int(1)}};
}

} // namespace

WeightedFan pyramid_hypersurface_fan() {
    IMat r = pyramid_rays();
    // pairs of facet normals through each of the eight pyramid edges
    std::vector<std::pair<int, int>> pairs = {{0, 2}, {0, 3}, {0, 4}, {0, 1},
                                              {1, 2}, {2, 3}, {1, 4}, {3, 4}};
    std::vector<WCone> cones;
    for (auto [a, b] : pairs) cones.push_back({make_cone(3, {r[a], r[b]}, {}), Int(1)});
    return make_fan(3, std::move(cones));
}

WeightedFan pyramid_skeleton(const Int& weight) {
    std::vector<WCone> cones;
    for (const IVec& ray : pyramid_rays()) cones.push_back({make_cone(3, {ray}, {}), weight});
    return make_fan(3, std::move(cones));
}

Matroid graphic_k4() {
    return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

IMat random_unimodular(int n, std::mt19937_64& rng, int ops) {
    IMat u(n, IVec(n, Int(0)));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    if (n < 2) return u;
    for (int t = 0; t < ops; ++t) {
        const int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % (n - 1));
        if (j >= i) ++j;
        switch (rng() % 4) {
            case 0:
                std::swap(u[i], u[j]);
                break;
            case 1:
                for (Int& x : u[i]) x = -x;
                break;
            default: {
                const Int c = Int(rng() % 3 + 1) * (rng() % 2 ? 1 : -1);
                for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
            }
        }
    }
    return u;
}

} // namespace tropcsm
