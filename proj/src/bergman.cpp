#include "tropcsm/bergman.hpp"

#include <algorithm>
#include <random>

namespace tropcsm {

IVec flat_ray(int n, Subset f) {
    // chart image of -e_F: coordinate j-1 is [0 in F] - [j in F]
    IVec r(n - 1, 0);
    Int base = (f & 1u) ? 1 : 0;
    for (int j = 1; j < n; ++j) r[j - 1] = base - ((f >> j & 1u) ? 1 : 0);
    return r;
}

Cone chain_cone(int n, const std::vector<Subset>& chain) {
    IMat rays;
    for (Subset f : chain) rays.push_back(flat_ray(n, f));
    return make_cone(n - 1, rays, {});
}

std::vector<std::vector<Subset>> flat_chains(const Matroid& m, int k) {
    std::vector<std::vector<Subset>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    Subset bottom = m.closure(0);
    Subset full = (1u << m.size()) - 1;
    std::vector<Subset> proper;
    for (Subset f : m.flats())
        if (f != bottom && f != full) proper.push_back(f);
    std::vector<Subset> chain;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(chain.size()) == k) {
            out.push_back(chain);
            return;
        }
        for (size_t i = from; i < proper.size(); ++i) {
            Subset f = proper[i];
            if (!chain.empty() && ((chain.back() & f) != chain.back() || chain.back() == f)) continue;
            chain.push_back(f);
            self(self, i + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

BergmanFan bergman_fan(const Matroid& m) {
    BergmanFan bf{m, m.size() - 1, {}, {}};
    bf.fan.ambient_dim = bf.ambient_dim;
    if (m.has_loops()) return bf;
    int top = m.rank();
    // saturated chains of proper nonempty flats, ranks 1 .. top-1
    const auto& flats = m.flats();
    std::vector<std::vector<Subset>> by_rank(top + 1);
    for (Subset f : flats) by_rank[m.rank(f)].push_back(f);
    std::vector<Subset> chain;
    auto rec = [&](auto&& self, int r) -> void {
        if (r == top) {
            bf.max_chains.push_back(chain);
            return;
        }
        for (Subset f : by_rank[r]) {
            if (!chain.empty() && (chain.back() & f) != chain.back()) continue;
            chain.push_back(f);
            self(self, r + 1);
            chain.pop_back();
        }
    };
    rec(rec, 1);
    for (const auto& c : bf.max_chains)
        bf.fan.cones.push_back({chain_cone(m.size(), c), Int(1)});
    return bf;
}

bool support_contains(const Matroid& m, const QVec& x) {
    if (static_cast<int>(x.size()) != m.size() - 1)
        throw Error(Err::DimensionMismatch, "support query point has wrong dimension");
    QVec y(m.size());
    y[0] = 0;
    for (int j = 1; j < m.size(); ++j) y[j] = x[j - 1];
    for (Subset c : m.circuits()) {
        Rat best;
        int count = 0;
        for (int e : subset_elements(c)) {
            if (count == 0 || y[e] > best) {
                best = y[e];
                count = 1;
            } else if (y[e] == best) {
                ++count;
            }
        }
        if (count < 2) return false;
    }
    return true;
}

namespace {

QMat rat_inverse(const IMat& a) {
    int n = static_cast<int>(a.size());
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(a[i][j]);
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (aug[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw Error(Err::NotUnimodular, "matrix not invertible");
        std::swap(aug[piv], aug[col]);
        Rat d = aug[col][col];
        for (auto& v : aug[col]) v /= d;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat c = aug[i][col];
            for (int j = 0; j < 2 * n; ++j) aug[i][j] -= c * aug[col][j];
        }
    }
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

IVec mat_apply(const IMat& a, const IVec& x) {
    IVec y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

QVec qmat_apply(const QMat& a, const QVec& x) {
    QVec y(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

} // namespace

ParallelMapReport parallel_connection_map(const Matroid& m1, int p1, const Matroid& m2, int p2,
                                          uint64_t seed, int points_per_cone) {
    if (m1.has_loops() || m2.has_loops())
        throw Error(Err::LoopInput, "parallel connection map requires loopless matroids");
    Matroid p = Matroid::parallel_connection(m1, p1, m2, p2);
    int n1 = m1.size(), n2 = m2.size(), np = p.size();

    // lift of each ground-set element of P into R^{E1} x R^{E2}; the glued
    // basepoint (last label) goes to e_{p1} + e_{p2}
    IMat lift(np, IVec(n1 + n2, 0));
    {
        int next = 0;
        for (int e = 0; e < n1; ++e)
            if (e != p1) lift[next++][e] = 1;
        for (int e = 0; e < n2; ++e)
            if (e != p2) lift[next++][n1 + e] = 1;
        lift[np - 1][p1] = 1;
        lift[np - 1][n1 + p2] = 1;
    }
    // chart matrix: source chart drops P-coordinate 0, each target factor
    // chart drops its coordinate 0
    ParallelMapReport rep;
    rep.points_per_cone = points_per_cone;
    rep.matrix.assign(np - 1, IVec(np - 1, 0));
    for (int j = 1; j < np; ++j) {
        const IVec& y = lift[j];
        for (int i = 1; i < n1; ++i) rep.matrix[i - 1][j - 1] = y[i] - y[0];
        for (int i = 1; i < n2; ++i) rep.matrix[n1 - 1 + i - 1][j - 1] = y[n1 + i] - y[n1];
    }
    rep.det = determinant(rep.matrix);
    if (rep.det != 1 && rep.det != -1)
        throw Error(Err::NotUnimodular, "gluing map determinant is not a unit");
    QMat inv = rat_inverse(rep.matrix);

    auto in_product = [&](const IVec& v) {
        QVec u(n1 - 1), w(n2 - 1);
        for (int i = 0; i < n1 - 1; ++i) u[i] = Rat(v[i]);
        for (int i = 0; i < n2 - 1; ++i) w[i] = Rat(v[n1 - 1 + i]);
        return support_contains(m1, u) && support_contains(m2, w);
    };

    std::mt19937_64 rng(seed);
    auto coeff = [&] { return Int(rng() % 10 + 1); };

    BergmanFan bp = bergman_fan(p);
    rep.cones_forward_ok = true;
    rep.points_forward_ok = true;
    for (const auto& wc : bp.fan.cones) {
        for (const auto& r : wc.cone.rays)
            if (!in_product(mat_apply(rep.matrix, r))) rep.cones_forward_ok = false;
        for (int t = 0; t < points_per_cone; ++t) {
            IVec x(np - 1, 0);
            for (const auto& r : wc.cone.rays) x = add(x, scale(r, coeff()));
            if (!in_product(mat_apply(rep.matrix, x))) rep.points_forward_ok = false;
        }
    }

    BergmanFan b1 = bergman_fan(m1), b2 = bergman_fan(m2);
    rep.points_backward_ok = true;
    for (const auto& wc1 : b1.fan.cones) {
        for (const auto& wc2 : b2.fan.cones) {
            for (int t = 0; t < points_per_cone; ++t) {
                IVec x1(n1 - 1, 0), x2(n2 - 1, 0);
                for (const auto& r : wc1.cone.rays) x1 = add(x1, scale(r, coeff()));
                for (const auto& r : wc2.cone.rays) x2 = add(x2, scale(r, coeff()));
                QVec x(np - 1);
                for (int i = 0; i < n1 - 1; ++i) x[i] = Rat(x1[i]);
                for (int i = 0; i < n2 - 1; ++i) x[n1 - 1 + i] = Rat(x2[i]);
                if (!support_contains(p, qmat_apply(inv, x))) rep.points_backward_ok = false;
            }
        }
    }
    return rep;
}

} // namespace tropcsm
