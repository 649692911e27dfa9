#include "tropcsm/noether.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tropcsm {

namespace {

IVec cross(const IVec& a, const IVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const IVec& a, const IVec& b, const IVec& c) { return dot(a, cross(b, c)); }

Int edge_length(const IVec& u, const IVec& v) {
    Int g = 0;
    for (int i = 0; i < 3; ++i) g = boost::multiprecision::gcd(g, v[i] - u[i]);
    return g;
}

// convex-position order of 2D rational points around their centroid
std::vector<int> angular_order(const QMat& pts) {
    QVec c(2, Rat(0));
    for (const auto& p : pts) {
        c[0] += p[0];
        c[1] += p[1];
    }
    Rat m(static_cast<long>(pts.size()));
    c[0] /= m;
    c[1] /= m;
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    auto half = [&](int i) {
        Rat x = pts[i][0] - c[0], y = pts[i][1] - c[1];
        return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        int hi = half(i), hj = half(j);
        if (hi != hj) return hi < hj;
        Rat xi = pts[i][0] - c[0], yi = pts[i][1] - c[1];
        Rat xj = pts[j][0] - c[0], yj = pts[j][1] - c[1];
        return xi * yj - yi * xj > 0;
    });
    return order;
}

} // namespace

LatticePolytope3 hull(const IMat& points) {
    IMat pts;
    {
        std::set<IVec> seen;
        for (const auto& p : points)
            if (seen.insert(p).second) pts.push_back(p);
    }
    if (pts.size() < 4) throw Error(Err::DegenerateInput, "need at least four distinct points");
    {
        IMat dirs;
        for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
        if (rank_of(dirs) < 3) throw Error(Err::DegenerateInput, "points are coplanar");
    }

    // facet planes: triples spanning a plane with all points on one side
    std::map<IVec, Int> planes; // primitive outward normal -> support
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k) {
                IVec n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if (is_zero(n)) continue;
                n = primitive(n);
                Int s = dot(n, pts[i]);
                bool above = false, below = false;
                for (const auto& p : pts) {
                    Int d = dot(n, p) - s;
                    if (d > 0) above = true;
                    if (d < 0) below = true;
                }
                if (above && below) continue;
                if (above) {
                    n = neg(n);
                    s = -s;
                }
                planes.emplace(n, s);
            }

    LatticePolytope3 out;
    // vertices: points whose tight facet normals span all of R^3
    std::vector<int> to_vertex(pts.size(), -1);
    for (size_t i = 0; i < pts.size(); ++i) {
        IMat tight;
        for (const auto& [n, s] : planes)
            if (dot(n, pts[i]) == s) tight.push_back(n);
        if (rank_of(tight) == 3) {
            to_vertex[i] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(pts[i]);
        }
    }

    for (const auto& [n, s] : planes) {
        Facet3 f;
        f.normal = n;
        f.support = s;
        std::vector<int> on;
        for (size_t i = 0; i < out.vertices.size(); ++i)
            if (dot(n, out.vertices[i]) == s) on.push_back(static_cast<int>(i));
        // 2D coordinates in the plane: drop the coordinate of a nonzero
        // normal entry by projecting onto the two complementary axes
        int drop = 0;
        while (n[drop] == 0) ++drop;
        int u = (drop + 1) % 3, v = (drop + 2) % 3;
        QMat flat;
        for (int idx : on) flat.push_back({Rat(out.vertices[idx][u]), Rat(out.vertices[idx][v])});
        for (int pos : angular_order(flat)) f.cycle.push_back(on[pos]);
        out.facets.push_back(std::move(f));
    }

    std::set<std::pair<int, int>> eset;
    for (const auto& f : out.facets) {
        int m = static_cast<int>(f.cycle.size());
        for (int i = 0; i < m; ++i) {
            int a = f.cycle[i], b = f.cycle[(i + 1) % m];
            eset.insert({std::min(a, b), std::max(a, b)});
        }
    }
    for (auto [a, b] : eset)
        out.edges.push_back({a, b, edge_length(out.vertices[a], out.vertices[b])});
    return out;
}

Int normalized_volume(const LatticePolytope3& p) {
    const IVec& base = p.vertices[0];
    Int six_vol = 0;
    for (const auto& f : p.facets) {
        int m = static_cast<int>(f.cycle.size());
        const IVec& a = p.vertices[f.cycle[0]];
        for (int i = 1; i + 1 < m; ++i)
            six_vol += det3(sub(a, base), sub(p.vertices[f.cycle[i]], base),
                            sub(p.vertices[f.cycle[i + 1]], base));
    }
    return boost::multiprecision::abs(six_vol);
}

Int facet_area(const LatticePolytope3& p, int facet) {
    const Facet3& f = p.facets[facet];
    const IVec& base = p.vertices[f.cycle[0]];
    IMat dirs;
    for (size_t i = 1; i < f.cycle.size(); ++i)
        dirs.push_back(sub(p.vertices[f.cycle[i]], base));
    IMat basis = saturation(dirs, 3); // 2-lattice of the facet plane
    Int twice_area = 0;
    QVec prev;
    for (size_t i = 0; i < f.cycle.size(); ++i) {
        auto coords = solve_in_span(basis, sub(p.vertices[f.cycle[i]], base));
        if (!coords) throw Error(Err::Internal, "facet vertex outside its plane lattice");
        QVec cur = *coords;
        if (i > 0) {
            Rat c = prev[0] * cur[1] - prev[1] * cur[0];
            if (boost::multiprecision::denominator(c) != 1)
                throw Error(Err::Internal, "non-integral facet coordinates");
            twice_area += Int(boost::multiprecision::numerator(c));
        }
        prev = cur;
    }
    return boost::multiprecision::abs(twice_area);
}

Int total_facet_area(const LatticePolytope3& p) {
    Int a = 0;
    for (size_t i = 0; i < p.facets.size(); ++i) a += facet_area(p, static_cast<int>(i));
    return a;
}

Int lattice_perimeter(const LatticePolytope3& p) {
    Int l = 0;
    for (const auto& e : p.edges) l += e.length;
    return l;
}

Int tau(const LatticePolytope3& p, int facet) {
    const Facet3& f = p.facets[facet];
    std::set<std::pair<int, int>> mine;
    int m = static_cast<int>(f.cycle.size());
    for (int i = 0; i < m; ++i) {
        int a = f.cycle[i], b = f.cycle[(i + 1) % m];
        mine.insert({std::min(a, b), std::max(a, b)});
    }
    IVec rhs(3, 0);
    for (size_t j = 0; j < p.facets.size(); ++j) {
        if (static_cast<int>(j) == facet) continue;
        const Facet3& g = p.facets[j];
        int gm = static_cast<int>(g.cycle.size());
        for (int i = 0; i < gm; ++i) {
            int a = g.cycle[i], b = g.cycle[(i + 1) % gm];
            if (!mine.count({std::min(a, b), std::max(a, b)})) continue;
            rhs = add(rhs, scale(g.normal, edge_length(p.vertices[a], p.vertices[b])));
        }
    }
    if (is_zero(rhs)) return 0;
    int nz = 0;
    while (f.normal[nz] == 0) ++nz;
    if (rhs[nz] % f.normal[nz] != 0)
        throw Error(Err::NonProportional, "edge-normal sum is not a multiple of the facet normal");
    Int t = -rhs[nz] / f.normal[nz];
    if (sub(rhs, scale(f.normal, -t)) != IVec(3, 0))
        throw Error(Err::NonProportional, "edge-normal sum is not parallel to the facet normal");
    return t;
}

namespace {

struct Box {
    long lo[3], hi[3];
};

Box bounding_box(const LatticePolytope3& p) {
    Box b;
    for (int i = 0; i < 3; ++i) {
        b.lo[i] = static_cast<long>(p.vertices[0][i]);
        b.hi[i] = b.lo[i];
        for (const auto& v : p.vertices) {
            b.lo[i] = std::min(b.lo[i], static_cast<long>(v[i]));
            b.hi[i] = std::max(b.hi[i], static_cast<long>(v[i]));
        }
    }
    return b;
}

bool strictly_inside(const LatticePolytope3& p, long x, long y, long z) {
    IVec q = {Int(x), Int(y), Int(z)};
    for (const auto& f : p.facets)
        if (dot(f.normal, q) >= f.support) return false;
    return true;
}

} // namespace

long interior_points_serial(const LatticePolytope3& p) {
    Box b = bounding_box(p);
    long count = 0;
    for (long x = b.lo[0] + 1; x < b.hi[0]; ++x)
        for (long y = b.lo[1] + 1; y < b.hi[1]; ++y)
            for (long z = b.lo[2] + 1; z < b.hi[2]; ++z)
                if (strictly_inside(p, x, y, z)) ++count;
    return count;
}

long interior_points(const LatticePolytope3& p) {
    Box b = bounding_box(p);
    long count = 0;
    long span = b.hi[0] - b.lo[0] - 1;
    if (span <= 0) return 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (long i = 0; i < span; ++i) {
        long x = b.lo[0] + 1 + i;
        for (long y = b.lo[1] + 1; y < b.hi[1]; ++y)
            for (long z = b.lo[2] + 1; z < b.hi[2]; ++z)
                if (strictly_inside(p, x, y, z)) ++count;
    }
    return count;
}

NoetherReport noether_check(const LatticePolytope3& p) {
    NoetherReport r;
    r.interior = interior_points(p);
    r.volume = normalized_volume(p);
    r.area = total_facet_area(p);
    r.perimeter = lattice_perimeter(p);
    for (size_t i = 0; i < p.facets.size(); ++i) r.tau_list.push_back(tau(p, static_cast<int>(i)));
    r.lhs = Int(12) * (1 + r.interior);
    r.rhs = 2 * r.volume - 3 * r.area + 3 * r.perimeter;
    for (const auto& t : r.tau_list) r.rhs += t;
    r.holds = (r.lhs == r.rhs);
    return r;
}

namespace {

// permutations of (0,1,2) for the Freudenthal decomposition of a unit cube
const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

Triangulation freudenthal(int d, bool keep_chain_region_only) {
    Triangulation t;
    std::map<std::array<long, 3>, int> index;
    auto point_id = [&](std::array<long, 3> q) {
        auto it = index.find(q);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(t.points.size());
        index.emplace(q, id);
        t.points.push_back({Int(q[0]), Int(q[1]), Int(q[2])});
        return id;
    };
    auto in_chain = [](const std::array<long, 3>& q) { return q[0] <= q[1] && q[1] <= q[2]; };
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y)
            for (long z = 0; z < d; ++z)
                for (const auto& perm : kPerms) {
                    std::array<std::array<long, 3>, 4> vs;
                    vs[0] = {x, y, z};
                    for (int i = 0; i < 3; ++i) {
                        vs[i + 1] = vs[i];
                        vs[i + 1][perm[i]] += 1;
                    }
                    if (keep_chain_region_only &&
                        !(in_chain(vs[0]) && in_chain(vs[1]) && in_chain(vs[2]) && in_chain(vs[3])))
                        continue;
                    t.tets.push_back(
                        {point_id(vs[0]), point_id(vs[1]), point_id(vs[2]), point_id(vs[3])});
                }
    return t;
}

} // namespace

Triangulation staircase_cube(int d) { return freudenthal(d, false); }

Triangulation staircase_simplex(int d) {
    // triangulate the chain simplex {0 <= y1 <= y2 <= y3 <= d} by the tets of
    // the cube's staircase that it contains, then map unimodularly onto
    // conv{0, d e1, d e2, d e3} via (y1, y2, y3) -> (y3 - y2, y2 - y1, y1)
    Triangulation t = freudenthal(d, true);
    for (auto& q : t.points) q = {q[2] - q[1], q[1] - q[0], q[0]};
    return t;
}

CensusReport dual_census_check(const LatticePolytope3& p, const Triangulation& t) {
    CensusReport r;
    // unimodularity and containment
    std::vector<std::array<long, 6>> boxes; // per-tet bounding box
    for (const auto& tet : t.tets) {
        for (int i : tet)
            if (i < 0 || i >= static_cast<int>(t.points.size()))
                throw Error(Err::ParseError, "tetrahedron index out of range");
        const IVec &a = t.points[tet[0]], &b = t.points[tet[1]], &c = t.points[tet[2]],
                   &e = t.points[tet[3]];
        Int det = det3(sub(b, a), sub(c, a), sub(e, a));
        if (det != 1 && det != -1)
            throw Error(Err::NotUnimodular, "tetrahedron with lattice volume != 1");
        std::array<long, 6> box;
        for (int i = 0; i < 3; ++i) {
            long lo = static_cast<long>(a[i]), hi = lo;
            for (int j : {tet[1], tet[2], tet[3]}) {
                lo = std::min(lo, static_cast<long>(t.points[j][i]));
                hi = std::max(hi, static_cast<long>(t.points[j][i]));
            }
            box[i] = lo;
            box[3 + i] = hi;
        }
        boxes.push_back(box);
    }
    for (const auto& q : t.points)
        for (const auto& f : p.facets)
            if (dot(f.normal, q) > f.support)
                throw Error(Err::NotCovering, "triangulation point outside the polytope");
    if (Int(static_cast<long>(t.tets.size())) != normalized_volume(p))
        throw Error(Err::NotCovering, "tetrahedra volumes do not add up to the polytope volume");

    // pairwise interior disjointness by separating-axis test (bbox-pruned)
    auto tet_verts = [&](size_t i) {
        IMat vs;
        for (int j : t.tets[i]) vs.push_back(t.points[j]);
        return vs;
    };
    auto separated = [](const IMat& va, const IMat& vb, const IVec& axis) {
        if (is_zero(axis)) return false;
        Int amin, amax, bmin, bmax;
        for (size_t i = 0; i < 4; ++i) {
            Int da = dot(axis, va[i]), db = dot(axis, vb[i]);
            if (i == 0) {
                amin = amax = da;
                bmin = bmax = db;
            } else {
                amin = std::min(amin, da);
                amax = std::max(amax, da);
                bmin = std::min(bmin, db);
                bmax = std::max(bmax, db);
            }
        }
        return amax <= bmin || bmax <= amin;
    };
    for (size_t i = 0; i < t.tets.size(); ++i) {
        for (size_t j = i + 1; j < t.tets.size(); ++j) {
            bool apart = false;
            for (int ax = 0; ax < 3 && !apart; ++ax)
                apart = boxes[i][3 + ax] <= boxes[j][ax] || boxes[j][3 + ax] <= boxes[i][ax];
            if (apart) continue;
            IMat va = tet_verts(i), vb = tet_verts(j);
            bool disjoint = false;
            IMat ea, eb;
            for (int u = 0; u < 4 && !disjoint; ++u)
                for (int v = u + 1; v < 4 && !disjoint; ++v) {
                    ea.push_back(sub(va[v], va[u]));
                    eb.push_back(sub(vb[v], vb[u]));
                }
            static const int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
            for (const auto& fc : kFaces) {
                if (separated(va, vb, cross(sub(va[fc[1]], va[fc[0]]), sub(va[fc[2]], va[fc[0]]))) ||
                    separated(va, vb, cross(sub(vb[fc[1]], vb[fc[0]]), sub(vb[fc[2]], vb[fc[0]]))))
                    disjoint = true;
            }
            for (const auto& da : ea)
                for (const auto& db : eb)
                    if (!disjoint && separated(va, vb, cross(da, db))) disjoint = true;
            if (!disjoint)
                throw Error(Err::NotCovering, "tetrahedra with overlapping interiors");
        }
    }

    r.tets = static_cast<long>(t.tets.size());

    // sedentarity-1 dual vertices: distinct tet triangles on facets of the polytope
    std::set<std::array<int, 3>> facet_tris;
    static const int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& tet : t.tets)
        for (const auto& fc : kFaces) {
            std::array<int, 3> tri = {tet[fc[0]], tet[fc[1]], tet[fc[2]]};
            std::sort(tri.begin(), tri.end());
            for (const auto& f : p.facets) {
                bool on = true;
                for (int i : tri)
                    if (dot(f.normal, t.points[i]) != f.support) on = false;
                if (on) facet_tris.insert(tri);
            }
        }
    r.facet_triangles = static_cast<long>(facet_tris.size());

    // sedentarity-2 dual vertices: distinct tet segments on edges of the polytope
    std::set<std::array<int, 2>> edge_segs;
    for (const auto& tet : t.tets)
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                std::array<int, 2> seg = {std::min(tet[u], tet[v]), std::max(tet[u], tet[v])};
                for (const auto& e : p.edges) {
                    // the segment lies on edge e iff it is tight on (at least)
                    // two of the facets through e; inside the polytope that
                    // pins it to the edge itself
                    int on_both = 0;
                    for (const auto& f : p.facets) {
                        bool tight_ends = dot(f.normal, p.vertices[e.a]) == f.support &&
                                          dot(f.normal, p.vertices[e.b]) == f.support;
                        if (!tight_ends) continue;
                        bool seg_on = dot(f.normal, t.points[seg[0]]) == f.support &&
                                      dot(f.normal, t.points[seg[1]]) == f.support;
                        if (seg_on) ++on_both;
                    }
                    if (on_both >= 2) {
                        edge_segs.insert(seg);
                        break;
                    }
                }
            }
    r.edge_segments = static_cast<long>(edge_segs.size());

    for (size_t i = 0; i < p.facets.size(); ++i) r.tau_list.push_back(tau(p, static_cast<int>(i)));
    r.lhs = Int(2) * r.tets - Int(3) * r.facet_triangles + Int(3) * r.edge_segments;
    for (const auto& tv : r.tau_list) r.lhs += tv;
    r.rhs = Int(12) * (1 + interior_points(p));
    r.holds = (r.lhs == r.rhs);
    return r;
}

} // namespace tropcsm
