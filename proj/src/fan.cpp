#include "tropcsm/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropcsm {

namespace {

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) { x = -1; y = 0; return -a; }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int d = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return d;
}

// x with g . x = 1 for primitive g.
IVec solve_unit(const IVec& g) {
    IVec x(g.size(), 0);
    Int d = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        Int s, t;
        Int nd = egcd(d, g[i], s, t);
        for (size_t j = 0; j < i; ++j) x[j] *= s;
        x[i] = t;
        d = nd;
    }
    if (d != 1) throw Error(Err::Internal, "solve_unit on non-primitive vector");
    return x;
}

// Integral coordinates of v in a saturated lattice basis.
IVec int_coords(const IMat& basis, const IVec& v) {
    auto x = solve_in_span(basis, v);
    if (!x) throw Error(Err::Internal, "vector outside lattice span");
    IVec out(x->size());
    for (size_t i = 0; i < x->size(); ++i) {
        if (boost::multiprecision::denominator((*x)[i]) != 1)
            throw Error(Err::Internal, "non-integral coordinates in saturated basis");
        out[i] = Int(boost::multiprecision::numerator((*x)[i]));
    }
    return out;
}

} // namespace

int WeightedFan::dim() const {
    if (cones.empty()) return -1;
    return cone_dim(cones.front().cone);
}

bool WeightedFan::pure() const {
    int d = dim();
    for (const auto& wc : cones)
        if (cone_dim(wc.cone) != d) return false;
    return true;
}

WeightedFan make_fan(int ambient_dim, std::vector<WCone> cones) {
    const int m = static_cast<int>(cones.size());
    std::vector<Cone> canon(m);
    std::vector<ConeKey> keys(m);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) {
        canon[i] = canonical(cones[i].cone);
        keys[i] = cone_key(canon[i]);
    }
    std::map<ConeKey, WCone> agg;
    for (int i = 0; i < m; ++i) {
        auto it = agg.find(keys[i]);
        if (it == agg.end())
            agg.emplace(std::move(keys[i]), WCone{std::move(canon[i]), cones[i].weight});
        else
            it->second.weight += cones[i].weight;
    }
    WeightedFan f;
    f.ambient_dim = ambient_dim;
    for (auto& [key, wc] : agg)
        if (wc.weight != 0) f.cones.push_back(std::move(wc));
    return f;
}

namespace {

IVec primitive_normal_cached(const Cone& sigma, const IMat& bs, const IMat& bt) {
    int k = static_cast<int>(bs.size());
    if (static_cast<int>(bt.size()) != k - 1)
        throw Error(Err::Internal, "primitive_normal_vector: not a codimension-one pair");
    IMat c;
    for (const auto& row : bt) c.push_back(int_coords(bs, row));
    IMat ker = integer_kernel(c, k);
    if (ker.size() != 1) throw Error(Err::Internal, "quotient lattice not rank one");
    IVec g = ker[0];
    RowSpace tau_span;
    for (const auto& row : bt) tau_span.insert(row);
    IVec out_dir;
    for (const auto& r : cone_generators(sigma))
        if (!tau_span.contains(r)) { out_dir = r; break; }
    if (out_dir.empty()) throw Error(Err::Internal, "cone does not leave its facet span");
    if (dot(g, int_coords(bs, out_dir)) < 0) g = neg(g);
    IVec x = solve_unit(g);
    IVec u(sigma.ambient_dim, 0);
    for (int i = 0; i < k; ++i) u = add(u, scale(bs[i], x[i]));
    return u;
}

} // namespace

IVec primitive_normal_vector(const Cone& sigma, const Cone& tau) {
    return primitive_normal_cached(sigma, cone_lattice(sigma), cone_lattice(tau));
}

bool is_balanced(const WeightedFan& f, BalanceWitness* witness) {
    if (f.empty()) return true;
    if (!f.pure()) throw Error(Err::NotPure, "balancing requires a pure fan");
    int k = f.dim();
    if (k == 0) return true;
    const int m = static_cast<int>(f.cones.size());
    std::vector<std::vector<std::pair<ConeKey, Cone>>> facets(m);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i)
        for (auto& tau : cone_facets(f.cones[i].cone)) {
            ConeKey key = cone_key(tau);
            facets[i].emplace_back(std::move(key), std::move(tau));
        }
    std::map<ConeKey, std::vector<std::pair<size_t, Cone>>, std::less<>> around;
    for (int i = 0; i < m; ++i)
        for (auto& [key, tau] : facets[i]) around[key].emplace_back(i, std::move(tau));

    std::vector<IMat> sigma_lattice(m);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) sigma_lattice[i] = cone_lattice(f.cones[i].cone);

    std::vector<const std::vector<std::pair<size_t, Cone>>*> faces;
    faces.reserve(around.size());
    for (auto& [key, incident] : around) faces.push_back(&incident);
    std::vector<char> bad(faces.size(), 0);
    std::vector<IVec> residuals(faces.size());
#pragma omp parallel for schedule(dynamic)
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& incident = *faces[fi];
        const Cone& tau = incident.front().second;
        const IMat bt = cone_lattice(tau);
        IVec residual(f.ambient_dim, 0);
        for (const auto& [i, t] : incident) {
            IVec u = primitive_normal_cached(f.cones[i].cone, sigma_lattice[i], bt);
            residual = add(residual, scale(u, f.cones[i].weight));
        }
        RowSpace tau_span;
        for (const auto& row : bt) tau_span.insert(row);
        if (!is_zero(residual) && !tau_span.contains(residual)) {
            bad[fi] = 1;
            residuals[fi] = std::move(residual);
        }
    }
    for (size_t fi = 0; fi < faces.size(); ++fi)
        if (bad[fi]) {
            if (witness) {
                witness->tau = faces[fi]->front().second;
                witness->residual = residuals[fi];
            }
            return false;
        }
    return true;
}

WeightedFan star_fan(const WeightedFan& f, const Cone& tau) {
    std::vector<WCone> out;
    bool found = false;
    for (const auto& wc : f.cones) {
        if (!is_face_of(wc.cone, tau)) continue;
        found = true;
        IMat lin = wc.cone.lineality;
        for (const auto& r : tau.rays) lin.push_back(r);
        for (const auto& l : tau.lineality) lin.push_back(l);
        out.push_back({make_cone(f.ambient_dim, wc.cone.rays, lin), wc.weight});
    }
    if (!found) throw Error(Err::ConeNotInFan, "star center is not a face of any cone");
    return make_fan(f.ambient_dim, std::move(out));
}

namespace {

struct Constraint {
    QVec a;
    Rat c;
    bool strict;
};

// Fourier-Motzkin feasibility of { y : a.y + c >= 0 (or > 0) } over Q.
bool fm_feasible(std::vector<Constraint> cons, int nvars) {
    auto normalize = [](Constraint& cn) {
        QVec all = cn.a;
        all.push_back(cn.c);
        IVec p = q_primitive(all);
        for (size_t i = 0; i < cn.a.size(); ++i) cn.a[i] = Rat(p[i]);
        cn.c = Rat(p.back());
    };
    for (int var = 0; var < nvars; ++var) {
        std::vector<Constraint> keep, lower, upper;
        for (auto& cn : cons) {
            if (cn.a[var] > 0) lower.push_back(cn);
            else if (cn.a[var] < 0) upper.push_back(cn);
            else keep.push_back(cn);
        }
        std::set<std::pair<std::vector<Int>, bool>> seen;
        std::vector<Constraint> next;
        auto push = [&](Constraint cn) {
            normalize(cn);
            std::vector<Int> key;
            for (const auto& q : cn.a) key.push_back(Int(boost::multiprecision::numerator(q)));
            key.push_back(Int(boost::multiprecision::numerator(cn.c)));
            if (seen.insert({key, cn.strict}).second) next.push_back(std::move(cn));
        };
        for (auto& cn : keep) push(cn);
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                Constraint cn;
                cn.a.assign(cons.front().a.size(), Rat(0));
                Rat pl = lo.a[var], pu = -up.a[var]; // both positive
                for (size_t t = 0; t < cn.a.size(); ++t) cn.a[t] = lo.a[t] * pu + up.a[t] * pl;
                cn.c = lo.c * pu + up.c * pl;
                cn.strict = lo.strict || up.strict;
                push(cn);
            }
        cons = std::move(next);
    }
    for (const auto& cn : cons)
        if (cn.strict ? cn.c <= 0 : cn.c < 0) return false;
    return true;
}

// Particular rational solution and integer kernel basis of E x = rhs.
std::optional<std::pair<QVec, IMat>> solve_affine(const IMat& e, const QVec& rhs, int n) {
    IMat kernel = integer_kernel(e, n);
    int m = static_cast<int>(e.size());
    QMat aug(m, QVec(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(e[i][j]);
        aug[i][n] = rhs[i];
    }
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (aug[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        Rat d = aug[row][col];
        for (auto& x : aug[row]) x /= d;
        for (int i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat c = aug[i][col];
            for (int j = 0; j <= n; ++j) aug[i][j] -= c * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (aug[i][n] != 0) return std::nullopt;
    QVec x0(n, Rat(0));
    for (int i = 0; i < row; ++i) x0[pivot_col[i]] = aug[i][n];
    return std::make_pair(std::move(x0), std::move(kernel));
}

Rat qdot_iq(const IVec& a, const QVec& x) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
    return s;
}

} // namespace

WeightedFan stable_intersection(const WeightedFan& a, const WeightedFan& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw Error(Err::DimensionMismatch, "stable intersection needs equal ambient dimensions");
    int n = a.ambient_dim;
    WeightedFan empty_fan;
    empty_fan.ambient_dim = n;
    if (a.empty() || b.empty()) return empty_fan;
    int k = a.dim() + b.dim() - n;
    if (k < 0) return empty_fan;

    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    const int budget = 24;
    for (int attempt = 0; attempt < budget; ++attempt) {
        QVec v(n);
        Int num = 1;
        for (int i = 0; i < n; ++i) {
            num *= attempt + 2;
            v[i] = Rat(num, Int(primes[attempt]));
        }
        bool generic = true;
        std::vector<WCone> found;
        for (const auto& wa : a.cones) {
            if (!generic) break;
            HRep ha = hrep(wa.cone);
            for (const auto& wb : b.cones) {
                // meet condition: exists x with x in sigma and x - v in sigma'
                HRep hb = hrep(wb.cone);
                IMat e = ha.eq;
                QVec rhs(ha.eq.size(), Rat(0));
                for (const auto& row : hb.eq) {
                    e.push_back(row);
                    rhs.push_back(qdot_iq(row, v));
                }
                auto aff = solve_affine(e, rhs, n);
                if (!aff) continue;
                const auto& [x0, kernel] = *aff;
                int w = static_cast<int>(kernel.size());
                auto constraints = [&](bool strict) {
                    std::vector<Constraint> cons;
                    auto add_row = [&](const IVec& f, const Rat& shift) {
                        Constraint cn;
                        cn.a.resize(w);
                        for (int i = 0; i < w; ++i) cn.a[i] = Rat(dot(kernel[i], f));
                        cn.c = qdot_iq(f, x0) - shift;
                        cn.strict = strict;
                        cons.push_back(std::move(cn));
                    };
                    for (const auto& f : ha.ineq) add_row(f, Rat(0));
                    for (const auto& f : hb.ineq) add_row(f, qdot_iq(f, v));
                    return cons;
                };
                if (fm_feasible(constraints(true), w)) {
                    IMat gens = cone_lattice(wa.cone);
                    for (const auto& row : cone_lattice(wb.cone)) gens.push_back(row);
                    if (rank_of(gens) != n) { generic = false; break; }
                    // the pair carries weight only when its honest intersection
                    // is a k-cell of the common refinement
                    Cone gamma = intersect_cones(wa.cone, wb.cone);
                    if (cone_dim(gamma) != k) continue;
                    found.push_back({gamma, wa.weight * wb.weight * lattice_index(gens, n)});
                } else if (fm_feasible(constraints(false), w)) {
                    generic = false; // cones touch only along boundaries
                    break;
                }
            }
        }
        if (generic) return make_fan(n, std::move(found));
    }
    throw Error(Err::GenericityFailure, "no generic displacement vector within the retry budget");
}

namespace {

// dim of Lambda^p of the ambient space; once the accumulated row space hits
// this cap no further cone can enlarge it.
long fp_cap(int ambient_dim, int p) {
    long c = 1;
    for (int i = 1; i <= p; ++i) c = c * (ambient_dim - i + 1) / i;
    return c;
}

std::vector<IVec> wedge_rows(const Cone& c, int p) {
    return wedge_rows_of(cone_generators(c), c.ambient_dim, p);
}

} // namespace

// Normalized wedge rows (all p-subsets of the generators).
std::vector<IVec> wedge_rows_of(const IMat& gens, int ambient_dim, int p) {
    int m = static_cast<int>(gens.size());
    int n = ambient_dim;
    std::vector<std::vector<int>> col_subsets;
    for_each_subset(n, p, [&](const std::vector<int>& cols) { col_subsets.push_back(cols); });
    std::vector<IVec> rows;
    for_each_subset(m, p, [&](const std::vector<int>& sel) {
        IVec row;
        row.reserve(col_subsets.size());
        for (const auto& cols : col_subsets) {
            IMat sub(p, IVec(p));
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) sub[i][j] = gens[sel[i]][cols[j]];
            row.push_back(determinant(std::move(sub)));
        }
        if (!is_zero(row)) rows.push_back(primitive(row));
    });
    return rows;
}

int fp_dimension_serial(const WeightedFan& f, int p) {
    if (p < 0 || (f.dim() >= 0 && p > f.dim()) || (f.empty() && p > 0))
        throw Error(Err::KOutOfRange, "wedge degree outside 0..dim");
    if (p == 0) return f.empty() ? 0 : 1;
    const long cap = fp_cap(f.ambient_dim, p);
    std::set<IVec> seen;
    RowSpace rs;
    for (const auto& wc : f.cones) {
        for (auto& r : wedge_rows(wc.cone, p))
            if (seen.insert(r).second) rs.insert(r);
        if (rs.rank() == cap) return static_cast<int>(cap);
    }
    return rs.rank();
}

int fp_dimension(const WeightedFan& f, int p) {
    if (p < 0 || (f.dim() >= 0 && p > f.dim()) || (f.empty() && p > 0))
        throw Error(Err::KOutOfRange, "wedge degree outside 0..dim");
    if (p == 0) return f.empty() ? 0 : 1;
    const long cap = fp_cap(f.ambient_dim, p);
    const int m = static_cast<int>(f.cones.size());
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const int block = std::max(1, threads) * 4;
    std::set<IVec> seen;
    RowSpace rs;
    // generate wedge rows a block of cones at a time so the rank accumulation
    // can stop early once Lambda^p is exhausted
    for (int lo = 0; lo < m; lo += block) {
        const int hi = std::min(m, lo + block);
        std::vector<std::vector<IVec>> rows(hi - lo);
#pragma omp parallel for schedule(dynamic)
        for (int i = lo; i < hi; ++i) rows[i - lo] = wedge_rows(f.cones[i].cone, p);
        for (auto& cone_rows : rows)
            for (auto& r : cone_rows)
                if (seen.insert(r).second) rs.insert(r);
        if (rs.rank() == cap) return static_cast<int>(cap);
    }
    return rs.rank();
}

Int degree0(const WeightedFan& z) {
    if (!z.empty() && z.dim() != 0)
        throw Error(Err::NotZeroDimensional, "degree of a positive-dimensional cycle");
    Int d = 0;
    for (const auto& wc : z.cones) d += wc.weight;
    return d;
}

WeightedFan apply_unimodular(const WeightedFan& f, const IMat& u) {
    Int d = determinant(u);
    if (d != 1 && d != -1)
        throw Error(Err::NotUnimodular, "transform determinant is not a unit");
    auto image = [&](const IMat& vs) {
        IMat out;
        for (const auto& v : vs) {
            IVec y(u.size(), 0);
            for (size_t i = 0; i < u.size(); ++i)
                for (size_t j = 0; j < v.size(); ++j) y[i] += u[i][j] * v[j];
            out.push_back(std::move(y));
        }
        return out;
    };
    WeightedFan out;
    out.ambient_dim = f.ambient_dim;
    for (const auto& wc : f.cones)
        out.cones.push_back(
            {make_cone(f.ambient_dim, image(wc.cone.rays), image(wc.cone.lineality)), wc.weight});
    return out;
}

namespace {

IVec sign_normalized(const IVec& v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return neg(v);
    }
    return v;
}

std::map<ConeKey, Int> refine_by(const WeightedFan& f, const IMat& hyperplanes) {
    std::map<ConeKey, Int> out;
    for (const auto& wc : f.cones) {
        std::vector<Cone> pieces = {wc.cone};
        for (const auto& h : hyperplanes) {
            std::vector<Cone> next;
            for (const auto& c : pieces)
                for (auto& piece : split_cone(c, h)) next.push_back(std::move(piece));
            pieces = std::move(next);
        }
        for (const auto& piece : pieces) out[cone_key(piece)] += wc.weight;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

bool cycles_equal(const WeightedFan& a, const WeightedFan& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    std::set<IVec> hset;
    for (const auto* f : {&a, &b})
        for (const auto& wc : f->cones) {
            HRep h = hrep(wc.cone);
            for (const auto& v : h.ineq) hset.insert(sign_normalized(primitive(v)));
            for (const auto& v : h.eq) hset.insert(sign_normalized(primitive(v)));
        }
    IMat hyps(hset.begin(), hset.end());
    auto wa = refine_by(a, hyps);
    auto wb = refine_by(b, hyps);
    return wa == wb;
}

int cell_dim(const Cell& c) {
    IMat gens = cone_generators(c.cone);
    for (size_t i = 1; i < c.vertices.size(); ++i) {
        QVec d(c.vertices[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = c.vertices[i][j] - c.vertices[0][j];
        IVec p = q_primitive(d);
        if (!is_zero(p)) gens.push_back(p);
    }
    return rank_of(gens);
}

WeightedFan recession_cycle(const PolyhedralCycle& a) {
    WeightedFan out;
    out.ambient_dim = a.ambient_dim;
    if (a.cells.empty()) return out;
    int k = 0;
    for (const auto& cell : a.cells) k = std::max(k, cell_dim(cell));
    std::vector<WCone> cones;
    for (const auto& cell : a.cells)
        if (cone_dim(cell.cone) == k) cones.push_back({cell.cone, cell.weight});
    WeightedFan f = make_fan(a.ambient_dim, std::move(cones));
    for (size_t i = 0; i < f.cones.size(); ++i)
        for (size_t j = i + 1; j < f.cones.size(); ++j) {
            Cone meet = intersect_cones(f.cones[i].cone, f.cones[j].cone);
            if (!is_face_of(f.cones[i].cone, meet) || !is_face_of(f.cones[j].cone, meet))
                throw Error(Err::RecessionNotFan, "recession cones do not fit into a fan");
        }
    return f;
}

} // namespace tropcsm
