#include "tropcsm/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace tropcsm {

namespace {

Rat qdot(const IVec& a, const QVec& x) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
    return s;
}

// Solve the square invertible rational system A y = b.
QVec solve_square_q(QMat a, QVec b) {
    int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw Error(Err::Internal, "singular system in solve_square_q");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat d = a[col][col];
        for (auto& x : a[col]) x /= d;
        b[col] /= d;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat c = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= c * a[col][j];
            b[i] -= c * b[col];
        }
    }
    return b;
}

// Ambient functional n (in the row span of sp) with sp * n = z, primitivized.
IVec span_functional(const IMat& sp, const IVec& z) {
    int s = static_cast<int>(sp.size());
    QMat gram(s, QVec(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) gram[i][j] = Rat(dot(sp[i], sp[j]));
    QVec zq(s);
    for (int i = 0; i < s; ++i) zq[i] = Rat(z[i]);
    QVec y = solve_square_q(gram, zq);
    int n = static_cast<int>(sp[0].size());
    QVec out(n, Rat(0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) out[j] += y[i] * Rat(sp[i][j]);
    return q_primitive(out);
}

// Integer coordinates of each generator in the saturated span basis.
IMat span_coords(const IMat& sp, const IMat& gens) {
    IMat coords;
    for (const auto& g : gens) {
        auto x = solve_in_span(sp, g);
        if (!x) throw Error(Err::Internal, "generator outside its own span");
        IVec ci(x->size());
        for (size_t j = 0; j < x->size(); ++j) {
            if (boost::multiprecision::denominator((*x)[j]) != 1)
                throw Error(Err::Internal, "non-integral coordinates in saturated basis");
            ci[j] = Int(boost::multiprecision::numerator((*x)[j]));
        }
        coords.push_back(std::move(ci));
    }
    return coords;
}

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

// Facet normals (primitive, in the span, >= 0 on every generator) of the cone
// spanned by gens; gens must include both signs of lineality directions.
IMat enumerate_facets(const IMat& gens, int ambient_dim) {
    if (gens.empty()) return {};
    IMat sp = saturation(gens, ambient_dim);
    int s = static_cast<int>(sp.size());
    if (s == 0) return {};
    IMat coords = span_coords(sp, gens);
    int m = static_cast<int>(coords.size());
    std::set<IVec> seen;
    IMat out;
    for_each_subset(m, s - 1, [&](const std::vector<int>& idx) {
        IMat sub;
        for (int i : idx) sub.push_back(coords[i]);
        if (rank_of(sub) != s - 1) return;
        IMat k = integer_kernel(sub, s);
        if (k.size() != 1) return;
        IVec z = k[0];
        bool pos = false, negv = false;
        for (const auto& c : coords) {
            Int d = dot(z, c);
            if (d > 0) pos = true;
            if (d < 0) negv = true;
        }
        if (pos && negv) return; // not a supporting hyperplane
        if (!pos && !negv) return;
        if (negv) z = neg(z);
        if (seen.insert(z).second) out.push_back(span_functional(sp, z));
    });
    return out;
}

IMat with_negatives(const IMat& lineality) {
    IMat out = lineality;
    for (const auto& v : lineality) out.push_back(neg(v));
    return out;
}

} // namespace

Cone make_cone(int ambient_dim, const IMat& rays, const IMat& lineality) {
    Cone c;
    c.ambient_dim = ambient_dim;
    // simplicial fast path: deduped rays independent of each other and of the
    // lineality need no facet enumeration
    {
        std::set<IVec> seen;
        IMat prim_rays, gens;
        for (const auto& r : rays)
            if (!is_zero(r)) {
                IVec p = primitive(r);
                if (seen.insert(p).second) prim_rays.push_back(std::move(p));
            }
        IMat lin;
        for (const auto& l : lineality)
            if (!is_zero(l)) lin.push_back(l);
        gens = prim_rays;
        for (const auto& l : lin) gens.push_back(l);
        if (gens.empty()) return c;
        if (rank_of(gens) == static_cast<int>(gens.size())) {
            c.lineality = saturation(lin, ambient_dim);
            c.rays = std::move(prim_rays);
            return c;
        }
    }
    IMat gens;
    for (const auto& r : rays)
        if (!is_zero(r)) gens.push_back(primitive(r));
    for (const auto& l : with_negatives(lineality))
        if (!is_zero(l)) gens.push_back(primitive(l));
    IMat facets = enumerate_facets(gens, ambient_dim);
    IMat eq = integer_kernel(gens, ambient_dim);
    // true lineality = span cut out by all facet inequalities
    IMat cut = facets;
    for (const auto& e : eq) cut.push_back(e);
    c.lineality = integer_kernel(cut, ambient_dim);
    RowSpace lin_space;
    for (const auto& l : c.lineality) lin_space.insert(l);
    std::set<IVec> seen;
    for (const auto& r : rays) {
        if (is_zero(r)) continue;
        IVec p = primitive(r);
        if (lin_space.contains(p)) continue;
        if (seen.insert(p).second) c.rays.push_back(p);
    }
    return c;
}

Cone origin_cone(int ambient_dim) {
    Cone c;
    c.ambient_dim = ambient_dim;
    return c;
}

IMat cone_generators(const Cone& c) {
    IMat g = c.rays;
    for (const auto& l : c.lineality) g.push_back(l);
    return g;
}

int cone_dim(const Cone& c) { return rank_of(cone_generators(c)); }

int lineality_dim(const Cone& c) { return static_cast<int>(c.lineality.size()); }

IMat cone_lattice(const Cone& c) { return saturation(cone_generators(c), c.ambient_dim); }

HRep hrep(const Cone& c) {
    IMat gens = c.rays;
    for (const auto& l : with_negatives(c.lineality)) gens.push_back(l);
    HRep h;
    h.eq = integer_kernel(gens, c.ambient_dim);
    if (h.eq.empty() && gens.empty()) {
        // origin cone: x = 0
        h.eq.assign(c.ambient_dim, IVec(c.ambient_dim, 0));
        for (int i = 0; i < c.ambient_dim; ++i) h.eq[i][i] = 1;
    }
    if (!gens.empty()) h.ineq = enumerate_facets(gens, c.ambient_dim);
    return h;
}

bool hrep_contains(const HRep& h, const QVec& x) {
    for (const auto& e : h.eq)
        if (qdot(e, x) != 0) return false;
    for (const auto& f : h.ineq)
        if (qdot(f, x) < 0) return false;
    return true;
}

bool cone_contains(const Cone& c, const QVec& x) { return hrep_contains(hrep(c), x); }

bool cone_contains(const Cone& c, const IVec& x) { return cone_contains(c, to_rat(x)); }

bool in_relative_interior(const Cone& c, const QVec& x) {
    HRep h = hrep(c);
    for (const auto& e : h.eq)
        if (qdot(e, x) != 0) return false;
    for (const auto& f : h.ineq)
        if (qdot(f, x) <= 0) return false;
    return true;
}

IVec relative_interior_point(const Cone& c) {
    IVec p(c.ambient_dim, 0);
    for (const auto& r : canonical(c).rays) p = add(p, r);
    return p;
}

namespace {

// Quotient images (by the lineality lattice) of the extreme rays, sorted.
IMat extreme_quotient_rays(const Cone& c) {
    Cone cc = canonical(c);
    IMat proj = integer_kernel(c.lineality, c.ambient_dim);
    IMat out;
    for (const auto& r : cc.rays) {
        IVec q(proj.size());
        for (size_t i = 0; i < proj.size(); ++i) q[i] = dot(proj[i], r);
        out.push_back(primitive(q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ConeKey cone_key(const Cone& c) {
    return {c.ambient_dim, c.lineality, extreme_quotient_rays(c)};
}

Cone canonical(const Cone& c) {
    if (c.rays.empty()) return c;
    // simplicial fast path: independent generators make every ray extreme
    if (rank_of(cone_generators(c)) ==
        static_cast<int>(c.rays.size() + c.lineality.size())) {
        IMat proj = integer_kernel(c.lineality, c.ambient_dim);
        std::map<IVec, IVec> by_image;
        for (const auto& r : c.rays) {
            IVec q(proj.size());
            for (size_t i = 0; i < proj.size(); ++i) q[i] = dot(proj[i], r);
            by_image.emplace(primitive(q), r);
        }
        Cone out;
        out.ambient_dim = c.ambient_dim;
        out.lineality = c.lineality;
        for (auto& [q, r] : by_image) out.rays.push_back(r);
        return out;
    }
    IMat gens = c.rays;
    for (const auto& l : with_negatives(c.lineality)) gens.push_back(l);
    IMat facets = enumerate_facets(gens, c.ambient_dim);
    IMat eq = integer_kernel(gens, c.ambient_dim);
    int l = lineality_dim(c);
    IMat proj = integer_kernel(c.lineality, c.ambient_dim);
    std::map<IVec, IVec> by_image; // quotient image -> lift, sorted
    for (const auto& r : c.rays) {
        IMat tight = eq;
        for (const auto& f : facets)
            if (dot(f, r) == 0) tight.push_back(f);
        if (static_cast<int>(integer_kernel(tight, c.ambient_dim).size()) != l + 1) continue;
        IVec q(proj.size());
        for (size_t i = 0; i < proj.size(); ++i) q[i] = dot(proj[i], r);
        by_image.emplace(primitive(q), r);
    }
    Cone out;
    out.ambient_dim = c.ambient_dim;
    out.lineality = c.lineality;
    for (auto& [q, r] : by_image) out.rays.push_back(r);
    return out;
}

bool cones_equal(const Cone& a, const Cone& b) { return cone_key(a) == cone_key(b); }

bool ConeLess::operator()(const Cone& a, const Cone& b) const {
    return cone_key(a) < cone_key(b);
}

Cone cone_from_hrep(int ambient_dim, const IMat& eq, const IMat& ineq) {
    IMat k = integer_kernel(eq, ambient_dim); // basis of the equality subspace
    int w = static_cast<int>(k.size());
    if (w == 0) return origin_cone(ambient_dim);
    // inequality normals pulled back to the subspace coordinates
    std::set<IVec> nset;
    for (const auto& a : ineq) {
        IVec b(w);
        for (int i = 0; i < w; ++i) b[i] = dot(k[i], a);
        if (!is_zero(b)) nset.insert(primitive(b));
    }
    IMat normals(nset.begin(), nset.end());
    IMat lin_y = integer_kernel(normals, w);
    int l = static_cast<int>(lin_y.size());
    RowSpace lin_space;
    for (const auto& v : lin_y) lin_space.insert(v);
    IMat rays_y;
    int m = static_cast<int>(normals.size());
    for_each_subset(m, w - l - 1, [&](const std::vector<int>& idx) {
        IMat sub;
        for (int i : idx) sub.push_back(normals[i]);
        IMat ker = integer_kernel(sub, w);
        if (static_cast<int>(ker.size()) != l + 1) return;
        IVec r;
        for (const auto& v : ker)
            if (!lin_space.contains(v)) { r = v; break; }
        if (r.empty()) return;
        bool pos = false, negv = false;
        for (const auto& nn : normals) {
            Int d = dot(nn, r);
            if (d > 0) pos = true;
            if (d < 0) negv = true;
        }
        if (pos && negv) return;
        if (negv) r = neg(r);
        rays_y.push_back(std::move(r));
    });
    auto back = [&](const IVec& y) {
        IVec x(ambient_dim, 0);
        for (int i = 0; i < w; ++i) x = add(x, scale(k[i], y[i]));
        return x;
    };
    IMat rays_x, lin_x;
    for (const auto& r : rays_y) rays_x.push_back(back(r));
    for (const auto& v : lin_y) lin_x.push_back(back(v));
    return make_cone(ambient_dim, rays_x, lin_x);
}

Cone intersect_cones(const Cone& a, const Cone& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw Error(Err::DimensionMismatch, "intersecting cones in different ambient spaces");
    HRep ha = hrep(a), hb = hrep(b);
    IMat eq = ha.eq, ineq = ha.ineq;
    eq.insert(eq.end(), hb.eq.begin(), hb.eq.end());
    ineq.insert(ineq.end(), hb.ineq.begin(), hb.ineq.end());
    return cone_from_hrep(a.ambient_dim, eq, ineq);
}

bool is_face_of(const Cone& sigma, const Cone& tau) {
    if (sigma.ambient_dim != tau.ambient_dim) return false;
    HRep h = hrep(sigma);
    IMat tgens = tau.rays;
    for (const auto& l : with_negatives(tau.lineality)) tgens.push_back(l);
    for (const auto& g : tgens)
        if (!hrep_contains(h, to_rat(g))) return false;
    // facets of sigma tight on all of tau cut out the smallest face containing it
    IMat tight_rays;
    for (const auto& r : sigma.rays) {
        bool on_face = true;
        for (const auto& f : h.ineq) {
            bool tight_on_tau = true;
            for (const auto& g : tgens)
                if (dot(f, g) != 0) { tight_on_tau = false; break; }
            if (tight_on_tau && dot(f, r) != 0) { on_face = false; break; }
        }
        if (on_face) tight_rays.push_back(r);
    }
    Cone face = make_cone(sigma.ambient_dim, tight_rays, sigma.lineality);
    return cones_equal(face, tau);
}

std::vector<Cone> cone_facets(const Cone& c) {
    // simplicial fast path: facets drop one ray each
    if (!c.rays.empty() && rank_of(cone_generators(c)) ==
                               static_cast<int>(c.rays.size() + c.lineality.size())) {
        std::vector<Cone> out;
        for (size_t i = 0; i < c.rays.size(); ++i) {
            IMat rest;
            for (size_t j = 0; j < c.rays.size(); ++j)
                if (j != i) rest.push_back(c.rays[j]);
            out.push_back(make_cone(c.ambient_dim, rest, c.lineality));
        }
        return out;
    }
    HRep h = hrep(c);
    std::vector<Cone> out;
    std::set<std::tuple<int, IMat, IMat>> seen;
    for (const auto& f : h.ineq) {
        IMat tight;
        for (const auto& r : c.rays)
            if (dot(f, r) == 0) tight.push_back(r);
        Cone face = make_cone(c.ambient_dim, tight, c.lineality);
        if (seen.insert(cone_key(face)).second) out.push_back(std::move(face));
    }
    return out;
}

std::vector<Cone> split_cone(const Cone& c, const IVec& h) {
    bool pos = false, negv = false;
    IMat gens = c.rays;
    for (const auto& l : with_negatives(c.lineality)) gens.push_back(l);
    for (const auto& g : gens) {
        Int d = dot(h, g);
        if (d > 0) pos = true;
        if (d < 0) negv = true;
    }
    if (!pos || !negv) return {c};
    HRep hr = hrep(c);
    IMat ineq_plus = hr.ineq, ineq_minus = hr.ineq;
    ineq_plus.push_back(h);
    ineq_minus.push_back(neg(h));
    return {cone_from_hrep(c.ambient_dim, hr.eq, ineq_plus),
            cone_from_hrep(c.ambient_dim, hr.eq, ineq_minus)};
}

} // namespace tropcsm
