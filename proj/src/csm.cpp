#include "tropcsm/csm.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace tropcsm {

Int csm_chain_weight(const Matroid& m, const std::vector<Subset>& chain) {
    int d = m.rank() - 1;
    int k = static_cast<int>(chain.size());
    Subset full = (1u << m.size()) - 1;
    Int w = ((d - k) % 2 != 0) ? -1 : 1;
    Subset prev = 0;
    for (int i = 0; i <= k; ++i) {
        Subset next = (i < k) ? chain[i] : full;
        w *= m.minor(next, prev).beta();
        if (w == 0) break;
        prev = next;
    }
    return w;
}

CsmCycle csm_cycle(const Matroid& m, int k) {
    CsmCycle out{m, k, {}, {}};
    out.fan.ambient_dim = m.size() - 1;
    if (m.has_loops()) return out;
    int d = m.rank() - 1;
    if (k < 0 || k > d)
        throw Error(Err::KOutOfRange, "csm grade outside 0..rank-1");
    // interval betas are shared across chains, so memoize them
    std::map<std::pair<Subset, Subset>, Int> beta_cache;
    Subset full = (1u << m.size()) - 1;
    auto interval_beta = [&](Subset prev, Subset next) -> const Int& {
        auto it = beta_cache.find({prev, next});
        if (it == beta_cache.end())
            it = beta_cache.emplace(std::make_pair(prev, next), m.minor(next, prev).beta()).first;
        return it->second;
    };
    std::vector<WCone> cones;
    for (auto& chain : flat_chains(m, k)) {
        Int w = ((d - k) % 2 != 0) ? -1 : 1;
        Subset prev = 0;
        for (int i = 0; i <= k; ++i) {
            Subset next = (i < k) ? chain[i] : full;
            w *= interval_beta(prev, next);
            if (w == 0) break;
            prev = next;
        }
        if (w != 0) cones.push_back({chain_cone(m.size(), chain), w});
        out.cones.push_back({std::move(chain), std::move(w)});
    }
    out.fan = make_fan(m.size() - 1, std::move(cones));
    return out;
}

std::vector<CsmCycle> csm_total(const Matroid& m) {
    std::vector<CsmCycle> out;
    for (int k = 0; k <= m.rank() - 1; ++k) out.push_back(csm_cycle(m, k));
    return out;
}

Polynomial psi_polynomial(const WeightedFan& f) {
    if (f.empty()) throw Error(Err::EmptyFan, "psi of the empty fan");
    int d = f.dim();
    std::vector<Int> c(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        Int dim = fp_dimension(f, i);
        c[d - i] = (i % 2 != 0) ? -dim : dim;
    }
    return Polynomial(std::move(c));
}

WeightedFan star_of_chain(const BergmanFan& bf, const std::vector<Subset>& chain) {
    if (bf.fan.empty()) throw Error(Err::EmptyFan, "star inside an empty fan");
    int n = bf.matroid.size();
    IMat lin;
    for (Subset f : chain) lin.push_back(flat_ray(n, f));
    WeightedFan star;
    star.ambient_dim = bf.ambient_dim;
    for (const auto& mc : bf.max_chains) {
        bool contains = std::all_of(chain.begin(), chain.end(), [&](Subset f) {
            return std::find(mc.begin(), mc.end(), f) != mc.end();
        });
        if (!contains) continue;
        Cone c;
        c.ambient_dim = bf.ambient_dim;
        c.lineality = lin;
        for (Subset f : mc)
            if (std::find(chain.begin(), chain.end(), f) == chain.end())
                c.rays.push_back(flat_ray(n, f));
        star.cones.push_back({std::move(c), Int(1)});
    }
    if (star.cones.empty())
        throw Error(Err::ConeNotInFan, "chain is not a chain of flats");
    return star;
}

namespace {

long binom(int n, int p) {
    long c = 1;
    for (int i = 1; i <= p; ++i) c = c * (n - i + 1) / i;
    return c;
}

// signalled when the machine-integer echelon would overflow; the caller
// falls back to the arbitrary-precision route
struct FastOverflow {};

long long ll_of(const Int& v) {
    if (v > std::numeric_limits<long long>::max() / 4 ||
        v < std::numeric_limits<long long>::min() / 4)
        throw FastOverflow{};
    return v.convert_to<long long>();
}

// exact integer row echelon over machine words: fraction-free reduction with
// gcd normalization, 128-bit intermediates, overflow raises FastOverflow
class FastRowSpace {
public:
    bool insert(std::vector<long long> r) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const long long c = r[pivots_[k]];
            if (c == 0) continue;
            const long long pv = rows_[k][pivots_[k]];
            long long g = 0;
            for (size_t j = 0; j < r.size(); ++j) {
                __int128 v = (__int128)pv * r[j] - (__int128)c * rows_[k][j];
                if (v > std::numeric_limits<long long>::max() ||
                    v < std::numeric_limits<long long>::min())
                    throw FastOverflow{};
                r[j] = (long long)v;
                g = std::gcd(g, r[j]);
            }
            if (g > 1)
                for (auto& x : r) x /= g;
        }
        size_t p = 0;
        while (p < r.size() && r[p] == 0) ++p;
        if (p == r.size()) return false;
        if (r[p] < 0)
            for (auto& x : r) x = -x;
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

private:
    std::vector<std::vector<long long>> rows_;
    std::vector<size_t> pivots_;
};

} // namespace

PsiOracle::PsiOracle(BergmanFan bf) : bf_(std::move(bf)) {
    d_ = bf_.fan.dim();
    once_.resize(bf_.max_chains.size());
    for (auto& f : once_) f = std::make_unique<std::once_flag>();
    rows_.resize(bf_.max_chains.size());
}

const std::vector<std::vector<std::vector<long long>>>& PsiOracle::rows_for(size_t mc) const {
    std::call_once(*once_[mc], [&] {
        IMat gens;
        for (Subset f : bf_.max_chains[mc]) gens.push_back(flat_ray(bf_.matroid.size(), f));
        auto& per_p = rows_[mc];
        per_p.resize(d_);
        for (int p = 1; p <= d_; ++p) {
            FastRowSpace rs;
            for (const auto& r : wedge_rows_of(gens, bf_.ambient_dim, p)) {
                std::vector<long long> row(r.size());
                for (size_t j = 0; j < r.size(); ++j) row[j] = ll_of(r[j]);
                rs.insert(std::move(row));
            }
            per_p[p - 1] = rs.rows();
        }
    });
    return rows_[mc];
}

PsiWeight PsiOracle::chain_weight(const std::vector<Subset>& chain) const {
    if (bf_.fan.empty()) throw Error(Err::EmptyFan, "star inside an empty fan");
    std::vector<size_t> containing;
    for (size_t i = 0; i < bf_.max_chains.size(); ++i) {
        const auto& mc = bf_.max_chains[i];
        bool contains = std::all_of(chain.begin(), chain.end(), [&](Subset f) {
            return std::find(mc.begin(), mc.end(), f) != mc.end();
        });
        if (contains) containing.push_back(i);
    }
    if (containing.empty()) throw Error(Err::ConeNotInFan, "chain is not a chain of flats");

    // psi of the star, degree by degree, stopping each F_p accumulation as
    // soon as Lambda^p of the ambient space is exhausted
    std::vector<Int> coeffs(d_ + 1, 0);
    coeffs[d_] = 1; // fp_0 of a nonempty fan
    for (int p = 1; p <= d_; ++p) {
        const long cap = binom(bf_.ambient_dim, p);
        long rank;
        try {
            FastRowSpace rs;
            for (size_t mc : containing) {
                for (const auto& r : rows_for(mc)[p - 1]) rs.insert(r);
                if (rs.rank() == cap) break;
            }
            rank = rs.rank();
        } catch (const FastOverflow&) {
            // arbitrary-precision fallback from the raw wedge rows
            std::set<IVec> seen;
            RowSpace rs;
            for (size_t mc : containing) {
                IMat gens;
                for (Subset f : bf_.max_chains[mc])
                    gens.push_back(flat_ray(bf_.matroid.size(), f));
                for (const auto& r : wedge_rows_of(gens, bf_.ambient_dim, p))
                    if (seen.insert(r).second) rs.insert(r);
                if (rs.rank() == cap) break;
            }
            rank = rs.rank();
        }
        coeffs[d_ - p] = (p % 2 != 0) ? -rank : rank;
    }

    PsiWeight pw;
    pw.psi = Polynomial(std::move(coeffs));
    pw.exponent = pw.psi.root_one_multiplicity();
    Polynomial q = pw.psi;
    for (size_t i = 0; i < chain.size(); ++i) {
        Polynomial next;
        if (!q.divide_by_x_minus_one(next))
            throw Error(Err::Internal, "psi of the star not divisible by (lambda-1)^k");
        q = next;
    }
    pw.weight = q.eval(1);
    return pw;
}

PsiWeight chain_weight_via_psi(const BergmanFan& bf, const std::vector<Subset>& chain) {
    return PsiOracle(bf).chain_weight(chain);
}

PsiWeight csm_weight_via_psi(const Matroid& m, const Cone& sigma) {
    BergmanFan bf = bergman_fan(m);
    if (bf.fan.empty() || sigma.ambient_dim != bf.ambient_dim)
        throw Error(Err::ConeNotInFan, "cone is not in the Bergman fan");
    ConeKey key = cone_key(canonical(sigma));
    for (const auto& chain : flat_chains(m, cone_dim(sigma))) {
        if (cone_key(chain_cone(m.size(), chain)) != key) continue;
        PsiWeight pw = chain_weight_via_psi(bf, chain);
        if (pw.weight != csm_chain_weight(m, chain))
            throw Error(Err::Internal, "psi-oracle weight disagrees with the direct formula");
        return pw;
    }
    throw Error(Err::ConeNotInFan, "cone is not in the Bergman fan");
}

ProductCheckReport product_check(const Matroid& m, const Matroid& mp) {
    if (m.size() != mp.size())
        throw Error(Err::DimensionMismatch, "product check needs equal ambient dimensions");
    int n = m.size();
    WeightedFan b1 = bergman_fan(m).fan, b2 = bergman_fan(mp).fan;
    if (b1.empty() || b2.empty())
        throw Error(Err::NotMatroidalIntersection, "a factor has a loop");
    WeightedFan s = stable_intersection(b1, b2);

    // catalog of candidate matroids for the stable intersection: the inputs,
    // uniforms, and direct sums of uniforms on contiguous label blocks
    std::vector<std::pair<std::string, Matroid>> catalog;
    catalog.emplace_back("left input", m);
    catalog.emplace_back("right input", mp);
    for (int r = 1; r <= n; ++r)
        catalog.emplace_back("U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                             Matroid::uniform(r, n));
    for (int a = 1; a < n; ++a)
        for (int r1 = 1; r1 <= a; ++r1)
            for (int r2 = 1; r2 <= n - a; ++r2)
                catalog.emplace_back("U(" + std::to_string(r1) + "," + std::to_string(a) + ")+U(" +
                                         std::to_string(r2) + "," + std::to_string(n - a) + ")",
                                     Matroid::direct_sum(Matroid::uniform(r1, a),
                                                         Matroid::uniform(r2, n - a)));

    ProductCheckReport rep;
    const Matroid* ident = nullptr;
    for (const auto& [name, cand] : catalog) {
        if (cand.has_loops() || cand.rank() - 1 != s.dim()) continue;
        WeightedFan bc = bergman_fan(cand).fan;
        if (!cycles_equal(s, bc)) continue;
        rep.matroidal = true;
        rep.identified = name;
        ident = &cand;
        break;
    }
    if (!ident)
        throw Error(Err::NotMatroidalIntersection,
                    "stable intersection matches no catalog Bergman fan");

    auto total1 = csm_total(m), total2 = csm_total(mp), totaln = csm_total(*ident);
    int d1 = m.rank() - 1, d2 = mp.rank() - 1;
    rep.all_equal = true;
    for (int g = 0; g <= ident->rank() - 1; ++g) {
        std::vector<WCone> acc;
        for (int a = 0; a <= d1; ++a) {
            int b = g + (n - 1) - a;
            if (b < 0 || b > d2) continue;
            if (total1[a].fan.empty() || total2[b].fan.empty()) continue;
            WeightedFan piece = stable_intersection(total1[a].fan, total2[b].fan);
            acc.insert(acc.end(), piece.cones.begin(), piece.cones.end());
        }
        WeightedFan lhs = make_fan(n - 1, std::move(acc));
        bool eq = cycles_equal(lhs, totaln[g].fan);
        rep.grades.push_back({g, eq});
        if (!eq) rep.all_equal = false;
    }
    return rep;
}

} // namespace tropcsm
