#include "tropcsm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "tropcsm/error.hpp"

namespace tropcsm {

namespace {

int popcount(Subset s) { return std::popcount(s); }

std::string subset_str(Subset s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < 30; ++i)
        if (s >> i & 1u) {
            if (!first) os << ",";
            os << i;
            first = false;
        }
    os << "}";
    return os.str();
}

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 30; ++i)
        if (s >> i & 1u) out.push_back(i);
    return out;
}

Subset subset_of(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) s |= 1u << e;
    return s;
}

Matroid::Matroid(int n, std::vector<Subset> bases)
    : n_(n), bases_(std::move(bases)), cache_(std::make_shared<Cache>()) {
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = bases_.empty() ? 0 : popcount(bases_[0]);
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
    if (n < 0 || n > 30) throw Error(Err::ParseError, "ground set size out of range");
    if (bases.empty()) throw Error(Err::EmptyBases, "basis family is empty");
    std::vector<Subset> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) {
        Subset m = 0;
        for (int e : b) {
            if (e < 0 || e >= n)
                throw Error(Err::SubsetViolation,
                            "basis element " + std::to_string(e) + " outside ground set of size " +
                                std::to_string(n));
            m |= 1u << e;
        }
        if (popcount(m) != static_cast<int>(b.size()))
            throw Error(Err::SubsetViolation, "repeated element in basis " + subset_str(m));
        masks.push_back(m);
    }
    int card = popcount(masks[0]);
    for (Subset m : masks)
        if (popcount(m) != card)
            throw Error(Err::UnequalCardinality, "bases " + subset_str(masks[0]) + " and " +
                                                     subset_str(m) + " have different sizes");
    Matroid M(n, masks);
    // exchange axiom, exhaustively: for B1, B2 and x in B1-B2 there must be
    // y in B2-B1 with B1-x+y a basis
    for (Subset b1 : M.bases_)
        for (Subset b2 : M.bases_) {
            Subset diff1 = b1 & ~b2;
            if (diff1 == 0) continue;
            Subset diff2 = b2 & ~b1;
            for (int x = 0; x < n; ++x) {
                if (!(diff1 >> x & 1u)) continue;
                bool ok = false;
                for (int y = 0; y < n && !ok; ++y)
                    if ((diff2 >> y & 1u) && M.is_basis((b1 & ~(1u << x)) | (1u << y))) ok = true;
                if (!ok)
                    throw Error(Err::ExchangeViolation,
                                "exchange fails for bases " + subset_str(b1) + ", " +
                                    subset_str(b2) + " at element " + std::to_string(x));
            }
        }
    return M;
}

Matroid Matroid::uniform(int r, int n) {
    if (n < 0 || n > 30 || r < 0 || r > n)
        throw Error(Err::ParseError, "uniform matroid parameters out of range");
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << n); ++s)
        if (popcount(s) == r) bases.push_back(s);
    return Matroid(n, std::move(bases));
}

Matroid Matroid::graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    int m = static_cast<int>(edges.size());
    if (num_vertices < 1 || m > 30) throw Error(Err::ParseError, "graph out of range");
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
            throw Error(Err::ParseError, "edge endpoint outside vertex range");
    DSU whole(num_vertices);
    int components = num_vertices;
    for (auto [a, b] : edges)
        if (whole.unite(a, b)) --components;
    int rank = num_vertices - components;
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << m); ++s) {
        if (popcount(s) != rank) continue;
        DSU dsu(num_vertices);
        bool forest = true;
        for (int i = 0; i < m && forest; ++i)
            if (s >> i & 1u) forest = dsu.unite(edges[i].first, edges[i].second);
        if (forest) bases.push_back(s);
    }
    return Matroid(m, std::move(bases));
}

Matroid Matroid::fano() {
    static const std::vector<Subset> lines = {
        subset_of({0, 1, 2}), subset_of({0, 3, 4}), subset_of({0, 5, 6}), subset_of({1, 3, 5}),
        subset_of({1, 4, 6}), subset_of({2, 3, 6}), subset_of({2, 4, 5})};
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << 7); ++s) {
        if (popcount(s) != 3) continue;
        if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
    }
    return Matroid(7, std::move(bases));
}

Matroid Matroid::non_fano() {
    // same point configuration with the line {2,4,5} broken into a basis
    static const std::vector<Subset> lines = {
        subset_of({0, 1, 2}), subset_of({0, 3, 4}), subset_of({0, 5, 6}),
        subset_of({1, 3, 5}), subset_of({1, 4, 6}), subset_of({2, 3, 6})};
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << 7); ++s) {
        if (popcount(s) != 3) continue;
        if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
    }
    return Matroid(7, std::move(bases));
}

bool Matroid::is_basis(Subset b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
}

const Matroid::Cache& Matroid::ensure_cache() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->rank_table.empty()) {
        size_t total = size_t{1} << n_;
        std::vector<int>& rk = cache_->rank_table;
        rk.assign(total, 0);
        for (Subset s = 0; s < total; ++s) {
            int best = 0;
            for (Subset b : bases_) best = std::max(best, popcount(b & s));
            rk[s] = best;
        }
        cache_->closures.assign(total, 0);
        for (Subset s = 0; s < total; ++s) {
            Subset cl = s;
            for (int e = 0; e < n_; ++e)
                if (rk[s | (1u << e)] == rk[s]) cl |= 1u << e;
            cache_->closures[s] = cl;
        }
        for (Subset s = 0; s < total; ++s)
            if (cache_->closures[s] == s) cache_->flats.push_back(s);
        std::sort(cache_->flats.begin(), cache_->flats.end(),
                  [&](Subset a, Subset b) { return std::pair(rk[a], a) < std::pair(rk[b], b); });
    }
    return *cache_;
}

int Matroid::rank(Subset s) const { return ensure_cache().rank_table[s]; }

Subset Matroid::closure(Subset s) const { return ensure_cache().closures[s]; }

const std::vector<Subset>& Matroid::flats() const { return ensure_cache().flats; }

std::vector<Subset> Matroid::circuits() const {
    const auto& rk = ensure_cache().rank_table;
    std::vector<Subset> out;
    for (Subset s = 1; s < (1u << n_); ++s) {
        if (rk[s] >= popcount(s)) continue; // independent
        bool minimal = true;
        for (int e = 0; e < n_ && minimal; ++e) {
            if (!(s >> e & 1u)) continue;
            Subset t = s & ~(1u << e);
            if (rk[t] < popcount(t)) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

Matroid Matroid::minor(Subset restrict_to, Subset contract_by,
                       std::vector<int>* label_map) const {
    Subset c = contract_by & restrict_to;
    Subset ground = restrict_to & ~c;
    std::vector<int> labels = subset_elements(ground);
    if (label_map) *label_map = labels;
    int m = static_cast<int>(labels.size());
    int rc = rank(c);
    int target = rank(restrict_to) - rc;
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << m); ++s) {
        if (popcount(s) != target) continue;
        Subset lifted = c;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) lifted |= 1u << labels[i];
        if (rank(lifted) == rc + target) bases.push_back(s);
    }
    return Matroid(m, std::move(bases));
}

Matroid Matroid::direct_sum(const Matroid& m1, const Matroid& m2) {
    if (m1.n_ + m2.n_ > 30) throw Error(Err::ParseError, "direct sum ground set too large");
    std::vector<Subset> bases;
    bases.reserve(m1.bases_.size() * m2.bases_.size());
    for (Subset b1 : m1.bases_)
        for (Subset b2 : m2.bases_) bases.push_back(b1 | (b2 << m1.n_));
    return Matroid(m1.n_ + m2.n_, std::move(bases));
}

Matroid Matroid::parallel_connection(const Matroid& m1, int p1, const Matroid& m2, int p2) {
    if (p1 < 0 || p1 >= m1.n_ || p2 < 0 || p2 >= m2.n_)
        throw Error(Err::ParseError, "basepoint outside ground set");
    if (m1.has_loops() || m2.has_loops())
        throw Error(Err::LoopInput, "parallel connection requires loopless matroids");
    int n = m1.n_ + m2.n_ - 1;
    if (n > 30) throw Error(Err::ParseError, "parallel connection ground set too large");
    int p = n - 1;
    // new label -> (side, original element); side-1 elements first, then side-2,
    // then the glued basepoint
    std::vector<int> to1(n, -1), to2(n, -1);
    {
        int next = 0;
        for (int e = 0; e < m1.n_; ++e)
            if (e != p1) to1[next++] = e;
        for (int e = 0; e < m2.n_; ++e)
            if (e != p2) to2[next++] = e;
        to1[p] = p1;
        to2[p] = p2;
    }
    auto project = [&](Subset s, const std::vector<int>& to) {
        Subset out = 0;
        for (int i = 0; i < n; ++i)
            if ((s >> i & 1u) && to[i] >= 0) out |= 1u << to[i];
        return out;
    };

    // flats route: F is a flat iff both projections are flats
    std::vector<Subset> flats;
    std::vector<int> flat_rank(size_t{1} << n, -1);
    for (Subset s = 0; s < (1u << n); ++s)
        if (m1.is_flat(project(s, to1)) && m2.is_flat(project(s, to2))) flats.push_back(s);
    std::sort(flats.begin(), flats.end(),
              [](Subset a, Subset b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); });
    for (Subset f : flats) {
        int h = 0;
        for (Subset g : flats) {
            if (g == f) break; // sorted by size, proper subsets come earlier
            if ((g & f) == g && g != f) h = std::max(h, flat_rank[g] + 1);
        }
        flat_rank[f] = h;
    }
    auto rank_of_subset = [&](Subset s) {
        int best = n + 1;
        for (Subset f : flats)
            if ((s & f) == s) best = std::min(best, flat_rank[f]);
        return best;
    };
    int r = m1.rank_ + m2.rank_ - 1;
    if (rank_of_subset((1u << n) - 1) != r)
        throw Error(Err::Internal, "parallel connection rank mismatch");
    std::vector<Subset> bases;
    for (Subset s = 0; s < (1u << n); ++s)
        if (popcount(s) == r && rank_of_subset(s) == r) bases.push_back(s);

    // circuits route, as an internal cross-check
    std::vector<Subset> circuits;
    auto lift = [&](Subset orig, const Matroid& m, int basept, int offset) {
        Subset out = 0;
        int next = offset;
        for (int e = 0; e < m.size(); ++e) {
            if (e == basept) {
                if (orig >> e & 1u) out |= 1u << p;
            } else {
                if (orig >> e & 1u) out |= 1u << next;
                ++next;
            }
        }
        return out;
    };
    std::vector<Subset> thru1, thru2;
    for (Subset c : m1.circuits()) {
        circuits.push_back(lift(c, m1, p1, 0));
        if (c >> p1 & 1u) thru1.push_back(lift(c & ~(1u << p1), m1, p1, 0));
    }
    for (Subset c : m2.circuits()) {
        circuits.push_back(lift(c, m2, p2, m1.n_ - 1));
        if (c >> p2 & 1u) thru2.push_back(lift(c & ~(1u << p2), m2, p2, m1.n_ - 1));
    }
    for (Subset a : thru1)
        for (Subset b : thru2) circuits.push_back(a | b);
    std::vector<Subset> bases2;
    for (Subset s = 0; s < (1u << n); ++s) {
        if (popcount(s) != r) continue;
        bool indep = true;
        for (Subset c : circuits)
            if ((s & c) == c) { indep = false; break; }
        if (indep) bases2.push_back(s);
    }
    std::sort(bases.begin(), bases.end());
    std::sort(bases2.begin(), bases2.end());
    if (bases != bases2)
        throw Error(Err::Internal, "parallel connection: flats and circuits constructions disagree");
    return Matroid(n, std::move(bases));
}

Polynomial Matroid::characteristic_polynomial() const {
    if (has_loops()) return Polynomial();
    const auto& fl = flats();
    const auto& rk = ensure_cache().rank_table;
    int nf = static_cast<int>(fl.size());
    std::vector<Int> mu(nf); // mu(empty flat, F); flats sorted by rank
    std::vector<Int> coeffs(rank_ + 1, Int(0));
    for (int i = 0; i < nf; ++i) {
        Int m = (i == 0) ? Int(1) : Int(0);
        for (int j = 0; j < i; ++j)
            if ((fl[j] & fl[i]) == fl[j]) m -= mu[j];
        mu[i] = m;
        coeffs[rank_ - rk[fl[i]]] += m;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial Matroid::reduced_characteristic() const {
    if (n_ == 0 || has_loops())
        throw Error(Err::LoopInput, "reduced characteristic needs a loopless nonempty matroid");
    Polynomial q;
    if (!characteristic_polynomial().divide_by_x_minus_one(q))
        throw Error(Err::Internal, "characteristic polynomial not divisible by t-1");
    return q;
}

Int Matroid::beta() const {
    if (n_ == 0 || has_loops()) return 0;
    Int v = reduced_characteristic().eval(1);
    return (rank_ % 2 == 0) ? -v : v;
}

bool Matroid::connected() const {
    if (n_ <= 1) return true;
    if (has_loops()) return false;
    Subset full = (1u << n_) - 1;
    for (Subset s = 1; s < full; ++s)
        if (rank(s) + rank(full & ~s) == rank_) return false;
    return true;
}

} // namespace tropcsm
