#ifndef TROPCSM_MATROID_HPP
#define TROPCSM_MATROID_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "tropcsm/polynomial.hpp"

namespace tropcsm {

// Ground-set subsets are bitmasks over elements 0..n-1 (n <= 30).
using Subset = uint32_t;

std::vector<int> subset_elements(Subset s);
Subset subset_of(const std::vector<int>& elems);

// Matroid given by its explicit basis family. Immutable after construction;
// derived data (rank table, closures, flats) is cached lazily behind a mutex
// in a shared cache block, so copies are cheap and share the cache.
class Matroid {
public:
    // Validates the basis axioms exhaustively; throws EmptyBases,
    // UnequalCardinality or ExchangeViolation naming a witness.
    static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);

    static Matroid uniform(int r, int n);
    static Matroid free_matroid(int n) { return uniform(n, n); }
    // Ground set = edges, in the order given; bases = spanning forests.
    static Matroid graphic(int num_vertices, const std::vector<std::pair<int, int>>& edges);
    static Matroid fano();
    static Matroid non_fano();

    int size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<Subset>& bases() const { return bases_; }
    bool is_basis(Subset b) const;

    int rank(Subset s) const;
    Subset closure(Subset s) const;
    Subset loops() const { return closure(0); }
    bool has_loops() const { return loops() != 0; }

    // All flats, sorted by (rank, mask value); includes closure(0) and the
    // full ground set.
    const std::vector<Subset>& flats() const;
    bool is_flat(Subset f) const { return closure(f) == f; }

    std::vector<Subset> circuits() const;

    // M | restrictTo / contractBy, ground set relabeled 0..m-1.
    // label_map (optional out) maps new labels to original elements.
    Matroid minor(Subset restrict_to, Subset contract_by,
                  std::vector<int>* label_map = nullptr) const;

    static Matroid direct_sum(const Matroid& m1, const Matroid& m2);

    // Parallel connection at basepoints p1, p2; ground set is E1-p1 followed
    // by E2-p2 followed by the glued basepoint (last label). Built from the
    // flats characterization and cross-checked against circuits.
    static Matroid parallel_connection(const Matroid& m1, int p1,
                                       const Matroid& m2, int p2);

    Polynomial characteristic_polynomial() const;
    Polynomial reduced_characteristic() const; // chi / (t-1); loopless, n >= 1
    Int beta() const;

    bool connected() const;

    bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }

private:
    Matroid(int n, std::vector<Subset> bases);

    struct Cache {
        std::mutex mutex;
        std::vector<int> rank_table;     // index = subset mask
        std::vector<Subset> closures;    // index = subset mask
        std::vector<Subset> flats;       // sorted by (rank, mask)
    };
    const Cache& ensure_cache() const;

    int n_ = 0;
    int rank_ = 0;
    std::vector<Subset> bases_; // sorted
    std::shared_ptr<Cache> cache_;
};

} // namespace tropcsm

#endif
