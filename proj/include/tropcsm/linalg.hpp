#ifndef TROPCSM_LINALG_HPP
#define TROPCSM_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "tropcsm/error.hpp"

namespace tropcsm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

bool is_zero(const IVec& v);

// v / gcd(|entries|), sign preserved; throws ZeroVector on v = 0.
IVec primitive(const IVec& v);

Int dot(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, const Int& c);
IVec neg(const IVec& a);

QVec to_rat(const IVec& v);
// Clears denominators and makes the vector primitive; zero stays zero.
IVec q_primitive(const QVec& v);

int rank_of(const IMat& a);
int rank_of_q(const QMat& a);

// Row-style Hermite normal form: zero rows dropped, pivots positive,
// entries above each pivot reduced into [0, pivot). Unique per lattice.
IMat hnf(const IMat& a);

// Basis of { x in Z^n : a * x = 0 } for a with n columns (ncols needed when
// a has no rows). Kernel lattices are saturated.
IMat integer_kernel(const IMat& a, int ncols);

// Basis (in HNF) of the saturation of the row lattice of a:
// span_Q(rows) intersected with Z^n.
IMat saturation(const IMat& a, int ncols);

// Index of the row lattice of gens (must have full column rank n) in Z^n.
Int lattice_index(const IMat& gens, int n);

// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Int determinant(IMat a);

// Solve sum_j x_j * basis_j = target over Q.
// Returns nullopt when target is outside the row span.
std::optional<QVec> solve_in_span(const IMat& basis, const IVec& target);

// Incremental exact row-space tracker; used for rank accumulation where the
// row set is large but the rank is small.
class RowSpace {
public:
    // Returns true if the row enlarged the span.
    bool insert(const IVec& row);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const IVec& row) const;

private:
    QMat rows_; // reduced echelon rows
    std::vector<int> pivots_;
};

} // namespace tropcsm

#endif
