#include "tropcsm/linalg.hpp"

#include <algorithm>

namespace tropcsm {

bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IVec primitive(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) throw Error(Err::ZeroVector, "primitive of zero vector");
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IVec scale(const IVec& a, const Int& c) {
    IVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

IVec neg(const IVec& a) { return scale(a, Int(-1)); }

QVec to_rat(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

IVec q_primitive(const QVec& v) {
    Int lcm = 1;
    for (const auto& x : v)
        lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(x)));
    IVec cleared(v.size());
    bool zero = true;
    for (size_t i = 0; i < v.size(); ++i) {
        cleared[i] = Int(boost::multiprecision::numerator(v[i])) * (lcm / Int(boost::multiprecision::denominator(v[i])));
        if (cleared[i] != 0) zero = false;
    }
    if (zero) return cleared;
    return primitive(cleared);
}

int rank_of_q(const QMat& a) {
    int r = 0;
    std::vector<int> pivots;
    QMat rows;
    for (auto row : a) {
        for (size_t k = 0; k < rows.size(); ++k) {
            const Rat c = row[pivots[k]]; // copy: the loop below overwrites this entry
            if (c != 0) {
                for (size_t j = 0; j < row.size(); ++j) row[j] -= c * rows[k][j];
            }
        }
        int p = -1;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) { p = static_cast<int>(j); break; }
        if (p < 0) continue;
        Rat inv = row[p];
        for (auto& x : row) x /= inv;
        rows.push_back(row);
        pivots.push_back(p);
        ++r;
    }
    return r;
}

int rank_of(const IMat& a) {
    QMat q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = to_rat(a[i]);
    return rank_of_q(q);
}

namespace {

// Row HNF with optional unimodular transform accumulation (u * a = h).
IMat hnf_impl(const IMat& a, IMat* u_out, int ncols) {
    IMat h = a;
    int m = static_cast<int>(h.size());
    IMat u;
    if (u_out) {
        u.assign(m, IVec(m, 0));
        for (int i = 0; i < m; ++i) u[i][i] = 1;
    }
    int row = 0;
    for (int col = 0; col < ncols && row < m; ++col) {
        // eliminate below `row` in this column via gcd steps
        while (true) {
            // pivot on the smallest nonzero magnitude so the gcd steps shrink
            int piv = -1;
            for (int i = row; i < m; ++i)
                if (h[i][col] != 0 &&
                    (piv < 0 || boost::multiprecision::abs(h[i][col]) <
                                    boost::multiprecision::abs(h[piv][col])))
                    piv = i;
            if (piv < 0) break;
            if (piv != row) {
                std::swap(h[piv], h[row]);
                if (u_out) std::swap(u[piv], u[row]);
            }
            bool clean = true;
            for (int i = row + 1; i < m; ++i) {
                if (h[i][col] == 0) continue;
                Int q = h[i][col] / h[row][col];
                for (int j = 0; j < ncols; ++j) h[i][j] -= q * h[row][j];
                if (u_out)
                    for (int j = 0; j < m; ++j) u[i][j] -= q * u[row][j];
                if (h[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[row][col] == 0) continue;
        if (h[row][col] < 0) {
            for (int j = 0; j < ncols; ++j) h[row][j] = -h[row][j];
            if (u_out)
                for (int j = 0; j < m; ++j) u[row][j] = -u[row][j];
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            Int q = h[i][col] / h[row][col];
            if (h[i][col] - q * h[row][col] < 0) q -= 1;
            if (q == 0) continue;
            for (int j = 0; j < ncols; ++j) h[i][j] -= q * h[row][j];
            if (u_out)
                for (int j = 0; j < m; ++j) u[i][j] -= q * u[row][j];
        }
        ++row;
    }
    if (u_out) *u_out = u;
    h.resize(row);
    return h;
}

} // namespace

IMat hnf(const IMat& a) {
    if (a.empty()) return {};
    return hnf_impl(a, nullptr, static_cast<int>(a[0].size()));
}

IMat integer_kernel(const IMat& a, int ncols) {
    // transpose; kernel rows of a = rows of U mapping to zero rows of HNF(a^T)
    int m = static_cast<int>(a.size());
    IMat at(ncols, IVec(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < ncols; ++j) at[j][i] = a[i][j];
    IMat u;
    IMat h = hnf_impl(at, &u, m);
    int r = static_cast<int>(h.size());
    IMat ker;
    for (int i = r; i < ncols; ++i) ker.push_back(u[i]);
    return hnf_impl(ker, nullptr, ncols);
}

IMat saturation(const IMat& a, int ncols) {
    return integer_kernel(integer_kernel(a, ncols), ncols);
}

Int lattice_index(const IMat& gens, int n) {
    IMat h = hnf(gens);
    if (static_cast<int>(h.size()) != n)
        throw Error(Err::Internal, "lattice_index: generators not full rank");
    Int idx = 1;
    int col = 0;
    for (int i = 0; i < n; ++i) {
        while (col < n && h[i][col] == 0) ++col;
        idx *= h[i][col];
    }
    return idx;
}

Int determinant(IMat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::optional<QVec> solve_in_span(const IMat& basis, const IVec& target) {
    // Gaussian elimination on basis^T | target.
    int m = static_cast<int>(basis.size());
    if (m == 0) {
        if (is_zero(target)) return QVec{};
        return std::nullopt;
    }
    int n = static_cast<int>(basis[0].size());
    QMat aug(n, QVec(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = Rat(basis[j][i]);
        aug[i][m] = Rat(target[i]);
    }
    int row = 0;
    std::vector<int> pivot_col(n, -1);
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (aug[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(aug[piv], aug[row]);
        Rat d = aug[row][col];
        for (auto& x : aug[row]) x /= d;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat c = aug[i][col];
            for (int j = 0; j <= m; ++j) aug[i][j] -= c * aug[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (aug[i][m] != 0) return std::nullopt; // outside span
    QVec x(m, Rat(0));
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][m];
    return x;
}

bool RowSpace::insert(const IVec& row) {
    QVec r = to_rat(row);
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat c = r[pivots_[k]];
        if (c != 0)
            for (size_t j = 0; j < r.size(); ++j) r[j] -= c * rows_[k][j];
    }
    int p = -1;
    for (size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) { p = static_cast<int>(j); break; }
    if (p < 0) return false;
    Rat inv = r[p];
    for (auto& x : r) x /= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(const IVec& row) const {
    QVec r = to_rat(row);
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat c = r[pivots_[k]];
        if (c != 0)
            for (size_t j = 0; j < r.size(); ++j) r[j] -= c * rows_[k][j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

} // namespace tropcsm
