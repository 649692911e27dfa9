#ifndef TROPCSM_POLYNOMIAL_HPP
#define TROPCSM_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "tropcsm/linalg.hpp"

namespace tropcsm {

// Dense integer-coefficient univariate polynomial, coefficients[i] = coeff of x^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Int v) { return Polynomial({std::move(v)}); }
    static Polynomial x_minus(Int a) { return Polynomial({-a, 1}); } // x - a

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Int>& coefficients() const { return c_; }
    Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0); }

    Int eval(const Int& x) const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Exact synthetic division by (x - 1); returns false if remainder nonzero.
    bool divide_by_x_minus_one(Polynomial& quotient) const;
    // Multiplicity of the root x = 1 (0 if p(1) != 0; degree+1 convention not
    // needed since the zero polynomial is never queried here).
    int root_one_multiplicity() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

} // namespace tropcsm

#endif
