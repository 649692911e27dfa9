#include "tropcsm/polynomial.hpp"

#include <sstream>

namespace tropcsm {

Int Polynomial::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

bool Polynomial::divide_by_x_minus_one(Polynomial& quotient) const {
    if (c_.empty()) {
        quotient = Polynomial();
        return true;
    }
    std::vector<Int> q(c_.size() - 1, Int(0));
    Int carry = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
        carry += c_[i];
        q[i - 1] = carry;
    }
    if (carry + c_[0] != 0) return false;
    quotient = Polynomial(std::move(q));
    return true;
}

int Polynomial::root_one_multiplicity() const {
    Polynomial p = *this, q;
    int t = 0;
    while (!p.is_zero() && p.divide_by_x_minus_one(q)) {
        p = q;
        ++t;
    }
    return t;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        first = false;
        Int mag = boost::multiprecision::abs(a);
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace tropcsm
