#include "dyckwalk/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dyckwalk {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
    return constant(c).shifted(power);
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly IntPoly::shifted(std::size_t t) const {
    if (is_zero() || t == 0) return *this;
    std::vector<BigInt> out(t + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(t));
    IntPoly r;
    r.coeffs_ = std::move(out);
    return r;
}

Rational IntPoly::eval(const Rational& q) const {
    // Horner on numerator and denominator separately keeps every step integral:
    // sum c_j (a/b)^j = (sum c_j a^j b^(d-j)) / b^d.
    if (is_zero()) return Rational(0);
    const BigInt a = q.num();
    const BigInt b = q.den();
    BigInt acc = coeffs_.back();
    BigInt bpow = 1;
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        bpow *= b;
        BigInt next = acc * a + *it * bpow;
        acc = std::move(next);
    }
    return Rational(acc, bpow);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    // Leading product of nonzero leading coefficients is nonzero; no trim needed.
    IntPoly r;
    r.coeffs_ = std::move(out);
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const BigInt& c = coeffs_[j];
        if (sgn(c) == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (j == 0 || mag != 1) os << mag.get_str();
        if (j >= 1) os << "x";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

}  // namespace dyckwalk
