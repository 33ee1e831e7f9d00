#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over arbitrary-precision integers.
 *
 * coeffs()[j] is the coefficient of x^j. The representation is always
 * normalized: the last stored coefficient is nonzero, and the zero
 * polynomial stores nothing.
 */

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dyckwalk/rational.hpp"

namespace dyckwalk {

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
    static IntPoly monomial(const BigInt& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial. The zero polynomial reports -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Coefficient of x^j, zero past the degree.
    BigInt coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }

    /// Multiplication by x^t.
    IntPoly shifted(std::size_t t) const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& q) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// Human-readable form, e.g. "1 - 3x + x^2".
    std::string str() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

// Free-function spellings of the ring operations.
inline IntPoly poly_add(const IntPoly& a, const IntPoly& b) { return a + b; }
inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }
inline IntPoly poly_shift(const IntPoly& a, std::size_t t) { return a.shifted(t); }
inline Rational poly_eval(const IntPoly& a, const Rational& q) { return a.eval(q); }

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace dyckwalk
