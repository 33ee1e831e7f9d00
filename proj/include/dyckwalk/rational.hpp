#pragma once

/**
 * @file rational.hpp
 * @brief Exact integers and rationals.
 *
 * BigInt is GMP's mpz_class. Rational wraps mpq_class so that every value is
 * kept in lowest terms with a positive denominator; equality is then
 * structural and `num()`/`den()` can be relied on by callers.
 */

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dyckwalk {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws DomainError when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "a/b" or a bare integer "a". Decimal literals are rejected.
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational pow(unsigned exponent) const;

    Rational operator-() const { return from_mpq(-q_); }

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dyckwalk
