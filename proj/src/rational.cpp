#include "dyckwalk/rational.hpp"

#include <ostream>

#include "dyckwalk/errors.hpp"

namespace dyckwalk {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw DomainError("not an exact rational: '" + std::string(whole) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime.
    Rational r;
    r.q_ = mpq_class(n, d);
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero rational");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dyckwalk
