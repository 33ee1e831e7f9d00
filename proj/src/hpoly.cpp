#include "dyckwalk/hpoly.hpp"

#include <string>

#include "dyckwalk/errors.hpp"

namespace dyckwalk {

HFamily::HFamily() : cache_{IntPoly{1}, IntPoly{1}} {}

IntPoly HFamily::get(long m) {
    if (m < 1) throw DomainError("H_m needs m >= 1, got " + std::to_string(m));
    const auto want = static_cast<std::size_t>(m);
    std::lock_guard lock(mutex_);
    while (cache_.size() < want) {
        const std::size_t top = cache_.size();
        cache_.push_back(cache_[top - 1] - cache_[top - 2].shifted(1));
    }
    return cache_[want - 1];
}

std::size_t HFamily::cached() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

IntPoly h_poly(long m) {
    static HFamily family;
    return family.get(m);
}

BigInt h_coeff_closed(long m, long j) {
    if (m < 1) throw DomainError("H_m needs m >= 1, got " + std::to_string(m));
    if (j < 0 || 2 * j > m - 1) return 0;
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m - 1 - j), static_cast<unsigned long>(j));
    return j % 2 == 0 ? c : BigInt(-c);
}

Rational g_eval(unsigned i, const Rational& p) {
    return (Rational(1) - p).pow(i) - p.pow(i);
}

void require_open_unit_not_half(const Rational& p) {
    if (p.sign() <= 0 || p >= Rational(1)) {
        throw DomainError("p must lie strictly between 0 and 1, got " + p.str());
    }
    if (p == Rational(1, 2)) throw DomainError("p = 1/2 is excluded");
}

Rational f_eval(unsigned i, const Rational& p) {
    if (i < 2) throw DomainError("f_i needs i >= 2, got " + std::to_string(i));
    require_open_unit_not_half(p);
    return g_eval(i - 1, p) / g_eval(i, p);
}

}  // namespace dyckwalk
