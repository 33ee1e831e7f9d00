#include "dyckwalk/genfunc.hpp"

#include <algorithm>
#include <string>

#include "dyckwalk/errors.hpp"
#include "dyckwalk/hpoly.hpp"

namespace dyckwalk {

IntPoly gf_numerator(unsigned n) {
    const long m = static_cast<long>(n) + 2;
    return h_poly(2 * m - 1) + IntPoly::monomial(BigInt(1 - 2 * m), n + 1);
}

IntPoly gf_denominator(unsigned n) {
    const IntPoly h = h_poly(static_cast<long>(n) + 2);
    return IntPoly{1, -4} * (h * h);
}

std::vector<BigInt> series_expand(const IntPoly& num, const IntPoly& den, std::size_t kmax) {
    if (den.coeff(0) != 1) {
        throw DomainError("series_expand needs a denominator with constant term 1, got " +
                          den.coeff(0).get_str());
    }
    const auto dcoef = den.coeffs();
    std::vector<BigInt> c(kmax + 1);
    BigInt acc;
    for (std::size_t k = 0; k <= kmax; ++k) {
        acc = num.coeff(k);
        const std::size_t reach = std::min<std::size_t>(k, dcoef.size() - 1);
        for (std::size_t j = 1; j <= reach; ++j) {
            mpz_submul(acc.get_mpz_t(), dcoef[j].get_mpz_t(), c[k - j].get_mpz_t());
        }
        c[k] = acc;
    }
    return c;
}

std::vector<BigInt> weighted_series(unsigned n, std::size_t kmax) {
    return series_expand(gf_numerator(n), gf_denominator(n), kmax);
}

std::vector<BigInt> strip_odd_weights(std::vector<BigInt> weighted) {
    BigInt weight;
    for (std::size_t k = 0; k < weighted.size(); ++k) {
        weight = 2 * static_cast<unsigned long>(k) + 1;
        BigInt& c = weighted[k];
        if (!mpz_divisible_p(c.get_mpz_t(), weight.get_mpz_t())) {
            throw ConsistencyError("series coefficient " + c.get_str() + " at k=" + std::to_string(k) +
                                   " is not divisible by 2k+1");
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), weight.get_mpz_t());
    }
    return weighted;
}

CountTable count_table(unsigned n, std::size_t kmax) {
    try {
        return CountTable{n, kmax, strip_odd_weights(weighted_series(n, kmax))};
    } catch (const ConsistencyError& e) {
        throw ConsistencyError(std::string(e.what()) + " (n=" + std::to_string(n) + ")");
    }
}

}  // namespace dyckwalk
