#pragma once

/**
 * @file hpoly.hpp
 * @brief The H_m polynomial family and the g/f functions of p.
 *
 * H_1 = H_2 = 1 and H_m = H_{m-1} - x H_{m-2}. With x = p(1-p) these are the
 * ratios h_m(p) = g_m(p) / g_1(p), where g_i(p) = (1-p)^i - p^i. They are
 * Fibonacci-type polynomials, a rescaling of the Chebyshev polynomials of the
 * second kind.
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "dyckwalk/poly.hpp"
#include "dyckwalk/rational.hpp"

namespace dyckwalk {

/// Append-only cache of H_1 .. H_M. Computing H_m fills every lower index.
/// Safe to share between threads.
class HFamily {
public:
    HFamily();

    /// H_m for m >= 1; DomainError otherwise.
    IntPoly get(long m);

    /// Largest index currently cached.
    std::size_t cached() const;

private:
    mutable std::mutex mutex_;
    std::vector<IntPoly> cache_;  // cache_[m - 1] = H_m
};

/// H_m from a process-wide HFamily.
IntPoly h_poly(long m);

/// (-1)^j * binomial(m-1-j, j): the closed form of coefficient j of H_m.
BigInt h_coeff_closed(long m, long j);

/// g_i(p) = (1-p)^i - p^i.
Rational g_eval(unsigned i, const Rational& p);

/// f_i(p) = g_{i-1}(p) / g_i(p) for i >= 2, p in (0,1), p != 1/2.
Rational f_eval(unsigned i, const Rational& p);

/// Throws DomainError unless 0 < p < 1 and p != 1/2.
void require_open_unit_not_half(const Rational& p);

}  // namespace dyckwalk
