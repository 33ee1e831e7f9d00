#pragma once

/**
 * @file genfunc.hpp
 * @brief Closed-form generating function for height-bounded Dyck paths.
 *
 *   sum_k (2k+1) A(n,k) x^k = ((-2n-3) x^(n+1) + H_{2n+3}(x)) / ((1-4x) H_{n+2}(x)^2)
 *
 * The right side is expanded as a formal power series with integer
 * coefficients; A(n,k) is coefficient k divided by 2k+1. Each of those
 * divisions must be exact, so a remainder means a bug.
 */

#include <cstddef>
#include <vector>

#include "dyckwalk/poly.hpp"

namespace dyckwalk {

/// A(n, 0..kmax) for a fixed peak-height bound n.
struct CountTable {
    unsigned n = 0;
    std::size_t kmax = 0;
    std::vector<BigInt> counts;
};

/// (-2n-3) x^(n+1) + H_{2n+3}(x).
IntPoly gf_numerator(unsigned n);

/// (1-4x) H_{n+2}(x)^2.
IntPoly gf_denominator(unsigned n);

/// Coefficients c_0..c_kmax of num/den as a power series. den(0) must be 1.
std::vector<BigInt> series_expand(const IntPoly& num, const IntPoly& den, std::size_t kmax);

/// Coefficients of sum_k (2k+1) A(n,k) x^k, before the (2k+1) division.
std::vector<BigInt> weighted_series(unsigned n, std::size_t kmax);

/// Divides coefficient k by 2k+1. Throws ConsistencyError on a remainder.
std::vector<BigInt> strip_odd_weights(std::vector<BigInt> weighted);

/// Throws ConsistencyError if some coefficient is not divisible by 2k+1.
CountTable count_table(unsigned n, std::size_t kmax);

}  // namespace dyckwalk
