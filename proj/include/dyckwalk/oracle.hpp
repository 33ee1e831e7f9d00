#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ways to count Dyck paths of bounded height.
 *
 * None of these touch the generating-function code; they are the ground
 * truth it is checked against.
 */

#include <cstddef>
#include <vector>

#include "dyckwalk/rational.hpp"

namespace dyckwalk {

/// Dyck paths of order k (2k steps) whose height never exceeds n.
struct PathSpec {
    unsigned k = 0;
    unsigned n = 0;
};

/// Largest order the brute-force enumerator accepts (4^k sequences).
inline constexpr unsigned kBruteForceMaxOrder = 14;

/**
 * Census of every up/down sequence of length 2k.
 *
 * Dyck paths are tallied twice: by maximum height and by highest peak.
 * by_height[h] counts paths whose maximum height is exactly h, and
 * by_peak[h] counts paths whose highest peak is exactly h. The empty path
 * has no peak and is filed under 0 in both.
 */
struct DyckCensus {
    unsigned k = 0;
    std::vector<BigInt> by_height;
    std::vector<BigInt> by_peak;

    /// Paths with every peak at height <= n.
    BigInt peak_bounded(unsigned n) const;
    /// Paths with maximum height <= n.
    BigInt height_bounded(unsigned n) const;
};

/// Enumerates all 4^k step sequences. SizeError when k > kBruteForceMaxOrder.
DyckCensus enumerate_dyck_census(unsigned k);

/// Brute-force count. Also checks that the peak-height and max-height
/// filters agree, and throws ConsistencyError if they don't.
BigInt count_paths_bruteforce(const PathSpec& spec);

/// Ballot-style dynamic program over (step, height).
BigInt count_paths_dp(const PathSpec& spec);

/// binomial(2k, k) / (k + 1).
BigInt catalan(unsigned k);

/// Coefficients 0..kmax of F_n, where F_0 = 1 and F_h = 1 / (1 - z F_{h-1}).
std::vector<BigInt> series_bounded_cf(unsigned n, std::size_t kmax);

}  // namespace dyckwalk
