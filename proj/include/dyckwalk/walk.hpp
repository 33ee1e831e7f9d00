#pragma once

/**
 * @file walk.hpp
 * @brief Gambler's-ruin walk on nodes 0..m, started at m-1.
 *
 * Each step goes right with probability p and left otherwise, and the walk
 * stops at 0 or m. Pi_{m,p} is the chance of stopping at m. L_m(p) is the
 * expected number of steps, conditioned on stopping at m. For p != 1/2 both
 * have exact rational values. The simulator estimates them for any p.
 *
 * A walk that reaches m in 2k+1 steps corresponds to a Dyck path of order k
 * and height <= m-2, so f_m(p) L_m(p) is the series sum_k (2k+1) A(m-2,k) x^k
 * evaluated at x = p(1-p).
 */

#include <cstdint>

#include "dyckwalk/rational.hpp"

namespace dyckwalk {

inline constexpr std::uint64_t kDefaultMaxSteps = 10'000'000;

struct WalkConfig {
    long m = 2;                  ///< right absorbing node; start is m-1
    double p = 0.5;              ///< right-step probability
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = kDefaultMaxSteps;  ///< per trial
    unsigned threads = 0;        ///< 0 picks hardware concurrency

    /// Throws DomainError on m < 2, p outside (0,1), trials or max_steps of 0.
    void validate() const;
};

struct WalkStats {
    std::uint64_t trials_run = 0;
    std::uint64_t hits_right = 0;
    std::uint64_t hits_left = 0;
    std::uint64_t truncated = 0;
    double pi_hat = 0.0;
    double pi_se = 0.0;
    double l_hat = 0.0;  ///< mean length of right-absorbed walks
    double l_se = 0.0;   ///< NaN when fewer than two walks reached m
    std::uint64_t min_right_length = 0;
    std::uint64_t max_right_length = 0;
    bool right_lengths_odd = true;

    bool reliable() const { return truncated == 0; }
};

/// Pi_{m,p} = p g_{m-1}(p) / g_m(p).
Rational pi_closed(long m, const Rational& p);

/// L_m(p) from L_2 = 1 and L_j = f_j + L_{j-1} (f_j - 1).
Rational l_exact(long m, const Rational& p);

/// ((1-2m) x^(m-1) + H_{2m-1}(x)) / ((1-4x) H_m(x)^2) at x = p(1-p).
Rational fl_closed(long m, const Rational& p);

/**
 * First-step identity for the conditional hitting time, m >= 3:
 *
 *   Pi_m L_m = p + (Pi_m - p)(1 + L_{m-1} + L_m)
 *
 * With probability p the first step hits m. With probability Pi_m - p it goes
 * left (one step), returns to m-1 (L_{m-1}) and then needs L_m more.
 */
bool expval_check(long m, const Rational& p);

/// Runs cfg.trials independent walks. Trial t draws from a stream seeded by
/// (cfg.seed, t), so the result does not depend on cfg.threads.
WalkStats simulate(const WalkConfig& cfg);

/// Order k = (length - 1) / 2 of the Dyck path a right-absorbed walk encodes.
std::uint64_t walk_to_path_order(std::uint64_t length);

}  // namespace dyckwalk
