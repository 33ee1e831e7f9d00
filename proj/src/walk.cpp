#include "dyckwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dyckwalk/errors.hpp"
#include "dyckwalk/genfunc.hpp"
#include "dyckwalk/hpoly.hpp"

namespace dyckwalk {

namespace {

__extension__ using u128 = unsigned __int128;

void require_m(long m, long lowest) {
    if (m < lowest) {
        throw DomainError("m must be >= " + std::to_string(lowest) + ", got " + std::to_string(m));
    }
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial));
}

// Integer sums so that merging partial tallies is exact and order-free.
struct Tally {
    std::uint64_t right = 0;
    std::uint64_t left = 0;
    std::uint64_t truncated = 0;
    std::uint64_t len_sum = 0;
    u128 len_sq_sum = 0;
    std::uint64_t min_len = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_len = 0;
    bool all_odd = true;

    void merge(const Tally& o) {
        right += o.right;
        left += o.left;
        truncated += o.truncated;
        len_sum += o.len_sum;
        len_sq_sum += o.len_sq_sum;
        min_len = std::min(min_len, o.min_len);
        max_len = std::max(max_len, o.max_len);
        all_odd = all_odd && o.all_odd;
    }
};

Tally run_trials(const WalkConfig& cfg, std::uint64_t first, std::uint64_t last) {
    Tally tally;
    std::bernoulli_distribution step_right(cfg.p);
    for (std::uint64_t t = first; t < last; ++t) {
        std::mt19937_64 rng(trial_seed(cfg.seed, t));
        long pos = cfg.m - 1;
        std::uint64_t steps = 0;
        while (pos > 0 && pos < cfg.m && steps < cfg.max_steps) {
            pos += step_right(rng) ? 1 : -1;
            ++steps;
        }
        if (pos == cfg.m) {
            ++tally.right;
            tally.len_sum += steps;
            tally.len_sq_sum += static_cast<u128>(steps) * steps;
            tally.min_len = std::min(tally.min_len, steps);
            tally.max_len = std::max(tally.max_len, steps);
            tally.all_odd = tally.all_odd && (steps % 2 == 1);
        } else if (pos == 0) {
            ++tally.left;
        } else {
            ++tally.truncated;
        }
    }
    return tally;
}

}  // namespace

void WalkConfig::validate() const {
    require_m(m, 2);
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie strictly between 0 and 1");
    if (trials == 0) throw DomainError("trials must be positive");
    if (max_steps == 0) throw DomainError("max_steps must be positive");
}

Rational pi_closed(long m, const Rational& p) {
    require_m(m, 2);
    require_open_unit_not_half(p);
    const auto mu = static_cast<unsigned>(m);
    return p * g_eval(mu - 1, p) / g_eval(mu, p);
}

Rational l_exact(long m, const Rational& p) {
    require_m(m, 2);
    require_open_unit_not_half(p);
    Rational l = 1;
    for (long j = 3; j <= m; ++j) {
        const Rational f = f_eval(static_cast<unsigned>(j), p);
        l = f + l * (f - 1);
    }
    return l;
}

Rational fl_closed(long m, const Rational& p) {
    require_m(m, 2);
    require_open_unit_not_half(p);
    const Rational x = p * (Rational(1) - p);
    const auto n = static_cast<unsigned>(m - 2);
    return gf_numerator(n).eval(x) / gf_denominator(n).eval(x);
}

bool expval_check(long m, const Rational& p) {
    require_m(m, 3);
    const Rational pi = pi_closed(m, p);
    const Rational lm = l_exact(m, p);
    const Rational lprev = l_exact(m - 1, p);
    return pi * lm == p + (pi - p) * (Rational(1) + lprev + lm);
}

WalkStats simulate(const WalkConfig& cfg) {
    cfg.validate();

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, cfg.trials));

    std::vector<Tally> parts(threads);
    {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = cfg.trials / threads;
        const std::uint64_t extra = cfg.trials % threads;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
            workers.emplace_back([&cfg, &parts, w, begin, end] { parts[w] = run_trials(cfg, begin, end); });
            begin = end;
        }
    }
    Tally total;
    for (const auto& part : parts) total.merge(part);

    WalkStats s;
    s.trials_run = cfg.trials;
    s.hits_right = total.right;
    s.hits_left = total.left;
    s.truncated = total.truncated;
    s.right_lengths_odd = total.all_odd;
    s.min_right_length = total.right > 0 ? total.min_len : 0;
    s.max_right_length = total.max_len;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const std::uint64_t resolved = total.right + total.left;
    if (resolved > 0) {
        s.pi_hat = static_cast<double>(total.right) / static_cast<double>(resolved);
        s.pi_se = std::sqrt(s.pi_hat * (1.0 - s.pi_hat) / static_cast<double>(resolved));
    } else {
        s.pi_hat = s.pi_se = nan;
    }

    if (total.right > 0) {
        const auto n = static_cast<long double>(total.right);
        s.l_hat = static_cast<double>(static_cast<long double>(total.len_sum) / n);
    } else {
        s.l_hat = nan;
    }
    if (total.right > 1) {
        // n * sum(x^2) - sum(x)^2 is exact in 128 bits for any realistic run.
        const u128 n = total.right;
        const u128 spread = n * total.len_sq_sum - static_cast<u128>(total.len_sum) * total.len_sum;
        const long double var = static_cast<long double>(spread) / (static_cast<long double>(n) * static_cast<long double>(n - 1));
        s.l_se = static_cast<double>(std::sqrt(var / static_cast<long double>(n)));
    } else {
        s.l_se = nan;
    }
    return s;
}

std::uint64_t walk_to_path_order(std::uint64_t length) {
    if (length % 2 == 0) {
        throw DomainError("a right-absorbed walk has odd length, got " + std::to_string(length));
    }
    return (length - 1) / 2;
}

}  // namespace dyckwalk
