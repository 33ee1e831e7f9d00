#include "dyckwalk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "dyckwalk/errors.hpp"

namespace dyckwalk {

namespace {

BigInt prefix_sum(const std::vector<BigInt>& v, unsigned n) {
    BigInt total = 0;
    for (std::size_t h = 0; h < v.size() && h <= n; ++h) total += v[h];
    return total;
}

}  // namespace

BigInt DyckCensus::peak_bounded(unsigned n) const { return prefix_sum(by_peak, n); }
BigInt DyckCensus::height_bounded(unsigned n) const { return prefix_sum(by_height, n); }

DyckCensus enumerate_dyck_census(unsigned k) {
    if (k > kBruteForceMaxOrder) {
        throw SizeError("brute-force enumeration is limited to order " +
                        std::to_string(kBruteForceMaxOrder) + ", got " + std::to_string(k));
    }
    const unsigned steps = 2 * k;
    std::vector<std::uint64_t> by_height(k + 1, 0);
    std::vector<std::uint64_t> by_peak(k + 1, 0);

    // Bit i of `word` set means step i goes up.
    const std::uint64_t total = std::uint64_t{1} << steps;
    for (std::uint64_t word = 0; word < total; ++word) {
        if (static_cast<unsigned>(std::popcount(word)) != k) continue;
        int height = 0;
        int top = 0;
        int top_peak = 0;
        bool valid = true;
        for (unsigned i = 0; i < steps; ++i) {
            const bool up = (word >> i) & 1U;
            height += up ? 1 : -1;
            if (height < 0) {
                valid = false;
                break;
            }
            top = std::max(top, height);
            const bool next_down = i + 1 < steps && !((word >> (i + 1)) & 1U);
            if (up && next_down) top_peak = std::max(top_peak, height);
        }
        if (!valid || height != 0) continue;
        ++by_height[static_cast<std::size_t>(top)];
        ++by_peak[static_cast<std::size_t>(top_peak)];
    }

    DyckCensus census{k, {}, {}};
    for (auto c : by_height) census.by_height.emplace_back(static_cast<unsigned long>(c));
    for (auto c : by_peak) census.by_peak.emplace_back(static_cast<unsigned long>(c));
    return census;
}

BigInt count_paths_bruteforce(const PathSpec& spec) {
    const DyckCensus census = enumerate_dyck_census(spec.k);
    BigInt by_peak = census.peak_bounded(spec.n);
    if (by_peak != census.height_bounded(spec.n)) {
        throw ConsistencyError("peak-height and max-height filters disagree at k=" +
                               std::to_string(spec.k) + ", n=" + std::to_string(spec.n));
    }
    return by_peak;
}

BigInt count_paths_dp(const PathSpec& spec) {
    const unsigned cap = std::min(spec.n, spec.k);
    std::vector<BigInt> row(cap + 1), next(cap + 1);
    row[0] = 1;
    for (unsigned step = 0; step < 2 * spec.k; ++step) {
        for (auto& v : next) v = 0;
        for (unsigned h = 0; h <= cap; ++h) {
            if (sgn(row[h]) == 0) continue;
            if (h > 0) next[h - 1] += row[h];
            if (h < cap) next[h + 1] += row[h];
        }
        std::swap(row, next);
    }
    return row[0];
}

BigInt catalan(unsigned k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2UL * k, k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1UL);
    return c;
}

std::vector<BigInt> series_bounded_cf(unsigned n, std::size_t kmax) {
    std::vector<BigInt> f(kmax + 1);
    f[0] = 1;
    std::vector<BigInt> g(kmax + 1);
    for (unsigned layer = 1; layer <= n; ++layer) {
        // g = 1 / (1 - z f):  g_0 = 1,  g_k = sum_{j=1..k} f_{j-1} g_{k-j}.
        g[0] = 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
            BigInt acc = 0;
            for (std::size_t j = 1; j <= k; ++j) {
                mpz_addmul(acc.get_mpz_t(), f[j - 1].get_mpz_t(), g[k - j].get_mpz_t());
            }
            g[k] = std::move(acc);
        }
        std::swap(f, g);
    }
    return f;
}

}  // namespace dyckwalk
