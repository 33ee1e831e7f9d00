#include "dyckwalk/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "dyckwalk/errors.hpp"
#include "dyckwalk/genfunc.hpp"
#include "dyckwalk/hpoly.hpp"
#include "dyckwalk/oracle.hpp"
#include "dyckwalk/walk.hpp"

namespace dyckwalk::cli {

using nlohmann::json;

namespace {

json decimal_strings(const std::vector<BigInt>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

// NaN and infinities have no JSON spelling.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_field(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

template <typename Fn>
OutputRecord timed(std::string command, json parameters, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    OutputRecord rec;
    rec.command = std::move(command);
    rec.parameters = std::move(parameters);
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.status = Status::error;
        rec.results = json{{"message", e.what()}};
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

std::optional<double> parse_decimal(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

double z_score(double estimate, double target, double se) {
    const double diff = estimate - target;
    if (diff == 0.0) return 0.0;
    return diff / se;  // se == 0 with diff != 0 gives +-inf, emitted as null
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        case Status::error: return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::mismatch: return 1;
        case Status::error: return 2;
    }
    return 2;
}

json OutputRecord::to_json() const {
    return json{{"command", command},
                {"parameters", parameters},
                {"results", results},
                {"status", cli::to_string(status)},
                {"elapsed_ms", elapsed_ms}};
}

std::string OutputRecord::to_csv() const {
    std::ostringstream os;
    if (command == "table") {
        os << "n,k,count\n";
        const auto& counts = results.at("counts");
        for (std::size_t k = 0; k < counts.size(); ++k) {
            os << results.at("n").get<unsigned>() << ',' << k << ',' << csv_field(counts[k]) << '\n';
        }
    } else if (command == "hpoly") {
        os << "m,j,coeff\n";
        const auto& coeffs = results.at("coeffs");
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            os << results.at("m").get<long>() << ',' << j << ',' << csv_field(coeffs[j]) << '\n';
        }
    } else if (command == "verify") {
        os << "n,k,genfunc,dp,cf,bruteforce,agree\n";
        for (const auto& cell : results.at("cells")) {
            os << cell.at("n").get<unsigned>() << ',' << cell.at("k").get<std::size_t>() << ','
               << csv_field(cell.at("genfunc")) << ',' << csv_field(cell.at("dp")) << ','
               << csv_field(cell.at("cf")) << ',' << csv_field(cell.at("bruteforce")) << ','
               << (cell.at("agree").get<bool>() ? "true" : "false") << '\n';
        }
    } else {
        os << "field,value\n";
        for (const auto& [key, value] : results.items()) os << key << ',' << csv_field(value) << '\n';
    }
    return os.str();
}

OutputRecord cmd_table(unsigned n, std::size_t kmax) {
    return timed("table", json{{"n", n}, {"kmax", kmax}}, [&](OutputRecord& rec) {
        const CountTable table = count_table(n, kmax);
        rec.results = json{{"n", table.n}, {"kmax", table.kmax}, {"counts", decimal_strings(table.counts)}};
    });
}

OutputRecord cmd_hpoly(long m) {
    return timed("hpoly", json{{"m", m}}, [&](OutputRecord& rec) {
        const IntPoly h = h_poly(m);
        const std::vector<BigInt> coeffs(h.coeffs().begin(), h.coeffs().end());
        rec.results = json{{"m", m}, {"degree", h.degree()}, {"polynomial", h.str()}, {"coeffs", decimal_strings(coeffs)}};
    });
}

OutputRecord cmd_verify(unsigned n_max, std::size_t k_max) {
    return timed("verify", json{{"n_max", n_max}, {"k_max", k_max}}, [&](OutputRecord& rec) {
        const std::size_t brute_max = std::min<std::size_t>(k_max, kBruteForceMaxOrder);
        std::vector<DyckCensus> census;
        for (std::size_t k = 0; k <= brute_max; ++k) census.push_back(enumerate_dyck_census(static_cast<unsigned>(k)));

        json cells = json::array();
        json mismatches = json::array();
        for (unsigned n = 0; n <= n_max; ++n) {
            const CountTable table = count_table(n, k_max);
            const std::vector<BigInt> cf = series_bounded_cf(n, k_max);
            for (std::size_t k = 0; k <= k_max; ++k) {
                const BigInt& gf = table.counts[k];
                const BigInt dp = count_paths_dp({static_cast<unsigned>(k), n});
                bool agree = gf == dp && gf == cf[k];
                json brute = nullptr;
                if (k <= brute_max) {
                    const BigInt by_peak = census[k].peak_bounded(n);
                    const BigInt by_height = census[k].height_bounded(n);
                    agree = agree && by_peak == by_height && gf == by_peak;
                    brute = by_peak.get_str();
                }
                cells.push_back(json{{"n", n}, {"k", k}, {"genfunc", gf.get_str()}, {"dp", dp.get_str()},
                                     {"cf", cf[k].get_str()}, {"bruteforce", brute}, {"agree", agree}});
                if (!agree) mismatches.push_back(json{{"n", n}, {"k", k}});
            }
        }
        rec.status = mismatches.empty() ? Status::ok : Status::mismatch;
        rec.results = json{{"n_max", n_max},
                           {"k_max", k_max},
                           {"bruteforce_max_order", brute_max},
                           {"cells", std::move(cells)},
                           {"mismatches", std::move(mismatches)}};
    });
}

OutputRecord cmd_walk(long m, const std::string& p, std::uint64_t trials, std::uint64_t seed,
                      std::uint64_t max_steps) {
    json params{{"m", m}, {"p", p}, {"trials", trials}, {"seed", seed}, {"max_steps", max_steps}};
    return timed("walk", std::move(params), [&](OutputRecord& rec) {
        std::optional<Rational> exact;
        double p_value = 0.0;
        if (p.find('/') != std::string::npos) {
            exact = Rational::parse(p);
            p_value = exact->to_double();
        } else if (auto d = parse_decimal(p)) {
            p_value = *d;
        } else {
            throw DomainError("cannot parse p: '" + p + "'");
        }

        WalkConfig cfg;
        cfg.m = m;
        cfg.p = p_value;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.max_steps = max_steps;
        if (exact && (exact->sign() <= 0 || *exact >= Rational(1))) {
            throw DomainError("p must lie strictly between 0 and 1, got " + exact->str());
        }
        const WalkStats s = simulate(cfg);

        json r{{"p_mode", exact ? "exact" : "decimal"},
               {"p_value", p_value},
               {"trials_run", s.trials_run},
               {"hits_right", s.hits_right},
               {"hits_left", s.hits_left},
               {"truncated", s.truncated},
               {"reliable", s.reliable()},
               {"pi_hat", number_or_null(s.pi_hat)},
               {"pi_se", number_or_null(s.pi_se)},
               {"l_hat", number_or_null(s.l_hat)},
               {"l_se", number_or_null(s.l_se)},
               {"right_lengths_odd", s.right_lengths_odd},
               {"min_right_length", s.min_right_length},
               {"max_right_length", s.max_right_length},
               {"pi_exact", nullptr},
               {"l_exact", nullptr},
               {"pi_exact_value", nullptr},
               {"l_exact_value", nullptr},
               {"z_pi", nullptr},
               {"z_l", nullptr},
               {"note", nullptr}};

        std::vector<std::string> notes;
        if (!s.reliable()) notes.push_back("some trials hit max_steps; estimates are unreliable");
        if (!exact) {
            notes.push_back("p given as a decimal; exact comparison needs p as a/b");
        } else if (*exact == Rational(1, 2)) {
            notes.push_back("closed forms exclude p = 1/2");
        } else {
            const Rational pi = pi_closed(m, *exact);
            const Rational l = l_exact(m, *exact);
            r["pi_exact"] = pi.str();
            r["l_exact"] = l.str();
            r["pi_exact_value"] = pi.to_double();
            r["l_exact_value"] = l.to_double();
            r["z_pi"] = number_or_null(z_score(s.pi_hat, pi.to_double(), s.pi_se));
            // With a single success there is no spread estimate; fall back to exact equality.
            const double l_se = std::isnan(s.l_se) ? 0.0 : s.l_se;
            r["z_l"] = number_or_null(z_score(s.l_hat, l.to_double(), l_se));
        }
        if (!notes.empty()) {
            std::string joined;
            for (const auto& n : notes) joined += (joined.empty() ? "" : "; ") + n;
            r["note"] = joined;
        }
        rec.results = std::move(r);
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts height-bounded Dyck paths and checks the random-walk identities behind them.",
                 "dyckwalk"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    unsigned n = 0;
    std::size_t kmax = 0;
    auto* table = app.add_subcommand("table", "A(n, 0..kmax) from the generating function");
    table->add_option("--n", n, "Peak-height bound")->required();
    table->add_option("--kmax", kmax, "Largest path order")->required();
    add_format(table);

    unsigned n_max = 0;
    std::size_t k_max = 0;
    auto* verify = app.add_subcommand("verify", "Cross-check the generating function against three oracles");
    verify->add_option("--n-max", n_max, "Largest height bound")->required();
    verify->add_option("--k-max", k_max, "Largest path order")->required();
    add_format(verify);

    long m = 2;
    std::string p;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = kDefaultMaxSteps;
    auto* walk = app.add_subcommand("walk", "Monte Carlo gambler's-ruin walk from m-1");
    walk->add_option("--m", m, "Right absorbing node")->required()->check(CLI::Range(2L, std::numeric_limits<long>::max()));
    walk->add_option("--p", p, "Right-step probability, a/b or decimal")->required();
    walk->add_option("--trials", trials, "Number of walks")->required()->check(CLI::PositiveNumber);
    walk->add_option("--seed", seed, "RNG seed");
    walk->add_option("--max-steps", max_steps, "Per-trial step cap")->check(CLI::PositiveNumber);
    add_format(walk);

    long hm = 1;
    auto* hpoly = app.add_subcommand("hpoly", "Coefficients of H_m, ascending");
    hpoly->add_option("--m", hm, "Index m >= 1")->required()->check(CLI::Range(1L, std::numeric_limits<long>::max()));
    add_format(hpoly);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code(Status::error);
    }

    std::function<OutputRecord()> command;
    std::string name;
    if (*table) {
        name = "table";
        command = [&] { return cmd_table(n, kmax); };
    } else if (*verify) {
        name = "verify";
        command = [&] { return cmd_verify(n_max, k_max); };
    } else if (*walk) {
        name = "walk";
        command = [&] { return cmd_walk(m, p, trials, seed, max_steps); };
    } else {
        name = "hpoly";
        command = [&] { return cmd_hpoly(hm); };
    }

    const OutputRecord rec = command();
    if (rec.status == Status::error) {
        err << "dyckwalk " << name << ": " << rec.results.value("message", std::string("failed")) << '\n';
        if (format == "json") out << rec.to_json().dump() << '\n';
        return exit_code(rec.status);
    }

    if (format == "csv") {
        out << rec.to_csv();
    } else {
        out << rec.to_json().dump() << '\n';
    }
    if (rec.status == Status::mismatch) err << "dyckwalk " << name << ": oracle mismatch\n";
    return exit_code(rec.status);
}

}  // namespace dyckwalk::cli
