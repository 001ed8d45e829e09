#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bridgestat/alexpoly.hpp"
#include "bridgestat/iwasawa.hpp"
#include "bridgestat/json_io.hpp"
#include "bridgestat/linking.hpp"
#include "bridgestat/linkmat.hpp"
#include "bridgestat/schubert.hpp"
#include "bridgestat/stats.hpp"

namespace bridgestat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kThreadsEnv = "BRIDGESTAT_THREADS";

/// Worker cap from BRIDGESTAT_THREADS; 0 (hardware concurrency) when unset.
inline unsigned threads_from_env() {
    const char* raw = std::getenv(kThreadsEnv);
    if (raw == nullptr || *raw == '\0') return 0;
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(raw).size() || v <= 0)
        throw std::invalid_argument(std::string(kThreadsEnv) + " must be a positive integer, got '" + raw + "'");
    return static_cast<unsigned>(v);
}

namespace detail {

inline std::vector<Prime> parse_primes(const std::string& list) {
    std::vector<Prime> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v <= 0)
            throw std::invalid_argument("--primes: '" + item + "' is not a positive integer");
        require_odd_prime(static_cast<std::uint64_t>(v));
        out.push_back(static_cast<Prime>(v));
    }
    if (out.empty()) throw std::invalid_argument("--primes: empty list");
    return out;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << contents;
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

inline SweepOptions sweep_options(std::ostream& err, const std::string& label) {
    SweepOptions opts;
    opts.threads = threads_from_env();
    opts.progress = [&err, label](std::size_t done, std::size_t total) {
        err << '[' << label << "] " << done << '/' << total << " numerators\n";
    };
    return opts;
}

struct Args {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t p = 0;
    std::uint64_t nmax = 4;
    double max_height = 0;
    std::string predicate = "s";
    std::string primes = "3,5,7,11,13,17,19,23";
    std::string csv_path;
    std::string file;
    bool json = false;
    bool completed = false;
    bool detail = false;
};

} // namespace detail

/**
 * @brief Runs one bridgestat command line.
 *
 * args excludes the program name. Data goes to `out`, diagnostics and
 * progress to `err`. Returns 0 on success, 2 on invalid input or usage,
 * 1 on other failures.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iwasawa invariants and density statistics for 2-bridge links", "bridgestat"};
    app.require_subcommand(1);
    detail::Args o;

    auto add_ab = [&](CLI::App* sub) {
        sub->add_option("--a", o.a, "Schubert numerator a")->required();
        sub->add_option("--b", o.b, "Schubert denominator b")->required();
    };

    auto* inv = app.add_subcommand("invariants", "mu and lambda of L_{a/b} at p");
    add_ab(inv);
    inv->add_option("--p", o.p, "odd prime")->required();
    inv->add_flag("--json", o.json, "JSON output");

    auto* lk = app.add_subcommand("linking", "linking number of L_{a/b}");
    add_ab(lk);

    auto* alex = app.add_subcommand("alex", "Alexander polynomial of L_{a/b} as JSON");
    add_ab(alex);
    alex->add_flag("--completed", o.completed, "substitute t = 1 + X");

    auto* growth = app.add_subcommand("growth", "homology growth along the p-tower");
    add_ab(growth);
    growth->add_option("--p", o.p, "odd prime")->required();
    growth->add_option("--nmax", o.nmax, "top level n (>= 3)")->capture_default_str();
    growth->add_flag("--json", o.json, "JSON output");

    auto* lm = app.add_subcommand("linkmat", "linking-matrix criterion from a JSON file");
    lm->add_option("--file", o.file, "linking data JSON")->required();
    lm->add_option("--p", o.p, "odd prime")->required();

    auto* eq = app.add_subcommand("equiv", "same-type partner a' with a a' = 1 mod 2b");
    add_ab(eq);

    auto* sw = app.add_subcommand("sweep", "density of a predicate over links of height < X");
    sw->add_option("--p", o.p, "odd prime")->required();
    sw->add_option("--max-height", o.max_height, "height cutoff X (strict)")->required();
    sw->add_option("--predicate", o.predicate, "s (p does not divide linking) or u (mu = 0)")
        ->check(CLI::IsMember({"s", "u"}))
        ->capture_default_str();
    sw->add_option("--csv", o.csv_path, "write CSV to PATH");
    sw->add_flag("--json", o.json, "JSON output");
    sw->add_flag("--detail", o.detail, "per-fraction rows a,b,linking,mu,lambda");

    auto* tb = app.add_subcommand("table", "mu = 0 proportions per prime");
    tb->add_option("--max-height", o.max_height, "height cutoff X (strict)")->required();
    tb->add_option("--primes", o.primes, "comma separated odd primes")->capture_default_str();
    tb->add_option("--csv", o.csv_path, "write CSV to PATH instead of stdout");

    std::vector<std::string> argv_store{"bridgestat"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    using json_io::json;
    try {
        if (*inv) {
            const auto f = make_fraction(o.a, o.b);
            require_odd_prime(o.p);
            const auto r = invariants(f, o.p);
            if (o.json)
                out << json{{"a", f.a()}, {"b", f.b()}, {"p", o.p}, {"mu", json_io::to_json(r.mu)},
                            {"lambda", json_io::to_json(r.lambda)}}
                           .dump()
                    << '\n';
            else
                out << "mu=" << r.mu << " lambda=" << r.lambda << '\n';
        } else if (*lk) {
            out << linking_number(make_fraction(o.a, o.b)) << '\n';
        } else if (*alex) {
            const auto delta = minkus_polynomial(make_fraction(o.a, o.b));
            out << (o.completed ? json_io::to_json(completed_polynomial(delta)) : json_io::to_json(delta)).dump()
                << '\n';
        } else if (*growth) {
            const auto f = make_fraction(o.a, o.b);
            require_odd_prime(o.p);
            const auto g = verify_growth(f, o.p, o.nmax);
            if (o.json) {
                out << json_io::to_json(g).dump() << '\n';
            } else {
                for (std::size_t n = 0; n < g.exponents.size(); ++n)
                    out << "n=" << n << " e=" << g.exponents[n] << '\n';
                out << "mu=" << g.mu << " lambda=" << g.lambda << " nu=" << g.nu
                    << " stabilized_at=" << g.stabilized_at << " consistent=" << (g.consistent ? "true" : "false")
                    << '\n';
            }
            if (!g.consistent) return kExitFailure;
        } else if (*lm) {
            require_odd_prime(o.p);
            std::ifstream in(o.file);
            if (!in) throw std::invalid_argument("cannot read '" + o.file + "'");
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
            }
            LinkingData data = [&] {
                try {
                    return json_io::linking_data_from_json(j);
                } catch (const json::exception& e) {
                    throw std::invalid_argument(std::string("malformed linking data: ") + e.what());
                }
            }();
            const auto c = criterion(data, o.p);
            json res = json_io::to_json(c, o.p);
            res["matrix"] = json_io::to_json(linking_matrix(data));
            out << res.dump() << '\n';
        } else if (*eq) {
            out << same_type_partner(make_fraction(o.a, o.b)).a() << '\n';
        } else if (*sw) {
            require_odd_prime(o.p);
            const auto pred = o.predicate == "s" ? Predicate::S : Predicate::U;
            const auto opts = detail::sweep_options(err, "sweep");
            std::ostringstream csv;
            if (o.detail) {
                const auto rows = sweep_detail(o.p, o.max_height, opts);
                csv << kDetailCsvHeader << '\n';
                for (const auto& r : rows) csv << csv_row(r) << '\n';
            }
            const auto report = sweep(o.p, o.max_height, pred, opts);
            if (!o.detail) csv << kTableCsvHeader << '\n' << csv_row(report) << '\n';
            if (!o.csv_path.empty()) detail::write_file(o.csv_path, csv.str());
            if (o.json) {
                out << json_io::to_json(report).dump() << '\n';
            } else if (o.csv_path.empty() && o.detail) {
                out << csv.str();
            } else {
                out << "p=" << report.p << " x=" << format_cutoff(report.x) << " predicate=" << to_string(pred)
                    << " total=" << report.total << " hits=" << report.hits
                    << " proportion=" << report.proportion_exact() << " (" << report.proportion_decimal() << ")";
                if (report.error_bound) out << " error_bound=" << format_bound(*report.error_bound);
                out << '\n';
            }
        } else if (*tb) {
            const auto primes = detail::parse_primes(o.primes);
            const auto rows = table(o.max_height, primes, detail::sweep_options(err, "table"));
            std::ostringstream csv;
            csv << kTableCsvHeader << '\n';
            for (const auto& r : rows) csv << csv_row(r) << '\n';
            if (o.csv_path.empty())
                out << csv.str();
            else
                detail::write_file(o.csv_path, csv.str());
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace bridgestat::cli
