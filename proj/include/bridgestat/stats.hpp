#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bridgestat/arith.hpp"
#include "bridgestat/iwasawa.hpp"
#include "bridgestat/linking.hpp"
#include "bridgestat/schubert.hpp"

namespace bridgestat {

/// S: p does not divide the linking number (mu = 0 and lambda = 1).
/// U: mu = 0, from the exact completed polynomial.
enum class Predicate { S, U };

inline std::string to_string(Predicate pred) { return pred == Predicate::S ? "s" : "u"; }

/// (x + sqrt x) / (x^{3/2} - (5/4)(x + sqrt x)); throws when the denominator is not positive.
inline double error_bound(double x) {
    const double root = std::sqrt(x);
    const double den = x * root - 1.25 * (x + root);
    if (!(den > 0.0))
        throw std::invalid_argument("error_bound: denominator is not positive for x=" + std::to_string(x));
    return (x + root) / den;
}

struct DensityReport {
    Prime p = 3;
    double x = 0;
    Predicate predicate = Predicate::U;
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    std::optional<double> error_bound;  // S only

    /// hits/total as an exact fraction in lowest terms.
    [[nodiscard]] std::string proportion_exact() const {
        const mpq_class q(BigInt(static_cast<unsigned long>(hits)), BigInt(static_cast<unsigned long>(total)));
        mpq_class c = q;
        c.canonicalize();
        return c.get_num().get_str() + "/" + c.get_den().get_str();
    }

    [[nodiscard]] double proportion() const {
        return static_cast<double>(hits) / static_cast<double>(total);
    }

    /// Rounded half-up to `digits` decimals using integer arithmetic only.
    [[nodiscard]] std::string proportion_decimal(unsigned digits = 5) const {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        const BigInt h(static_cast<unsigned long>(hits)), t(static_cast<unsigned long>(total));
        BigInt q;
        const BigInt num = 2 * h * scale + t, den = 2 * t;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        BigInt whole, frac;
        mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
        std::string f = frac.get_str();
        f.insert(0, digits - f.size(), '0');
        return whole.get_str() + "." + f;
    }

    /// |hits/total - (1 - 1/p)| computed exactly, then rounded to double.
    [[nodiscard]] double deviation_from_density() const {
        mpq_class d(BigInt(static_cast<unsigned long>(hits)), BigInt(static_cast<unsigned long>(total)));
        d.canonicalize();
        mpq_class target(BigInt(static_cast<unsigned long>(p - 1)), BigInt(static_cast<unsigned long>(p)));
        target.canonicalize();
        mpq_class diff = d - target;
        return std::fabs(diff.get_d());
    }
};

/// Per-fraction detail row.
struct FractionRecord {
    SchubertFraction fraction;
    std::int64_t linking;
    IwasawaInvariants invariants;
};

struct SweepOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    std::function<void(std::size_t done, std::size_t total)> progress;
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/**
 * Evaluates `work(a)` for every odd numerator a with a^2 < x, in parallel,
 * and returns the results indexed by (a - 1) / 2. Results do not depend on
 * the number of workers.
 */
template <class Work>
auto for_each_numerator(double x, const SweepOptions& opts, Work work)
    -> std::vector<decltype(work(std::uint64_t{1}))> {
    using Result = decltype(work(std::uint64_t{1}));
    const std::uint64_t amax = max_numerator(x);
    const std::size_t n = amax == 0 ? 0 : static_cast<std::size_t>((amax + 1) / 2);
    std::vector<Result> results(n);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                results[k] = work(static_cast<std::uint64_t>(2 * k + 1));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
            const std::size_t d = ++done;
            if (opts.progress) {
                std::lock_guard lock(progress_mutex);
                opts.progress(d, n);
            }
        }
    };

    const unsigned threads = std::min<unsigned>(resolve_threads(opts.threads), std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

inline void require_sweep_inputs(Prime p, double x) {
    require_odd_prime(p);
    if (!(x >= 4))
        throw std::invalid_argument("sweep: height cutoff must be at least 4");
}

} // namespace detail

/// Counts the predicate over all link fractions of height < x.
inline DensityReport sweep(Prime p, double x, Predicate pred, const SweepOptions& opts = {}) {
    detail::require_sweep_inputs(p, x);
    struct Tally {
        std::uint64_t total = 0, hits = 0;
    };
    const auto tallies = detail::for_each_numerator(x, opts, [&](std::uint64_t a) {
        Tally t;
        for (const auto& f : links_with_numerator(a, x)) {
            ++t.total;
            if (pred == Predicate::S) {
                if (linking_number(f) % static_cast<std::int64_t>(p) != 0) ++t.hits;
            } else {
                const auto inv = invariants(f, p);
                if (inv.mu == ExtendedCount(0)) ++t.hits;
            }
        }
        return t;
    });
    DensityReport report;
    report.p = p;
    report.x = x;
    report.predicate = pred;
    for (const auto& t : tallies) {
        report.total += t.total;
        report.hits += t.hits;
    }
    if (pred == Predicate::S) report.error_bound = error_bound(x);
    return report;
}

/// Linking number and exact invariants for every link fraction of height < x.
inline std::vector<FractionRecord> sweep_detail(Prime p, double x, const SweepOptions& opts = {}) {
    detail::require_sweep_inputs(p, x);
    const auto rows = detail::for_each_numerator(x, opts, [&](std::uint64_t a) {
        std::vector<FractionRecord> out;
        for (const auto& f : links_with_numerator(a, x))
            out.push_back(FractionRecord{f, linking_number(f), invariants(f, p)});
        return out;
    });
    std::vector<FractionRecord> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    return all;
}

/**
 * @brief One U-predicate report per prime.
 *
 * Each completed polynomial is built once and tested against every prime.
 */
inline std::vector<DensityReport> table(double x, const std::vector<Prime>& primes, const SweepOptions& opts = {}) {
    for (auto p : primes) detail::require_sweep_inputs(p, x);
    const auto counts = detail::for_each_numerator(x, opts, [&](std::uint64_t a) {
        std::vector<std::uint64_t> hits(primes.size() + 1, 0);  // last slot: total
        for (const auto& f : links_with_numerator(a, x)) {
            ++hits.back();
            const IntPoly poly = completed_polynomial(f);
            for (std::size_t k = 0; k < primes.size(); ++k)
                if (invariants_of(poly, primes[k]).mu == ExtendedCount(0)) ++hits[k];
        }
        return hits;
    });
    std::vector<DensityReport> out;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        DensityReport r;
        r.p = primes[k];
        r.x = x;
        r.predicate = Predicate::U;
        for (const auto& c : counts) {
            r.hits += c[k];
            r.total += c.back();
        }
        out.push_back(r);
    }
    return out;
}

/// Cutoff rendered without a trailing ".0" when integral.
inline std::string format_cutoff(double x) {
    std::ostringstream os;
    if (x == std::floor(x) && std::fabs(x) < 1e15)
        os << static_cast<std::int64_t>(x);
    else
        os << std::setprecision(17) << x;
    return os.str();
}

inline std::string format_bound(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(10) << v;
    return os.str();
}

inline constexpr const char* kTableCsvHeader = "p,x,total,hits,proportion,error_bound";
inline constexpr const char* kDetailCsvHeader = "a,b,linking,mu,lambda";

inline std::string csv_row(const DensityReport& r) {
    std::ostringstream os;
    os << r.p << ',' << format_cutoff(r.x) << ',' << r.total << ',' << r.hits << ',' << r.proportion_decimal() << ','
       << (r.error_bound ? format_bound(*r.error_bound) : std::string());
    return os.str();
}

inline std::string csv_row(const FractionRecord& r) {
    std::ostringstream os;
    os << r.fraction.a() << ',' << r.fraction.b() << ',' << r.linking << ',' << r.invariants.mu << ','
       << r.invariants.lambda;
    return os.str();
}

} // namespace bridgestat
