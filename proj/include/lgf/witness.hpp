#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgf/bigrat.hpp"
#include "lgf/series.hpp"

namespace lgf {

enum class WitnessKind { fermat2, lucas, central_binomial, generic };

enum class Verdict { passes, composite_witnessed };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

inline constexpr std::uint64_t kDefaultCentralBinomialBound = 100'000;

/// A compositeness test n | Q(n) derived from the prime-only integrality of
/// sum_{k<n} T(n,k)/k. Residue 0 means "passes"; anything else proves n composite.
class WitnessTest {
public:
    static WitnessTest fermat2();
    static WitnessTest lucas();
    static WitnessTest central_binomial(std::uint64_t bound = kDefaultCentralBinomialBound);
    /// Residue (n g(n) - f(1)^n) mod n for the log-superposition G of f.
    static WitnessTest generic(IntSeries f, std::string series_id);

    WitnessKind kind() const noexcept { return kind_; }
    /// "fermat2", "lucas", "central-binomial" or "generic(<series id>)".
    std::string name() const;
    const IntSeries* series() const noexcept { return series_ ? &*series_ : nullptr; }
    const std::string& series_id() const noexcept { return series_id_; }
    std::uint64_t bound() const noexcept { return bound_; }

private:
    WitnessKind kind_ = WitnessKind::fermat2;
    std::optional<IntSeries> series_;
    std::string series_id_;
    std::uint64_t bound_ = 0;
};

struct WitnessReport {
    std::uint64_t n = 0;
    std::string test;
    std::uint64_t residue = 0;
    Verdict verdict = Verdict::passes;
    bool is_prime_actual = false;
    // generic test with f(1) = 0: still a valid witness but a weak one
    bool weak = false;

    bool is_pseudoprime() const { return verdict == Verdict::passes && !is_prime_actual; }
    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

/// (2^n - 2) mod n by modular exponentiation. Throws InputError for n < 2.
WitnessReport witness_fermat2(std::uint64_t n);

/// (L_n - 1) mod n with L_n reduced modulo n throughout. Throws InputError for n < 2.
WitnessReport witness_lucas(std::uint64_t n);

/// (C(2n-1, n-1) - 1) mod n with the binomial materialized exactly. Throws
/// InputError for n < 2 or n > bound.
WitnessReport witness_central_binomial(std::uint64_t n,
                                       std::uint64_t bound = kDefaultCentralBinomialBound);

/// (n g(n) - f(1)^n) mod n. Throws InputError for n < 2 or n > f.order().
WitnessReport witness_generic(const IntSeries& f, std::uint64_t n, std::string_view series_id = "F");

WitnessReport run_witness(const WitnessTest& test, std::uint64_t n);

/// Lucas number L_n modulo m (m >= 1) by Fibonacci fast doubling.
std::uint64_t lucas_mod(std::uint64_t n, std::uint64_t m);

/// Exact L_n by the same fast doubling, without a modulus.
BigInt lucas_exact(std::uint64_t n);

struct ScanResult {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::string test;
    std::vector<std::uint64_t> pseudoprimes;  // composite n that pass, ascending
    std::uint64_t primes_checked = 0;
    std::uint64_t composites_checked = 0;
    std::vector<std::uint64_t> unsound;  // primes the test rejected; always empty unless broken

    friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// Exhaustive scan of [lo, hi] split into fixed chunks evaluated with OpenMP.
/// Chunk results are concatenated in range order, so the output does not
/// depend on `threads` (0 selects the OpenMP default). Throws InputError unless
/// 2 <= lo <= hi.
ScanResult scan_pseudoprimes(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi,
                             int threads = 0);

/// Single-threaded reference for scan_pseudoprimes.
ScanResult scan_pseudoprimes_serial(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi);

}  // namespace lgf
