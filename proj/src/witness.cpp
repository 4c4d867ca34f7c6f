#include "lgf/witness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include <omp.h>

#include "lgf/errors.hpp"
#include "lgf/primality.hpp"
#include "lgf/superposition.hpp"

namespace lgf {

namespace {

using u128 = unsigned __int128;

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + m - b);
}

void require_at_least_two(std::uint64_t n) {
    if (n < 2) {
        throw InputError("witness tests need n >= 2, got " + std::to_string(n));
    }
}

WitnessReport make_report(std::uint64_t n, std::string test, std::uint64_t residue) {
    WitnessReport r;
    r.n = n;
    r.test = std::move(test);
    r.residue = residue;
    r.verdict = residue == 0 ? Verdict::passes : Verdict::composite_witnessed;
    r.is_prime_actual = is_prime(n);
    return r;
}

std::uint64_t fermat2_residue(std::uint64_t n) { return submod(powmod(2, n, n), 2 % n, n); }

std::uint64_t lucas_residue(std::uint64_t n) { return submod(lucas_mod(n, n), 1, n); }

std::uint64_t central_binomial_residue(std::uint64_t n) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n - 1, n - 1);
    return submod(mpz_fdiv_ui(c.get_mpz_t(), n), 1, n);
}

// (ng - f1^n) mod n
std::uint64_t generic_residue(const BigInt& ng, const BigInt& f1, std::uint64_t n) {
    const std::uint64_t ng_mod = mpz_fdiv_ui(ng.get_mpz_t(), n);
    const std::uint64_t f1_mod = mpz_fdiv_ui(f1.get_mpz_t(), n);
    return submod(ng_mod, powmod(f1_mod, n, n), n);
}

// Fibonacci pair (F(k), F(k+1)) by fast doubling over the bits of n.
template <typename Step>
void fib_doubling(std::uint64_t n, Step&& step) {
    for (int bit = 63 - std::countl_zero(n | 1U); bit >= 0; --bit) {
        step(((n >> bit) & 1U) != 0);
    }
}

}  // namespace

std::string_view to_string(Verdict v) {
    return v == Verdict::passes ? "passes" : "composite-witnessed";
}

Verdict verdict_from_string(std::string_view s) {
    if (s == "passes") {
        return Verdict::passes;
    }
    if (s == "composite-witnessed") {
        return Verdict::composite_witnessed;
    }
    throw InputError("unknown verdict '" + std::string(s) + "'");
}

WitnessTest WitnessTest::fermat2() { return WitnessTest{}; }

WitnessTest WitnessTest::lucas() {
    WitnessTest t;
    t.kind_ = WitnessKind::lucas;
    return t;
}

WitnessTest WitnessTest::central_binomial(std::uint64_t bound) {
    WitnessTest t;
    t.kind_ = WitnessKind::central_binomial;
    t.bound_ = bound;
    return t;
}

WitnessTest WitnessTest::generic(IntSeries f, std::string series_id) {
    WitnessTest t;
    t.kind_ = WitnessKind::generic;
    t.series_ = std::move(f);
    t.series_id_ = std::move(series_id);
    return t;
}

std::string WitnessTest::name() const {
    switch (kind_) {
    case WitnessKind::fermat2:
        return "fermat2";
    case WitnessKind::lucas:
        return "lucas";
    case WitnessKind::central_binomial:
        return "central-binomial";
    case WitnessKind::generic:
        return "generic(" + series_id_ + ")";
    }
    return {};
}

std::uint64_t lucas_mod(std::uint64_t n, std::uint64_t m) {
    if (m == 0) {
        throw InputError("lucas_mod needs a modulus >= 1");
    }
    if (m == 1) {
        return 0;
    }
    std::uint64_t a = 0;  // F(k)
    std::uint64_t b = 1;  // F(k+1)
    fib_doubling(n, [&](bool odd) {
        const std::uint64_t c = mulmod(a, submod(addmod(b, b, m), a, m), m);  // F(2k)
        const std::uint64_t d = addmod(mulmod(a, a, m), mulmod(b, b, m), m);  // F(2k+1)
        if (odd) {
            a = d;
            b = addmod(c, d, m);
        } else {
            a = c;
            b = d;
        }
    });
    // L(n) = 2 F(n+1) - F(n)
    return submod(addmod(b, b, m), a, m);
}

BigInt lucas_exact(std::uint64_t n) {
    BigInt a = 0;
    BigInt b = 1;
    fib_doubling(n, [&](bool odd) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if (odd) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    });
    return 2 * b - a;
}

WitnessReport witness_fermat2(std::uint64_t n) {
    require_at_least_two(n);
    return make_report(n, "fermat2", fermat2_residue(n));
}

WitnessReport witness_lucas(std::uint64_t n) {
    require_at_least_two(n);
    return make_report(n, "lucas", lucas_residue(n));
}

WitnessReport witness_central_binomial(std::uint64_t n, std::uint64_t bound) {
    require_at_least_two(n);
    if (n > bound) {
        throw InputError("central-binomial materializes C(2n-1, n-1) exactly and is limited to n <= " +
                         std::to_string(bound) + "; no modular path is implemented");
    }
    return make_report(n, "central-binomial", central_binomial_residue(n));
}

WitnessReport witness_generic(const IntSeries& f, std::uint64_t n, std::string_view series_id) {
    require_at_least_two(n);
    if (n > f.order()) {
        throw InputError("generic witness at n = " + std::to_string(n) + " needs series order >= n, have " +
                         std::to_string(f.order()));
    }
    const auto ng = log_derivative_integers(f, n);
    const BigInt f1 = f.coeff(1);
    WitnessReport r = make_report(n, "generic(" + std::string(series_id) + ")", generic_residue(ng[n], f1, n));
    r.weak = f1 == 0;
    return r;
}

WitnessReport run_witness(const WitnessTest& test, std::uint64_t n) {
    switch (test.kind()) {
    case WitnessKind::fermat2:
        return witness_fermat2(n);
    case WitnessKind::lucas:
        return witness_lucas(n);
    case WitnessKind::central_binomial:
        return witness_central_binomial(n, test.bound());
    case WitnessKind::generic:
        return witness_generic(*test.series(), n, test.series_id());
    }
    throw InputError("unknown witness kind");
}

namespace {

struct ScanPlan {
    const WitnessTest& test;
    std::vector<BigInt> ng;  // generic only
    BigInt f1;

    std::uint64_t residue(std::uint64_t n) const {
        switch (test.kind()) {
        case WitnessKind::fermat2:
            return fermat2_residue(n);
        case WitnessKind::lucas:
            return lucas_residue(n);
        case WitnessKind::central_binomial:
            return central_binomial_residue(n);
        case WitnessKind::generic:
            return generic_residue(ng[n], f1, n);
        }
        return 1;
    }
};

ScanPlan make_plan(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2 || lo > hi) {
        throw InputError("scan range must satisfy 2 <= lo <= hi, got [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    }
    ScanPlan plan{test, {}, {}};
    if (test.kind() == WitnessKind::central_binomial && hi > test.bound()) {
        throw InputError("central-binomial scan limited to hi <= " + std::to_string(test.bound()));
    }
    if (test.kind() == WitnessKind::generic) {
        const IntSeries& f = *test.series();
        if (hi > f.order()) {
            throw InputError("generic scan to " + std::to_string(hi) + " needs series order >= hi, have " +
                             std::to_string(f.order()));
        }
        plan.ng = log_derivative_integers(f, hi);
        plan.f1 = f.coeff(1);
    }
    return plan;
}

struct ChunkTally {
    std::vector<std::uint64_t> pseudoprimes;
    std::vector<std::uint64_t> unsound;
    std::uint64_t primes = 0;
    std::uint64_t composites = 0;
};

void scan_chunk(const ScanPlan& plan, std::uint64_t first, std::uint64_t last, ChunkTally& tally) {
    for (std::uint64_t n = first;; ++n) {
        const bool passes = plan.residue(n) == 0;
        if (is_prime(n)) {
            ++tally.primes;
            if (!passes) {
                tally.unsound.push_back(n);
            }
        } else {
            ++tally.composites;
            if (passes) {
                tally.pseudoprimes.push_back(n);
            }
        }
        if (n == last) {
            break;
        }
    }
}

ScanResult merge(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi, const std::vector<ChunkTally>& tallies) {
    ScanResult out;
    out.lo = lo;
    out.hi = hi;
    out.test = test.name();
    for (const auto& t : tallies) {
        out.pseudoprimes.insert(out.pseudoprimes.end(), t.pseudoprimes.begin(), t.pseudoprimes.end());
        out.unsound.insert(out.unsound.end(), t.unsound.begin(), t.unsound.end());
        out.primes_checked += t.primes;
        out.composites_checked += t.composites;
    }
    return out;
}

constexpr std::uint64_t kChunkSize = 256;

}  // namespace

ScanResult scan_pseudoprimes(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi, int threads) {
    const ScanPlan plan = make_plan(test, lo, hi);
    const std::uint64_t span = hi - lo;  // inclusive range has span + 1 values
    const auto chunks = static_cast<std::int64_t>(span / kChunkSize + 1);
    std::vector<ChunkTally> tallies(static_cast<std::size_t>(chunks));
    const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(team)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t first = lo + static_cast<std::uint64_t>(c) * kChunkSize;
        const std::uint64_t last = (hi - first < kChunkSize) ? hi : first + kChunkSize - 1;
        scan_chunk(plan, first, last, tallies[static_cast<std::size_t>(c)]);
    }
    return merge(test, lo, hi, tallies);
}

ScanResult scan_pseudoprimes_serial(const WitnessTest& test, std::uint64_t lo, std::uint64_t hi) {
    const ScanPlan plan = make_plan(test, lo, hi);
    std::vector<ChunkTally> tally(1);
    scan_chunk(plan, lo, hi, tally.front());
    return merge(test, lo, hi, tally);
}

}  // namespace lgf
