// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lgf/compositae.hpp"
#include "lgf/primality.hpp"
#include "lgf/sequences.hpp"
#include "lgf/superposition.hpp"
#include "lgf/witness.hpp"
#include "oracles.hpp"

using namespace lgf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    body(out);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        out.require(false, "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(budget_seconds) + " s");
    }
    std::printf("[%s] AC%d %s (%.4f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), elapsed,
                out.ok ? "" : " -- ", out.detail.c_str());
    if (!out.ok) {
        ++failures;
    }
}

BigInt power(const BigInt& base, std::size_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

IntSeries random_series(std::mt19937_64& rng, std::size_t order, long bound, bool sprinkle_zeros) {
    auto c = oracle::random_coefficients(rng, order, -bound, bound);
    if (sprinkle_zeros) {
        std::bernoulli_distribution zero(0.4);
        for (auto& v : c) {
            if (zero(rng)) {
                v = 0;
            }
        }
    }
    return IntSeries::from_dense(order, c);
}

// L_n mod n by the plain recurrence, independent of fast doubling.
std::uint64_t lucas_mod_linear(std::uint64_t n) {
    std::uint64_t a = 2 % n;  // L_0
    std::uint64_t b = 1 % n;  // L_1
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t c = (a + b) % n;
        a = b;
        b = c;
    }
    return a;
}

bool is_composite_by_factoring(std::uint64_t n) {
    unsigned count = 0;
    for (const auto& [p, e] : factorize(n)) {
        count += e;
    }
    return count >= 2;
}

}  // namespace

int main() {
    criterion(1, "primes-with-1 at n=6: value 380 and per-k groups", 1e-3, [](Outcome& o) {
        const IntSeries f = primes1_series(6);
        const CompositaeTable t = compositae_dp(f, 6);
        o.require(theorem_sum(t, 6) == BigRat(380), "theorem sum != 380");
        // groups per k, in multiset order
        const std::vector<std::vector<long>> groups{{11}, {14, 20, 9}, {15, 36, 8}, {12, 24}, {10}, {1}};
        for (std::size_t k = 1; k <= 6; ++k) {
            const auto multisets = enumerate_part_multisets(6, k);
            o.require(multisets.size() == groups[k - 1].size(), "group count differs at k=" + std::to_string(k));
            BigInt row = 0;
            for (std::size_t i = 0; i < multisets.size() && i < groups[k - 1].size(); ++i) {
                BigInt term = multinomial_count(multisets[i]);
                for (const auto part : multisets[i].parts()) {
                    term *= f.coeff(part);
                }
                o.require(term == groups[k - 1][i], "group term differs at k=" + std::to_string(k));
                row += term;
            }
            o.require(row == t.at(6, k), "group sum != T(6,k) at k=" + std::to_string(k));
        }
    });

    criterion(2, "ones: sum equals 2^n - 1 for 1 <= n <= 64", 1.0, [](Outcome& o) {
        const IntSeries f = ones_series(64);
        for (std::size_t n = 1; n <= 64; ++n) {
            o.require(theorem_sum(f, n) == BigRat((BigInt(1) << n) - 1), "mismatch at n=" + std::to_string(n));
        }
    });

    criterion(3, "x + x^2: n*g(n) is the Lucas list and Fib(n+1) + Fib(n-1)", 0, [](Outcome& o) {
        const std::vector<long> listed{1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207, 3571};
        const LogSuperposition s = log_superposition(fib_gf_series(17), 17);
        for (std::size_t n = 1; n <= 17; ++n) {
            o.require(s.ng[n] == listed[n - 1], "list mismatch at n=" + std::to_string(n));
            o.require(s.ng[n] == oracle::fibonacci(n + 1) + oracle::fibonacci(n - 1),
                      "Fibonacci identity fails at n=" + std::to_string(n));
        }
    });

    criterion(4, "shifted Catalan: n*g(n) is the listed sequence and C(2n-1, n-1)", 0, [](Outcome& o) {
        const std::vector<long> listed{1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378};
        const LogSuperposition s = log_superposition(catalan_shifted_series(10), 10);
        for (std::size_t n = 1; n <= 10; ++n) {
            o.require(s.ng[n] == listed[n - 1], "list mismatch at n=" + std::to_string(n));
            o.require(s.ng[n] == oracle::binomial(2 * n - 1, n - 1), "binomial mismatch at n=" + std::to_string(n));
        }
    });

    criterion(5, "theorem property suite: 200 sequences, n <= 40; DP and b(L) vs enumeration, n <= 12", 30.0,
              [](Outcome& o) {
                  std::mt19937_64 rng(20240501);
                  for (int seq = 0; seq < 200; ++seq) {
                      const IntSeries f = random_series(rng, 40, 99, seq % 4 == 0);
                      const CompositaeTable t = compositae_dp(f, 40);
                      for (std::size_t n = 1; n <= 40; ++n) {
                          o.require(theorem_sum(t, n).is_integer(), "non-integral theorem sum");
                      }
                      for (std::size_t n = 1; n <= 12; ++n) {
                          for (std::size_t k = 1; k <= n; ++k) {
                              o.require(t.at(n, k) == compositae_bruteforce(f, n, k), "DP != brute force");
                              BigInt via_multisets = 0;
                              for (const auto& l : enumerate_part_multisets(n, k)) {
                                  BigInt term = multinomial_count(l);
                                  for (const auto part : l.parts()) {
                                      term *= f.coeff(part);
                                  }
                                  via_multisets += term;
                              }
                              o.require(via_multisets == t.at(n, k), "b(L) decomposition != DP");
                          }
                      }
                  }
              });

    criterion(6, "corollary suite: primes <= 97 x 50 sequences, identity n g(n) = n*cor + f(1)^n", 0, [](Outcome& o) {
        std::mt19937_64 rng(977);
        const auto prime = oracle::sieve(97);
        for (int seq = 0; seq < 50; ++seq) {
            const IntSeries f = random_series(rng, 97, 99, seq % 5 == 0);
            const CompositaeTable t = compositae_dp(f, 97);
            const LogSuperposition s = log_superposition(t);
            for (std::size_t n = 1; n <= 97; ++n) {
                const BigRat cor = corollary_sum(t, n);
                if (prime[n]) {
                    o.require(cor.is_integer(), "corollary sum not integral at p=" + std::to_string(n));
                }
                const BigRat rhs = cor * BigRat(static_cast<long>(n)) + BigRat(power(f.coeff(1), n));
                o.require(BigRat(s.ng[n]) == rhs, "identity fails at n=" + std::to_string(n));
            }
        }
    });

    criterion(7, "soundness: primes <= 1e4 pass fermat2 and lucas, primes <= 1e3 pass central-binomial", 10.0,
              [](Outcome& o) {
                  const auto prime = oracle::sieve(10000);
                  for (std::uint64_t p = 2; p <= 10000; ++p) {
                      if (!prime[p]) {
                          continue;
                      }
                      o.require(witness_fermat2(p).verdict == Verdict::passes, "fermat2 rejects " + std::to_string(p));
                      o.require(witness_lucas(p).verdict == Verdict::passes, "lucas rejects " + std::to_string(p));
                      if (p <= 1000) {
                          o.require(witness_central_binomial(p).verdict == Verdict::passes,
                                    "central-binomial rejects " + std::to_string(p));
                      }
                  }
              });

    criterion(8, "pseudoprime scans: fermat2 to 2000 and lucas to 1000, verified and thread-independent", 10.0,
              [](Outcome& o) {
                  const std::vector<std::uint64_t> fermat_expected{341, 561, 645, 1105, 1387, 1729, 1905};
                  const std::vector<std::uint64_t> lucas_expected{705};
                  const ScanResult fermat = scan_pseudoprimes(WitnessTest::fermat2(), 2, 2000);
                  const ScanResult lucas = scan_pseudoprimes(WitnessTest::lucas(), 2, 1000);
                  o.require(fermat.pseudoprimes == fermat_expected, "fermat2 list differs");
                  o.require(lucas.pseudoprimes == lucas_expected, "lucas list differs");
                  o.require(fermat.unsound.empty() && lucas.unsound.empty(), "a prime was rejected");
                  for (const auto n : fermat.pseudoprimes) {
                      o.require(oracle::slow_powmod(2, n, n) == 2, "2^n != 2 mod " + std::to_string(n));
                      o.require(is_composite_by_factoring(n), std::to_string(n) + " is not composite");
                  }
                  for (const auto n : lucas.pseudoprimes) {
                      o.require(lucas_mod_linear(n) == 1, "L_n != 1 mod " + std::to_string(n));
                      o.require(is_composite_by_factoring(n), std::to_string(n) + " is not composite");
                  }
                  for (const int threads : {1, 2, 4, 8}) {
                      o.require(scan_pseudoprimes(WitnessTest::fermat2(), 2, 2000, threads) == fermat,
                                "fermat2 scan depends on thread count");
                      o.require(scan_pseudoprimes(WitnessTest::lucas(), 2, 1000, threads) == lucas,
                                "lucas scan depends on thread count");
                  }
                  o.require(scan_pseudoprimes_serial(WitnessTest::fermat2(), 2, 2000) == fermat,
                            "parallel scan differs from serial reference");
              });

    criterion(9, "specialization: generic residues equal fermat2 / lucas / central-binomial for 2 <= n <= 60", 0,
              [](Outcome& o) {
                  const IntSeries ones = ones_series(60);
                  const IntSeries fib = fib_gf_series(60);
                  const IntSeries catalan = catalan_shifted_series(60);
                  for (std::uint64_t n = 2; n <= 60; ++n) {
                      const std::string at = " at n=" + std::to_string(n);
                      o.require(witness_generic(ones, n).residue == witness_fermat2(n).residue, "ones" + at);
                      o.require(witness_generic(fib, n).residue == witness_lucas(n).residue, "fib-gf" + at);
                      o.require(witness_generic(catalan, n).residue == witness_central_binomial(n).residue,
                                "catalan-shifted" + at);
                  }
              });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
