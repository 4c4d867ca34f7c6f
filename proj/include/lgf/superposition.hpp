#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lgf/bigrat.hpp"
#include "lgf/compositae.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Z(x) = R(F(x)) up to a fixed order, with n * z(n) alongside.
struct SuperpositionResult {
    RatSeries z{0};
    std::vector<BigRat> n_times_z;  // index n, entry 0 is 0
    std::string r_source;
    std::string f_source;
};

/// G(x) = ln(1 / (1 - F(x))) and H(x) = 1 / (1 - F(x)) up to a fixed order.
/// Vectors are indexed by n with entry 0 holding the constant term, so
/// ng[0] = 0 and h[0] = 1.
struct LogSuperposition {
    std::size_t order = 0;
    RatSeries g{0};
    std::vector<BigInt> ng;
    std::vector<BigInt> h;
};

/// z(n) = sum_{k=1}^{n} T(n,k) r(k) for 1 <= n <= n_max, where T is the
/// compositae of f, and z(0) = r(0). Throws InputError if n_max exceeds either
/// order.
SuperpositionResult superpose(const RatSeries& r, const IntSeries& f, std::size_t n_max,
                              std::string r_source = "R", std::string f_source = "F");

/// Truncated composition R(F(x)) by Horner's rule on series products. Independent
/// of the compositae; used to cross-check superpose.
RatSeries compose_direct(const RatSeries& r, const IntSeries& f, std::size_t n_max);

/// g(n) = sum_k T(n,k)/k and h(n) = sum_k T(n,k). Throws
/// InternalConsistencyError if some n * g(n) is not an integer.
LogSuperposition log_superposition(const IntSeries& f, std::size_t n_max);
LogSuperposition log_superposition(const CompositaeTable& table);

/// n * g(n) for 0 <= n <= n_max via G' = F' * H in integer arithmetic:
/// n g(n) = sum_{m=1}^{n} m f(m) h(n-m). No rationals and no compositae.
std::vector<BigInt> log_derivative_integers(const IntSeries& f, std::size_t n_max);

/// sum_{k=1}^{n} (n/k) T(n,k). Equal to n * g(n).
BigRat theorem_sum(const IntSeries& f, std::size_t n);
BigRat theorem_sum(const CompositaeTable& table, std::size_t n);

/// sum_{k=1}^{n-1} T(n,k)/k. Integral whenever n is prime; returned exactly for
/// every n so composites can be probed.
BigRat corollary_sum(const IntSeries& f, std::size_t n);
BigRat corollary_sum(const CompositaeTable& table, std::size_t n);

/// sum_{k=1}^{n} (n/k) T(n,k) a(k) for n = 1..n_max (entry i holds n = i+1).
/// Throws PropertyViolation at the first non-integral entry.
std::vector<BigRat> statement21_check(const IntSeries& f, const LogSeries& a, std::size_t n_max);

/// sum_{k=1}^{n-1} (a(k)/k) T(n,k), returned exactly.
BigRat statement22_check(const IntSeries& f, const LogSeries& a, std::size_t n);

}  // namespace lgf
