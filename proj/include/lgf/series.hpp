#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>

#include "lgf/bigrat.hpp"

namespace lgf {

class RatSeries;

/// Truncated power series sum_{n=1}^{N} f(n) x^n with integer coefficients and no
/// constant term. Storage is sparse: an absent index means a zero coefficient.
class IntSeries {
public:
    explicit IntSeries(std::size_t order) : order_(order) {}

    /// Coefficients f(1), f(2), ... taken from `coeffs`; entries past `order` are dropped.
    static IntSeries from_dense(std::size_t order, std::span<const BigInt> coeffs);

    /// Sets f(n). Throws InputError for n == 0 or n > order().
    IntSeries& set(std::size_t n, BigInt value);

    std::size_t order() const noexcept { return order_; }
    BigInt coeff(std::size_t n) const;
    const std::map<std::size_t, BigInt>& terms() const noexcept { return terms_; }

    RatSeries to_rat() const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::size_t order_;
    std::map<std::size_t, BigInt> terms_;
};

/// Truncated power series sum_{n=0}^{N} c(n) x^n with exact rational coefficients.
class RatSeries {
public:
    explicit RatSeries(std::size_t order) : order_(order) {}

    /// Sets c(n). Throws InputError for n > order().
    RatSeries& set(std::size_t n, BigRat value);

    std::size_t order() const noexcept { return order_; }
    BigRat coeff(std::size_t n) const;
    const std::map<std::size_t, BigRat>& terms() const noexcept { return terms_; }

    /// The constant series `value` at the given order.
    static RatSeries constant(std::size_t order, BigRat value);

    friend bool operator==(const RatSeries&, const RatSeries&) = default;

private:
    std::size_t order_;
    std::map<std::size_t, BigRat> terms_;
};

/// Logarithmic generating function sum_{n=1}^{N} a(n)/n x^n with integer a(n).
class LogSeries {
public:
    explicit LogSeries(std::size_t order) : order_(order) {}

    static LogSeries from_dense(std::size_t order, std::span<const BigInt> a);

    /// Sets a(n). Throws InputError for n == 0 or n > order().
    LogSeries& set(std::size_t n, BigInt value);

    std::size_t order() const noexcept { return order_; }
    BigInt a(std::size_t n) const;
    const std::map<std::size_t, BigInt>& terms() const noexcept { return terms_; }

    /// Coefficient n is a(n)/n; coefficient 0 is zero.
    RatSeries to_rat() const;

private:
    std::size_t order_;
    std::map<std::size_t, BigInt> terms_;
};

// Binary operations truncate to the smaller of the two orders.
RatSeries series_add(const RatSeries& p, const RatSeries& q);
RatSeries series_sub(const RatSeries& p, const RatSeries& q);
RatSeries series_mul(const RatSeries& p, const RatSeries& q);

/// Formal derivative; coefficient n-1 of the result is n * p(n). Result order is
/// p.order() - 1, so an order-0 input throws InputError.
RatSeries series_derivative(const RatSeries& p);

/// H(x) = 1 / (1 - F(x)) at F's order. H(0) = 1 and every coefficient is an integer.
RatSeries geometric_inverse(const IntSeries& f);

}  // namespace lgf
