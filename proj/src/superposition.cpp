#include "lgf/superposition.hpp"

#include <algorithm>
#include <string>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

void require_order(std::size_t needed, std::size_t order, const char* what) {
    if (needed > order) {
        throw InputError(std::string(what) + " has order " + std::to_string(order) + ", need at least " +
                         std::to_string(needed));
    }
}

BigRat ratio(const BigInt& num, std::size_t den) {
    return BigRat(num, BigInt(static_cast<unsigned long>(den)));
}

}  // namespace

SuperpositionResult superpose(const RatSeries& r, const IntSeries& f, std::size_t n_max, std::string r_source,
                              std::string f_source) {
    require_order(n_max, r.order(), "outer series R");
    require_order(n_max, f.order(), "inner series F");
    const CompositaeTable table = compositae_dp(f, n_max);

    SuperpositionResult out;
    out.z = RatSeries(n_max);
    out.n_times_z.assign(n_max + 1, BigRat());
    out.r_source = std::move(r_source);
    out.f_source = std::move(f_source);
    out.z.set(0, r.coeff(0));
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigRat z;
        for (const auto& [k, rk] : r.terms()) {
            if (k == 0) {
                continue;
            }
            if (k > n) {
                break;
            }
            z += BigRat(table.at(n, k)) * rk;
        }
        out.n_times_z[n] = z * BigRat(static_cast<long>(n));
        out.z.set(n, std::move(z));
    }
    return out;
}

RatSeries compose_direct(const RatSeries& r, const IntSeries& f, std::size_t n_max) {
    require_order(n_max, r.order(), "outer series R");
    require_order(n_max, f.order(), "inner series F");
    RatSeries inner(n_max);
    for (const auto& [n, c] : f.terms()) {
        if (n > n_max) {
            break;
        }
        inner.set(n, BigRat(c));
    }
    // F has no constant term, so F^k contributes nothing below x^k.
    RatSeries acc = RatSeries::constant(n_max, r.coeff(n_max));
    for (std::size_t k = n_max; k-- > 0;) {
        acc = series_add(series_mul(acc, inner), RatSeries::constant(n_max, r.coeff(k)));
    }
    return acc;
}

LogSuperposition log_superposition(const IntSeries& f, std::size_t n_max) {
    return log_superposition(compositae_dp(f, n_max));
}

LogSuperposition log_superposition(const CompositaeTable& table) {
    const std::size_t order = table.order();
    LogSuperposition out;
    out.order = order;
    out.g = RatSeries(order);
    out.ng.assign(order + 1, BigInt(0));
    out.h.assign(order + 1, BigInt(0));
    out.h[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        BigRat g;
        BigInt h = 0;
        const auto row = table.row(n);
        for (std::size_t k = 1; k <= n; ++k) {
            g += ratio(row[k - 1], k);
            h += row[k - 1];
        }
        const BigRat ng = g * BigRat(static_cast<long>(n));
        if (!ng.is_integer()) {
            throw InternalConsistencyError("n*g(n) = " + ng.to_string() + " is not an integer at n = " +
                                           std::to_string(n));
        }
        out.ng[n] = ng.to_integer();
        out.h[n] = std::move(h);
        out.g.set(n, std::move(g));
    }
    return out;
}

std::vector<BigInt> log_derivative_integers(const IntSeries& f, std::size_t n_max) {
    require_order(n_max, f.order(), "series F");
    std::vector<BigInt> h(n_max + 1, BigInt(0));
    std::vector<BigInt> ng(n_max + 1, BigInt(0));
    h[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (const auto& [m, c] : f.terms()) {
            if (m > n) {
                break;
            }
            h[n] += c * h[n - m];
            ng[n] += c * h[n - m] * static_cast<unsigned long>(m);
        }
    }
    return ng;
}

BigRat theorem_sum(const IntSeries& f, std::size_t n) {
    require_order(n, f.order(), "series F");
    return theorem_sum(compositae_dp(f, n), n);
}

BigRat theorem_sum(const CompositaeTable& table, std::size_t n) {
    const auto row = table.row(n);
    BigRat total;
    for (std::size_t k = 1; k <= n; ++k) {
        total += ratio(row[k - 1] * static_cast<unsigned long>(n), k);
    }
    return total;
}

BigRat corollary_sum(const IntSeries& f, std::size_t n) {
    require_order(n, f.order(), "series F");
    if (n == 0) {
        throw InputError("corollary_sum needs n >= 1");
    }
    return corollary_sum(compositae_dp(f, n), n);
}

BigRat corollary_sum(const CompositaeTable& table, std::size_t n) {
    const auto row = table.row(n);
    BigRat total;
    for (std::size_t k = 1; k < n; ++k) {
        total += ratio(row[k - 1], k);
    }
    return total;
}

std::vector<BigRat> statement21_check(const IntSeries& f, const LogSeries& a, std::size_t n_max) {
    require_order(n_max, f.order(), "series F");
    require_order(n_max, a.order(), "logarithmic series");
    const CompositaeTable table = compositae_dp(f, n_max);
    std::vector<BigRat> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigRat total;
        for (const auto& [k, ak] : a.terms()) {
            if (k > n) {
                break;
            }
            total += ratio(table.at(n, k) * ak * static_cast<unsigned long>(n), k);
        }
        if (!total.is_integer()) {
            throw PropertyViolation("derivative superposition coefficient " + total.to_string() +
                                        " is not an integer at n = " + std::to_string(n),
                                    n);
        }
        out.push_back(std::move(total));
    }
    return out;
}

BigRat statement22_check(const IntSeries& f, const LogSeries& a, std::size_t n) {
    require_order(n, f.order(), "series F");
    require_order(n, a.order(), "logarithmic series");
    if (n == 0) {
        throw InputError("statement22_check needs n >= 1");
    }
    const CompositaeTable table = compositae_dp(f, n);
    BigRat total;
    for (const auto& [k, ak] : a.terms()) {
        if (k >= n) {
            break;
        }
        total += ratio(table.at(n, k) * ak, k);
    }
    return total;
}

}  // namespace lgf
