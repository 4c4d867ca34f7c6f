#include "lgf/series.hpp"

#include <algorithm>
#include <string>

#include "lgf/errors.hpp"

namespace lgf {

IntSeries IntSeries::from_dense(std::size_t order, std::span<const BigInt> coeffs) {
    IntSeries s(order);
    const std::size_t count = std::min(order, coeffs.size());
    for (std::size_t i = 0; i < count; ++i) {
        s.set(i + 1, coeffs[i]);
    }
    return s;
}

IntSeries& IntSeries::set(std::size_t n, BigInt value) {
    if (n == 0 || n > order_) {
        throw InputError("IntSeries index " + std::to_string(n) + " outside 1.." + std::to_string(order_));
    }
    if (value == 0) {
        terms_.erase(n);
    } else {
        terms_[n] = std::move(value);
    }
    return *this;
}

BigInt IntSeries::coeff(std::size_t n) const {
    const auto it = terms_.find(n);
    return it == terms_.end() ? BigInt(0) : it->second;
}

RatSeries IntSeries::to_rat() const {
    RatSeries r(order_);
    for (const auto& [n, c] : terms_) {
        r.set(n, BigRat(c));
    }
    return r;
}

RatSeries& RatSeries::set(std::size_t n, BigRat value) {
    if (n > order_) {
        throw InputError("RatSeries index " + std::to_string(n) + " above order " + std::to_string(order_));
    }
    if (value.is_zero()) {
        terms_.erase(n);
    } else {
        terms_[n] = std::move(value);
    }
    return *this;
}

BigRat RatSeries::coeff(std::size_t n) const {
    const auto it = terms_.find(n);
    return it == terms_.end() ? BigRat() : it->second;
}

RatSeries RatSeries::constant(std::size_t order, BigRat value) {
    RatSeries r(order);
    r.set(0, std::move(value));
    return r;
}

LogSeries LogSeries::from_dense(std::size_t order, std::span<const BigInt> a) {
    LogSeries s(order);
    const std::size_t count = std::min(order, a.size());
    for (std::size_t i = 0; i < count; ++i) {
        s.set(i + 1, a[i]);
    }
    return s;
}

LogSeries& LogSeries::set(std::size_t n, BigInt value) {
    if (n == 0 || n > order_) {
        throw InputError("LogSeries index " + std::to_string(n) + " outside 1.." + std::to_string(order_));
    }
    if (value == 0) {
        terms_.erase(n);
    } else {
        terms_[n] = std::move(value);
    }
    return *this;
}

BigInt LogSeries::a(std::size_t n) const {
    const auto it = terms_.find(n);
    return it == terms_.end() ? BigInt(0) : it->second;
}

RatSeries LogSeries::to_rat() const {
    RatSeries r(order_);
    for (const auto& [n, a] : terms_) {
        r.set(n, BigRat(a, BigInt(static_cast<unsigned long>(n))));
    }
    return r;
}

RatSeries series_add(const RatSeries& p, const RatSeries& q) {
    const std::size_t order = std::min(p.order(), q.order());
    RatSeries r(order);
    for (const auto* s : {&p, &q}) {
        for (const auto& [n, c] : s->terms()) {
            if (n > order) {
                break;
            }
            r.set(n, r.coeff(n) + c);
        }
    }
    return r;
}

RatSeries series_sub(const RatSeries& p, const RatSeries& q) {
    RatSeries neg(q.order());
    for (const auto& [n, c] : q.terms()) {
        neg.set(n, -c);
    }
    return series_add(p, neg);
}

RatSeries series_mul(const RatSeries& p, const RatSeries& q) {
    const std::size_t order = std::min(p.order(), q.order());
    std::vector<BigRat> acc(order + 1);
    for (const auto& [i, a] : p.terms()) {
        if (i > order) {
            break;
        }
        for (const auto& [j, b] : q.terms()) {
            if (i + j > order) {
                break;
            }
            acc[i + j] += a * b;
        }
    }
    RatSeries r(order);
    for (std::size_t n = 0; n <= order; ++n) {
        r.set(n, std::move(acc[n]));
    }
    return r;
}

RatSeries series_derivative(const RatSeries& p) {
    if (p.order() == 0) {
        throw InputError("derivative of an order-0 series is undefined");
    }
    RatSeries r(p.order() - 1);
    for (const auto& [n, c] : p.terms()) {
        if (n == 0) {
            continue;
        }
        r.set(n - 1, c * BigRat(static_cast<long>(n)));
    }
    return r;
}

RatSeries geometric_inverse(const IntSeries& f) {
    // h(0) = 1, h(n) = sum_{m=1}^{n} f(m) h(n-m)
    const std::size_t order = f.order();
    std::vector<BigInt> h(order + 1);
    h[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        for (const auto& [m, c] : f.terms()) {
            if (m > n) {
                break;
            }
            h[n] += c * h[n - m];
        }
    }
    RatSeries r(order);
    for (std::size_t n = 0; n <= order; ++n) {
        r.set(n, BigRat(h[n]));
    }
    return r;
}

}  // namespace lgf
