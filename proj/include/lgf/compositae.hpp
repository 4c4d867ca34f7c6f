#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lgf/bigrat.hpp"
#include "lgf/series.hpp"

namespace lgf {

/// Triangle T(n, k) = sum over compositions (l_1, ..., l_k) of n of
/// f(l_1) * ... * f(l_k), for 1 <= k <= n <= order.
class CompositaeTable {
public:
    CompositaeTable() = default;
    explicit CompositaeTable(std::size_t order);

    std::size_t order() const noexcept { return order_; }

    /// Entry for 1 <= k <= n <= order; zero for k > n. Throws InputError when
    /// n is 0 or above order, or k is 0.
    const BigInt& at(std::size_t n, std::size_t k) const;
    BigInt& at(std::size_t n, std::size_t k);

    /// Row n as T(n,1), ..., T(n,n).
    std::span<const BigInt> row(std::size_t n) const;

    friend bool operator==(const CompositaeTable&, const CompositaeTable&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n-1][k-1]
};

/// Multiset of positive parts, stored sorted ascending.
class PartMultiset {
public:
    /// Throws InputError if parts is empty or contains a zero.
    explicit PartMultiset(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t sum() const noexcept { return sum_; }
    std::size_t size() const noexcept { return parts_.size(); }

    /// (value, multiplicity) per distinct part, ascending by value.
    std::vector<std::pair<std::size_t, std::size_t>> multiplicities() const;

    friend bool operator==(const PartMultiset&, const PartMultiset&) = default;
    friend auto operator<=>(const PartMultiset& a, const PartMultiset& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::size_t> parts_;
    std::size_t sum_ = 0;
};

/// Builds the triangle up to row n_max with the recurrence over the last part:
/// T(n,1) = f(n), T(n,k) = sum_{m} f(m) T(n-m, k-1). Only the nonzero terms of f
/// are visited. Throws InputError if n_max > f.order().
CompositaeTable compositae_dp(const IntSeries& f, std::size_t n_max);

/// Largest n accepted by compositae_bruteforce.
inline constexpr std::size_t kBruteforceMaxN = 25;

/// Direct sum over every composition of n into k parts. Returns 0 when k > n.
/// Throws InputError when n > f.order(), n > kBruteforceMaxN or n, k is zero.
BigInt compositae_bruteforce(const IntSeries& f, std::size_t n, std::size_t k);

/// Number of distinct orderings of the multiset: k! / (j_1! ... j_m!).
BigInt multinomial_count(const PartMultiset& parts);

/// Every partition of n into exactly k positive parts, in lexicographic order of
/// the ascending part lists. Empty when k > n or k == 0.
std::vector<PartMultiset> enumerate_part_multisets(std::size_t n, std::size_t k);

}  // namespace lgf
