#include "lgf/compositae.hpp"

#include <algorithm>
#include <string>

#include "lgf/errors.hpp"

namespace lgf {

CompositaeTable::CompositaeTable(std::size_t order) : order_(order), rows_(order) {
    for (std::size_t n = 1; n <= order; ++n) {
        rows_[n - 1].resize(n);
    }
}

const BigInt& CompositaeTable::at(std::size_t n, std::size_t k) const {
    static const BigInt zero(0);
    if (n == 0 || k == 0 || n > order_) {
        throw InputError("compositae index (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") outside table of order " + std::to_string(order_));
    }
    return k > n ? zero : rows_[n - 1][k - 1];
}

BigInt& CompositaeTable::at(std::size_t n, std::size_t k) {
    if (n == 0 || k == 0 || k > n || n > order_) {
        throw InputError("compositae index (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") outside table of order " + std::to_string(order_));
    }
    return rows_[n - 1][k - 1];
}

std::span<const BigInt> CompositaeTable::row(std::size_t n) const {
    if (n == 0 || n > order_) {
        throw InputError("compositae row " + std::to_string(n) + " outside table of order " +
                         std::to_string(order_));
    }
    return rows_[n - 1];
}

PartMultiset::PartMultiset(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw InputError("a part multiset needs at least one part");
    }
    std::sort(parts_.begin(), parts_.end());
    if (parts_.front() == 0) {
        throw InputError("parts must be positive");
    }
    for (const auto p : parts_) {
        sum_ += p;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> PartMultiset::multiplicities() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto p : parts_) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    return out;
}

CompositaeTable compositae_dp(const IntSeries& f, std::size_t n_max) {
    if (n_max > f.order()) {
        throw InputError("compositae up to n = " + std::to_string(n_max) + " needs " + std::to_string(n_max) +
                         " coefficients, series has order " + std::to_string(f.order()));
    }
    CompositaeTable t(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        t.at(n, 1) = f.coeff(n);
        for (std::size_t k = 2; k <= n; ++k) {
            BigInt& cell = t.at(n, k);
            // last part m leaves n - m >= k - 1 for the other k - 1 parts
            for (const auto& [m, c] : f.terms()) {
                if (m > n - k + 1) {
                    break;
                }
                cell += c * t.at(n - m, k - 1);
            }
        }
    }
    return t;
}

namespace {

void accumulate_compositions(const IntSeries& f, std::size_t remaining, std::size_t parts_left,
                             std::vector<std::size_t>& prefix, BigInt& total) {
    if (parts_left == 0) {
        if (remaining == 0) {
            BigInt product = 1;
            for (const auto part : prefix) {
                product *= f.coeff(part);
            }
            total += product;
        }
        return;
    }
    // each of the other parts_left - 1 parts needs at least 1
    for (std::size_t part = 1; part + (parts_left - 1) <= remaining; ++part) {
        prefix.push_back(part);
        accumulate_compositions(f, remaining - part, parts_left - 1, prefix, total);
        prefix.pop_back();
    }
}

void collect_partitions(std::size_t remaining, std::size_t parts_left, std::size_t min_part,
                        std::vector<std::size_t>& prefix, std::vector<PartMultiset>& out) {
    if (parts_left == 0) {
        if (remaining == 0) {
            out.emplace_back(prefix);
        }
        return;
    }
    for (std::size_t part = min_part; part * parts_left <= remaining; ++part) {
        prefix.push_back(part);
        collect_partitions(remaining - part, parts_left - 1, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

BigInt compositae_bruteforce(const IntSeries& f, std::size_t n, std::size_t k) {
    if (n == 0 || k == 0) {
        throw InputError("compositae_bruteforce needs n, k >= 1");
    }
    if (n > f.order()) {
        throw InputError("n = " + std::to_string(n) + " exceeds series order " + std::to_string(f.order()));
    }
    if (n > kBruteforceMaxN) {
        throw InputError("brute-force enumeration is capped at n = " + std::to_string(kBruteforceMaxN));
    }
    BigInt total = 0;
    if (k > n) {
        return total;
    }
    std::vector<std::size_t> prefix;
    prefix.reserve(k);
    accumulate_compositions(f, n, k, prefix, total);
    return total;
}

BigInt multinomial_count(const PartMultiset& parts) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), parts.size());
    BigInt fac;
    for (const auto& [value, count] : parts.multiplicities()) {
        mpz_fac_ui(fac.get_mpz_t(), count);
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), fac.get_mpz_t());
    }
    return result;
}

std::vector<PartMultiset> enumerate_part_multisets(std::size_t n, std::size_t k) {
    std::vector<PartMultiset> out;
    if (k == 0 || k > n) {
        return out;
    }
    std::vector<std::size_t> prefix;
    prefix.reserve(k);
    collect_partitions(n, k, 1, prefix, out);
    return out;
}

}  // namespace lgf
