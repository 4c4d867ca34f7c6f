#include "lgf/primality.hpp"

#include <array>

namespace lgf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0 || n % 3 == 0) {
        return false;
    }
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) {
            return false;
        }
    }
    return true;
}

bool is_prime_miller_rabin(std::uint64_t n) {
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) {
        return false;
    }
    for (const auto p : bases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (const auto a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

bool is_prime(std::uint64_t n) {
    return n <= kTrialDivisionLimit ? is_prime_trial_division(n) : is_prime_miller_rabin(n);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(d, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

}  // namespace lgf
