#include "lgf/sequences.hpp"

#include <string>

#include "lgf/coeff_file.hpp"
#include "lgf/errors.hpp"
#include "lgf/primality.hpp"

namespace lgf {

IntSeries ones_series(std::size_t order) {
    IntSeries f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        f.set(n, 1);
    }
    return f;
}

IntSeries primes1_series(std::size_t order) {
    IntSeries f(order);
    if (order == 0) {
        return f;
    }
    f.set(1, 1);
    std::uint64_t p = 1;
    for (std::size_t n = 2; n <= order; ++n) {
        do {
            ++p;
        } while (!is_prime(p));
        f.set(n, BigInt(static_cast<unsigned long>(p)));
    }
    return f;
}

IntSeries fib_gf_series(std::size_t order) {
    IntSeries f(order);
    for (std::size_t n = 1; n <= std::min<std::size_t>(order, 2); ++n) {
        f.set(n, 1);
    }
    return f;
}

IntSeries catalan_shifted_series(std::size_t order) {
    IntSeries f(order);
    // C_0 = 1, C_{m+1} = C_m * 2(2m+1) / (m+2)
    BigInt c = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        f.set(n, c);
        const auto m = static_cast<unsigned long>(n - 1);
        c *= 2 * (2 * m + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), m + 2);
    }
    return f;
}

std::string SequenceSpec::id() const {
    switch (kind) {
    case Kind::ones:
        return "ones";
    case Kind::primes1:
        return "primes1";
    case Kind::fib_gf:
        return "fib-gf";
    case Kind::catalan_shifted:
        return "catalan-shifted";
    case Kind::file:
        return "file:" + argument;
    case Kind::inline_list:
        return "inline:" + argument;
    }
    return {};
}

SequenceSpec parse_sequence_spec(std::string_view text, std::size_t order) {
    SequenceSpec spec;
    spec.order = order;
    if (text == "ones") {
        spec.kind = SequenceSpec::Kind::ones;
    } else if (text == "primes1") {
        spec.kind = SequenceSpec::Kind::primes1;
    } else if (text == "fib-gf") {
        spec.kind = SequenceSpec::Kind::fib_gf;
    } else if (text == "catalan-shifted") {
        spec.kind = SequenceSpec::Kind::catalan_shifted;
    } else if (text.starts_with("file:") && text.size() > 5) {
        spec.kind = SequenceSpec::Kind::file;
        spec.argument = std::string(text.substr(5));
    } else if (text.starts_with("inline:") && text.size() > 7) {
        spec.kind = SequenceSpec::Kind::inline_list;
        spec.argument = std::string(text.substr(7));
    } else {
        throw InputError("unknown sequence '" + std::string(text) +
                         "' (expected ones, primes1, fib-gf, catalan-shifted, file:<path> or inline:<list>)");
    }
    return spec;
}

IntSeries build_series(const SequenceSpec& spec) {
    switch (spec.kind) {
    case SequenceSpec::Kind::ones:
        return ones_series(spec.order);
    case SequenceSpec::Kind::primes1:
        return primes1_series(spec.order);
    case SequenceSpec::Kind::fib_gf:
        return fib_gf_series(spec.order);
    case SequenceSpec::Kind::catalan_shifted:
        return catalan_shifted_series(spec.order);
    case SequenceSpec::Kind::file:
        return IntSeries::from_dense(spec.order, read_coefficients(std::filesystem::path(spec.argument)));
    case SequenceSpec::Kind::inline_list:
        return IntSeries::from_dense(spec.order, parse_inline_coefficients(spec.argument));
    }
    throw InputError("unknown sequence kind");
}

}  // namespace lgf
