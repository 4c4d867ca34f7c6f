#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lgf/series.hpp"

namespace lgf {

// Named integer series used by the examples and the CLI.

/// f(n) = 1 for all n.
IntSeries ones_series(std::size_t order);
/// f(1) = 1, then the primes 2, 3, 5, 7, 11, ... at n = 2, 3, 4, ...
IntSeries primes1_series(std::size_t order);
/// x + x^2.
IntSeries fib_gf_series(std::size_t order);
/// f(n) = Catalan(n - 1): 1, 1, 2, 5, 14, ...
IntSeries catalan_shifted_series(std::size_t order);

struct SequenceSpec {
    enum class Kind { ones, primes1, fib_gf, catalan_shifted, file, inline_list };

    Kind kind = Kind::ones;
    std::string argument;  // path for file, comma list for inline_list
    std::size_t order = 64;

    /// Canonical text form, e.g. "ones", "file:coeffs.txt", "inline:1,2".
    std::string id() const;
};

/// Parses "ones", "primes1", "fib-gf", "catalan-shifted", "file:<path>" or
/// "inline:<comma list>". Throws InputError on an unknown kind.
SequenceSpec parse_sequence_spec(std::string_view text, std::size_t order);

/// Materializes the series at spec.order. File and inline coefficients past
/// the list are zero, and those past the order are dropped. Throws ParseError
/// on malformed coefficients.
IntSeries build_series(const SequenceSpec& spec);

}  // namespace lgf
