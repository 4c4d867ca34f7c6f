#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "lgf/bigrat.hpp"
#include "lgf/compositae.hpp"
#include "lgf/superposition.hpp"
#include "lgf/witness.hpp"

// JSON encodings of result types. Big integers and rationals are decimal
// strings ("-3", "7/2"), never JSON numbers.

namespace lgf {

/// Value of sum_{k=1}^{n} (n/k) T(n,k) together with the inner sums T(n,k).
struct TheoremResult {
    std::size_t n = 0;
    BigRat value;
    std::vector<BigInt> compositae_row;  // T(n,1), ..., T(n,n)

    bool integral() const { return value.is_integer(); }
    friend bool operator==(const TheoremResult&, const TheoremResult&) = default;
};

TheoremResult theorem_result(const CompositaeTable& table, std::size_t n);

void to_json(nlohmann::json& j, const BigRat& v);
void from_json(const nlohmann::json& j, BigRat& v);

void to_json(nlohmann::json& j, const CompositaeTable& t);
void from_json(const nlohmann::json& j, CompositaeTable& t);

void to_json(nlohmann::json& j, const LogSuperposition& s);
void from_json(const nlohmann::json& j, LogSuperposition& s);

void to_json(nlohmann::json& j, const TheoremResult& r);
void from_json(const nlohmann::json& j, TheoremResult& r);

void to_json(nlohmann::json& j, const WitnessReport& r);
void from_json(const nlohmann::json& j, WitnessReport& r);

void to_json(nlohmann::json& j, const ScanResult& r);
void from_json(const nlohmann::json& j, ScanResult& r);

}  // namespace lgf

// BigInt is GMP's expression-template class; the serializer lives in
// nlohmann's namespace rather than GMP's.
template <>
struct nlohmann::adl_serializer<mpz_class> {
    static void to_json(json& j, const mpz_class& v) { j = v.get_str(); }
    static void from_json(const json& j, mpz_class& v);
};
