#include "lgf/json_io.hpp"

#include <string>

#include "lgf/errors.hpp"

void nlohmann::adl_serializer<mpz_class>::from_json(const json& j, mpz_class& v) {
    v = lgf::parse_bigint(j.get<std::string>());
}

namespace lgf {

using nlohmann::json;

TheoremResult theorem_result(const CompositaeTable& table, std::size_t n) {
    TheoremResult r;
    r.n = n;
    r.value = theorem_sum(table, n);
    const auto row = table.row(n);
    r.compositae_row.assign(row.begin(), row.end());
    return r;
}

void to_json(json& j, const BigRat& v) { j = v.to_string(); }

void from_json(const json& j, BigRat& v) { v = BigRat::parse(j.get<std::string>()); }

void to_json(json& j, const CompositaeTable& t) {
    json rows = json::array();
    for (std::size_t n = 1; n <= t.order(); ++n) {
        const auto row = t.row(n);
        rows.push_back(std::vector<BigInt>(row.begin(), row.end()));
    }
    j = json{{"order", t.order()}, {"rows", std::move(rows)}};
}

void from_json(const json& j, CompositaeTable& t) {
    const auto order = j.at("order").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != order) {
        throw InputError("compositae JSON: expected " + std::to_string(order) + " rows");
    }
    CompositaeTable out(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto row = rows[n - 1].get<std::vector<BigInt>>();
        if (row.size() != n) {
            throw InputError("compositae JSON: row " + std::to_string(n) + " has wrong length");
        }
        for (std::size_t k = 1; k <= n; ++k) {
            out.at(n, k) = row[k - 1];
        }
    }
    t = std::move(out);
}

// Sequences start at n = 1; the constant terms (g0 = 0, ng0 = 0, h0 = 1) are implied.
void to_json(json& j, const LogSuperposition& s) {
    std::vector<BigRat> g;
    for (std::size_t n = 1; n <= s.order; ++n) {
        g.push_back(s.g.coeff(n));
    }
    j = json{{"order", s.order},
             {"ng", std::vector<BigInt>(s.ng.begin() + 1, s.ng.end())},
             {"g", g},
             {"h", std::vector<BigInt>(s.h.begin() + 1, s.h.end())}};
}

void from_json(const json& j, LogSuperposition& s) {
    LogSuperposition out;
    out.order = j.at("order").get<std::size_t>();
    const auto ng = j.at("ng").get<std::vector<BigInt>>();
    const auto g = j.at("g").get<std::vector<BigRat>>();
    const auto h = j.at("h").get<std::vector<BigInt>>();
    if (ng.size() != out.order || g.size() != out.order || h.size() != out.order) {
        throw InputError("log-superposition JSON: sequence lengths differ from order");
    }
    out.g = RatSeries(out.order);
    out.ng.assign(1, BigInt(0));
    out.h.assign(1, BigInt(1));
    for (std::size_t n = 1; n <= out.order; ++n) {
        out.g.set(n, g[n - 1]);
        out.ng.push_back(ng[n - 1]);
        out.h.push_back(h[n - 1]);
    }
    s = std::move(out);
}

void to_json(json& j, const TheoremResult& r) {
    j = json{{"n", r.n}, {"value", r.value}, {"integral", r.integral()}, {"compositae_row", r.compositae_row}};
}

void from_json(const json& j, TheoremResult& r) {
    r.n = j.at("n").get<std::size_t>();
    r.value = j.at("value").get<BigRat>();
    r.compositae_row = j.at("compositae_row").get<std::vector<BigInt>>();
}

void to_json(json& j, const WitnessReport& r) {
    j = json{{"n", r.n},
             {"test", r.test},
             {"residue", r.residue},
             {"verdict", std::string(to_string(r.verdict))},
             {"is_prime_actual", r.is_prime_actual},
             {"pseudoprime", r.is_pseudoprime()},
             {"weak", r.weak}};
}

void from_json(const json& j, WitnessReport& r) {
    r.n = j.at("n").get<std::uint64_t>();
    r.test = j.at("test").get<std::string>();
    r.residue = j.at("residue").get<std::uint64_t>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.is_prime_actual = j.at("is_prime_actual").get<bool>();
    r.weak = j.value("weak", false);
}

void to_json(json& j, const ScanResult& r) {
    j = json{{"lo", r.lo},
             {"hi", r.hi},
             {"test", r.test},
             {"pseudoprimes", r.pseudoprimes},
             {"primes_checked", r.primes_checked},
             {"composites_checked", r.composites_checked},
             {"unsound", r.unsound}};
}

void from_json(const json& j, ScanResult& r) {
    r.lo = j.at("lo").get<std::uint64_t>();
    r.hi = j.at("hi").get<std::uint64_t>();
    r.test = j.at("test").get<std::string>();
    r.pseudoprimes = j.at("pseudoprimes").get<std::vector<std::uint64_t>>();
    r.primes_checked = j.at("primes_checked").get<std::uint64_t>();
    r.composites_checked = j.at("composites_checked").get<std::uint64_t>();
    r.unsound = j.at("unsound").get<std::vector<std::uint64_t>>();
}

}  // namespace lgf
