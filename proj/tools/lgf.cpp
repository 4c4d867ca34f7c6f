// lgf: command-line front end for compositae, logarithmic superpositions and
// the compositeness witnesses derived from them.
//
// Exit codes: 0 success or "passes", 1 composite-witnessed, 2 usage or input
// error, 3 internal consistency failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgf/compositae.hpp"
#include "lgf/errors.hpp"
#include "lgf/json_io.hpp"
#include "lgf/sequences.hpp"
#include "lgf/superposition.hpp"
#include "lgf/witness.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitComposite = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr std::size_t kDefaultOrder = 64;

struct RunConfig {
    std::string format = "text";
    std::string seq;
    std::optional<std::size_t> order;
    std::uint64_t n = 0;
    std::string test;
    std::uint64_t lo = 2;
    std::uint64_t hi = 0;
    int threads = 0;
};

// The series order must cover the largest n requested. An explicit --order that
// is too small is a usage error; the default grows to fit.
std::size_t effective_order(const RunConfig& cfg, std::uint64_t needed) {
    if (cfg.order) {
        if (*cfg.order < needed) {
            throw lgf::InputError("--order " + std::to_string(*cfg.order) + " is smaller than the requested n = " +
                                  std::to_string(needed));
        }
        return *cfg.order;
    }
    return std::max<std::size_t>(kDefaultOrder, needed);
}

lgf::SequenceSpec sequence(const RunConfig& cfg, std::size_t order) {
    return lgf::parse_sequence_spec(cfg.seq, order);
}

void emit(const RunConfig& cfg, const std::string& command, json input, json result, const std::string& text) {
    if (cfg.format == "json") {
        std::cout << json{{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}}.dump()
                  << '\n';
    } else {
        std::cout << text;
    }
}

lgf::WitnessTest witness_test(const RunConfig& cfg, std::uint64_t needed) {
    const std::string name = cfg.test.empty() ? (cfg.seq.empty() ? "" : "generic") : cfg.test;
    if (name == "generic") {
        if (cfg.seq.empty()) {
            throw lgf::InputError("--test generic needs --seq");
        }
        const auto spec = sequence(cfg, effective_order(cfg, needed));
        return lgf::WitnessTest::generic(lgf::build_series(spec), spec.id());
    }
    if (!cfg.seq.empty()) {
        throw lgf::InputError("--seq only applies to --test generic");
    }
    if (name == "fermat2") {
        return lgf::WitnessTest::fermat2();
    }
    if (name == "lucas") {
        return lgf::WitnessTest::lucas();
    }
    if (name == "central-binomial") {
        return lgf::WitnessTest::central_binomial();
    }
    throw lgf::InputError("unknown --test '" + name + "' (fermat2, lucas, central-binomial, generic)");
}

int cmd_compositae(const RunConfig& cfg) {
    const auto spec = sequence(cfg, cfg.order.value_or(kDefaultOrder));
    const auto table = lgf::compositae_dp(lgf::build_series(spec), spec.order);
    std::string text = "# compositae of " + spec.id() + ", rows n = 1.." + std::to_string(spec.order) + "\n";
    for (std::size_t n = 1; n <= table.order(); ++n) {
        text += "n=" + std::to_string(n) + ":";
        for (const auto& v : table.row(n)) {
            text += ' ' + lgf::to_decimal(v);
        }
        text += '\n';
    }
    emit(cfg, "compositae", {{"seq", spec.id()}, {"order", spec.order}}, table, text);
    return kExitOk;
}

int cmd_loggf(const RunConfig& cfg) {
    const auto spec = sequence(cfg, cfg.order.value_or(kDefaultOrder));
    const auto s = lgf::log_superposition(lgf::build_series(spec), spec.order);
    std::string text = "# G = ln(1/(1-F)) for F = " + spec.id() + "\n";
    for (std::size_t n = 1; n <= s.order; ++n) {
        text += "n=" + std::to_string(n) + " ng=" + lgf::to_decimal(s.ng[n]) + " g=" + s.g.coeff(n).to_string() +
                " h=" + lgf::to_decimal(s.h[n]) + '\n';
    }
    emit(cfg, "loggf", {{"seq", spec.id()}, {"order", spec.order}}, s, text);
    return kExitOk;
}

int cmd_theorem(const RunConfig& cfg) {
    if (cfg.n == 0) {
        throw lgf::InputError("--n must be >= 1");
    }
    const auto spec = sequence(cfg, effective_order(cfg, cfg.n));
    const auto table = lgf::compositae_dp(lgf::build_series(spec), static_cast<std::size_t>(cfg.n));
    const auto r = lgf::theorem_result(table, static_cast<std::size_t>(cfg.n));
    std::string text = "sum_k (n/k) T(n,k) for " + spec.id() + " at n=" + std::to_string(r.n) + ": " +
                       r.value.to_string() + (r.integral() ? " (integral)\n" : " (NOT integral)\n");
    for (std::size_t k = 1; k <= r.n; ++k) {
        text += "  k=" + std::to_string(k) + " T(n,k)=" + lgf::to_decimal(r.compositae_row[k - 1]) + '\n';
    }
    emit(cfg, "theorem", {{"seq", spec.id()}, {"n", cfg.n}, {"order", spec.order}}, r, text);
    return r.integral() ? kExitOk : kExitInternal;
}

int cmd_witness(const RunConfig& cfg) {
    const auto test = witness_test(cfg, cfg.n);
    const auto r = lgf::run_witness(test, cfg.n);
    std::string text = "n=" + std::to_string(r.n) + " test=" + r.test + " residue=" + std::to_string(r.residue) +
                       " verdict=" + std::string(lgf::to_string(r.verdict)) +
                       " is_prime_actual=" + (r.is_prime_actual ? "true" : "false");
    if (r.is_pseudoprime()) {
        text += " PSEUDOPRIME";
    }
    if (r.weak) {
        text += " (weak: f(1) = 0)";
    }
    text += '\n';
    json input{{"test", test.name()}, {"n", cfg.n}};
    if (!cfg.seq.empty()) {
        input["seq"] = cfg.seq;
    }
    emit(cfg, "witness", std::move(input), r, text);
    if (r.is_prime_actual && r.verdict != lgf::Verdict::passes) {
        std::cerr << "lgf: internal error: prime " << r.n << " rejected by " << r.test << '\n';
        return kExitInternal;
    }
    return r.verdict == lgf::Verdict::passes ? kExitOk : kExitComposite;
}

int cmd_scan(const RunConfig& cfg) {
    if (cfg.hi == 0) {
        throw lgf::InputError("--hi is required");
    }
    const auto test = witness_test(cfg, cfg.hi);
    const auto r = lgf::scan_pseudoprimes(test, cfg.lo, cfg.hi, cfg.threads);
    std::string text = "test=" + r.test + " range=[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                       "] primes=" + std::to_string(r.primes_checked) +
                       " composites=" + std::to_string(r.composites_checked) + "\npseudoprimes:";
    for (const auto n : r.pseudoprimes) {
        text += ' ' + std::to_string(n);
    }
    text += '\n';
    json input{{"test", test.name()}, {"lo", cfg.lo}, {"hi", cfg.hi}, {"threads", cfg.threads}};
    if (!cfg.seq.empty()) {
        input["seq"] = cfg.seq;
    }
    emit(cfg, "scan", std::move(input), r, text);
    if (!r.unsound.empty()) {
        std::cerr << "lgf: internal error: " << r.unsound.size() << " primes rejected by " << r.test << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact compositae, logarithmic generating functions and compositeness witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    const auto add_seq = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--seq", cfg.seq,
                                    "ones | primes1 | fib-gf | catalan-shifted | file:<path> | inline:<list>");
        if (required) {
            opt->required();
        }
    };
    const auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", cfg.order, "Truncation order (default 64)")->check(CLI::PositiveNumber);
    };

    auto* compositae = app.add_subcommand("compositae", "Print the compositae triangle T(n,k)");
    add_seq(compositae, true);
    add_order(compositae);

    auto* loggf = app.add_subcommand("loggf", "Coefficients of ln(1/(1-F)) as n*g(n), g(n) and h(n)");
    add_seq(loggf, true);
    add_order(loggf);

    auto* theorem = app.add_subcommand("theorem", "Exact sum_k (n/k) T(n,k) and its integrality");
    add_seq(theorem, true);
    add_order(theorem);
    theorem->add_option("--n", cfg.n, "Index n")->required();

    auto* witness = app.add_subcommand("witness", "Run one compositeness witness at n");
    witness->add_option("--test", cfg.test, "fermat2 | lucas | central-binomial | generic");
    add_seq(witness, false);
    add_order(witness);
    witness->add_option("--n", cfg.n, "Index n >= 2")->required();

    auto* scan = app.add_subcommand("scan", "List composite n in [lo, hi] that pass a witness");
    scan->add_option("--test", cfg.test, "fermat2 | lucas | central-binomial | generic")->required();
    add_seq(scan, false);
    add_order(scan);
    scan->add_option("--lo", cfg.lo, "Range start (>= 2)");
    scan->add_option("--hi", cfg.hi, "Range end")->required();
    scan->add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compositae->parsed()) {
            return cmd_compositae(cfg);
        }
        if (loggf->parsed()) {
            return cmd_loggf(cfg);
        }
        if (theorem->parsed()) {
            return cmd_theorem(cfg);
        }
        if (witness->parsed()) {
            return cmd_witness(cfg);
        }
        return cmd_scan(cfg);
    } catch (const lgf::InputError& e) {
        std::cerr << "lgf: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lgf::InternalConsistencyError& e) {
        std::cerr << "lgf: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
