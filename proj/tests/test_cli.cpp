#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "lgf/json_io.hpp"

#ifndef LGF_CLI_PATH
#error "LGF_CLI_PATH must point at the lgf executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LGF_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args, int expected_status = 0) {
    const Run r = run(args + " --format json");
    CHECK(r.status == expected_status);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("compositae command") {
    const auto fib = run_json("compositae --seq fib-gf --order 5");
    CHECK(fib.at("command") == "compositae");
    CHECK(fib.at("result").at("rows")[3] == nlohmann::json{"0", "1", "3", "1"});

    const auto pascal = run_json("compositae --seq ones --order 4");
    CHECK(pascal.at("result").at("rows")[3] == nlohmann::json{"1", "3", "3", "1"});

    const auto diag = run_json("compositae --seq inline:1 --order 3");
    CHECK(diag.at("result").at("rows")[2] == nlohmann::json{"0", "0", "1"});

    const Run text = run("compositae --seq ones --order 3");
    CHECK(text.status == 0);
    CHECK(text.out.find("n=3: 1 2 1") != std::string::npos);
}

TEST_CASE("loggf command") {
    const auto lucas = run_json("loggf --seq fib-gf --order 17");
    CHECK(lucas.at("result").at("ng").back() == "3571");
    CHECK(lucas.at("result").at("ng").size() == 17);

    const auto catalan = run_json("loggf --seq catalan-shifted --order 10");
    CHECK(catalan.at("result").at("ng").back() == "92378");

    const auto x = run_json("loggf --seq inline:1 --order 5");
    CHECK(x.at("result").at("ng") == nlohmann::json{"1", "1", "1", "1", "1"});
    CHECK(x.at("result").at("g")[2] == "1/3");
}

TEST_CASE("theorem command") {
    const auto ex = run_json("theorem --seq primes1 --n 6");
    CHECK(ex.at("result").at("value") == "380");
    CHECK(ex.at("result").at("integral") == true);
    CHECK(run_json("theorem --seq ones --n 10").at("result").at("value") == "1023");
    CHECK(run_json("theorem --seq inline:0 --n 5").at("result").at("value") == "0");
    CHECK(run("theorem --seq primes1 --n 6").out.find(": 380 (integral)") != std::string::npos);
}

TEST_CASE("witness command exit codes") {
    const auto lucas = run_json("witness --test lucas --n 705");
    CHECK(lucas.at("result").at("verdict") == "passes");
    CHECK(lucas.at("result").at("is_prime_actual") == false);
    CHECK(run("witness --test lucas --n 705").out.find("PSEUDOPRIME") != std::string::npos);

    const auto cb = run_json("witness --test central-binomial --n 4", 1);
    CHECK(cb.at("result").at("verdict") == "composite-witnessed");
    CHECK(cb.at("result").at("residue") == 2);

    CHECK(run("witness --test fermat2 --n 2").status == 0);
    CHECK(run("witness --seq ones --n 91").status == 1);
    CHECK(run("witness --test generic --seq ones --n 341").status == 0);

    const auto round = run_json("witness --test fermat2 --n 561");
    CHECK(round.at("result").get<lgf::WitnessReport>() == lgf::witness_fermat2(561));
}

TEST_CASE("scan command") {
    const auto fermat = run_json("scan --test fermat2 --hi 2000");
    CHECK(fermat.at("result").at("pseudoprimes") == nlohmann::json{341, 561, 645, 1105, 1387, 1729, 1905});
    CHECK(fermat.at("result").get<lgf::ScanResult>() ==
          lgf::scan_pseudoprimes(lgf::WitnessTest::fermat2(), 2, 2000));

    CHECK(run_json("scan --test lucas --hi 705").at("result").at("pseudoprimes") == nlohmann::json{705});
    CHECK(run_json("scan --test fermat2 --lo 2 --hi 10").at("result").at("pseudoprimes").empty());

    const auto one = run("scan --test lucas --hi 3000 --threads 1 --format json");
    const auto four = run("scan --test lucas --hi 3000 --threads 4 --format json");
    const auto r1 = nlohmann::json::parse(one.out).at("result");
    const auto r4 = nlohmann::json::parse(four.out).at("result");
    CHECK(r1 == r4);

    CHECK(run_json("scan --test generic --seq fib-gf --hi 1000").at("result").at("pseudoprimes") ==
          nlohmann::json{705});
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("compositae --seq squares").status == 2);
    CHECK(run("compositae --seq inline:1,x --order 3").status == 2);
    CHECK(run("theorem --seq ones --n 10 --order 5").status == 2);
    CHECK(run("witness --test lucas --n 1").status == 2);
    CHECK(run("witness --test nope --n 5").status == 2);
    CHECK(run("witness --test lucas --seq ones --n 5").status == 2);
    CHECK(run("scan --test fermat2 --lo 20 --hi 10").status == 2);
    CHECK(run("compositae --seq ones --format yaml").status == 2);

    const auto path = std::filesystem::temp_directory_path() / "lgf_cli_bad.txt";
    {
        std::ofstream out(path);
        out << "1\n2\n# fine\nseven\n";
    }
    const std::string cmd = std::string(LGF_CLI_PATH) + " compositae --seq file:" + path.string() + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string err;
    std::array<char, 512> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        err.append(buf.data(), got);
    }
    const int raw = pclose(pipe);
    CHECK(WEXITSTATUS(raw) == 2);
    CHECK(err.find("line 4") != std::string::npos);
    std::filesystem::remove(path);
}
