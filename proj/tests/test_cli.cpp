#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef PTK_CLI_PATH
#error "PTK_CLI_PATH must point at the command line binary"
#endif

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PTK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/ptk_cli_test_" + name;
    std::ofstream f(path);
    f << body;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

} // namespace

TEST_CASE("zetap prints the canonical digit string") {
    auto r = run_cli("zetap --s 2 --p 7 --prec 15");
    CHECK(r.code == 0);
    CHECK(r.out == "0 + O(7^15)\n");
}

TEST_CASE("sunits lists the three 2-unit points") {
    auto r = run_cli("sunits --set 2 --bound 20");
    CHECK(r.code == 0);
    CHECK(r.out == "-1\n1/2\n2\n");
}

TEST_CASE("ck solve reports the matched set as json") {
    auto r = run_cli("ck solve --p 5 --prec 20 --depth 2 --json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "ck solve");
    CHECK(j["config"]["p"] == 5);
    CHECK(j["config"]["prec"] == 20);
    CHECK(j["matched"] == nlohmann::json::array({"-1", "1/2", "2"}));
    CHECK(j["extras"].empty());
    for (const auto& row : j["candidates"]) {
        CHECK(row["found"] == true);
        CHECK(row["zero"].is_string());
    }
}

TEST_CASE("descent reports both example curves") {
    auto r0 = run_cli("descent --a 0 --b -1 --max-height 3");
    CHECK(r0.code == 0);
    CHECK(r0.out.find("verdict: rank-determined") != std::string::npos);
    CHECK(r0.out.find("rank: 0") != std::string::npos);

    auto r1 = run_cli("descent --a 0 --b -36 --max-height 2.5 --json");
    REQUIRE(r1.code == 0);
    auto j = nlohmann::json::parse(r1.out);
    CHECK(j["verdict"] == "rank-determined");
    CHECK(j["selmer_upper_bound"] == 1);
    CHECK(j["rank_lower_bound"] == 1);
    CHECK(j["generators"].size() == 1);
    CHECK(j["generators"][0]["x"] == "-2");
    CHECK(j["generators"][0]["y"] == "8");
    CHECK(j["selmer"]["classes"].size() == 8);
    CHECK(j["partner_selmer"]["classes"] == nlohmann::json::array({1}));
}

TEST_CASE("ck verify prints the value and the verdict") {
    auto r = run_cli("ck verify --p 5 --prec 20 --depth 2 --z 1/2");
    CHECK(r.code == 0);
    CHECK(r.out.find("|f(z)| <= 5^-17: yes") != std::string::npos);
}

TEST_CASE("coh subcommands consume json input files") {
    auto kum = write_temp("kum.json", "{\"q\":7,\"n\":3,\"m\":3}");
    auto r = run_cli("coh kummer --input " + kum + " --json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["h1_order"] == 3);
    CHECK(j["unit_index"] == 3);

    auto les = write_temp("les.json", "{\"seed\":3}");
    auto r2 = run_cli("coh les --input " + les);
    CHECK(r2.code == 0);
    CHECK(r2.out.find("exact: yes") != std::string::npos);

    auto h1 = write_temp("h1.json",
        "{\"group\":{\"cyclic\":2},\"coefficients\":{\"cyclic\":3},"
        "\"action\":[[0,1,2],[0,2,1]]}");
    auto r3 = run_cli("coh h1 --input " + h1);
    CHECK(r3.code == 0);
    CHECK(r3.out.find("cocycles: 3") != std::string::npos);
    CHECK(r3.out.find("classes: 1") != std::string::npos);

    auto bar = write_temp("bar.json", "{\"group\":{\"cyclic\":4},\"moduli\":[2],\"degree\":2}");
    auto r4 = run_cli("coh bar --input " + bar);
    CHECK(r4.code == 0);
    CHECK(r4.out.find("order: 2") != std::string::npos);

    auto cs = write_temp("cs.json", "{\"n\":2,\"rho\":\"identity\"}");
    auto r5 = run_cli("coh cs --input " + cs);
    CHECK(r5.code == 0);
    CHECK(r5.out.find("class order: 2") != std::string::npos);
}

TEST_CASE("exit codes partition the error classes") {
    CHECK(run_cli("zetap --s 1 --p 5 --prec 10").code == 1);
    CHECK(run_cli("zetap --s 2 --p 4 --prec 10").code == 1);
    CHECK(run_cli("polylog --k 2 --z 1 --p 5 --prec 10").code == 1);
    CHECK(run_cli("descent --a 2 --b 1 --max-height 1").code == 1);

    auto les = write_temp("les1.json", "{\"seed\":1}");
    CHECK(run_cli("coh les --input " + les + " --budget 1").code == 2);

    CHECK(run_cli("nonsense").code == 64);
    CHECK(run_cli("zetap --nope 3").code == 64);
    CHECK(run_cli("ck").code == 64);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("coh les").code == 1);
}

TEST_CASE("config file supplies defaults that flags override") {
    auto cfg = write_temp("run.cfg",
        "# unit equation defaults\np = 7\nprec = 18\ndepth = 2\nslack = 4\n");
    auto r = run_cli("ck solve --config " + cfg + " --p 5 --json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["p"] == 5);
    CHECK(j["config"]["prec"] == 18);
    CHECK(j["config"]["slack"] == 4);

    auto bad = write_temp("bad.cfg", "zz = 3\n");
    CHECK(run_cli("ck solve --config " + bad).code == 64);
    auto noeq = write_temp("noeq.cfg", "p 7\n");
    CHECK(run_cli("ck solve --config " + noeq).code == 64);
    CHECK(run_cli("ck solve --config /tmp/ptk_cli_test_missing.cfg").code == 64);
}

TEST_CASE("reports rerun byte for byte") {
    std::string out = "/tmp/ptk_cli_test_rep.json";
    auto r1 = run_cli("zetap --s 3 --p 5 --prec 15 --out " + out);
    REQUIRE(r1.code == 0);
    std::string first = slurp(out);
    auto r2 = run_cli("zetap --s 3 --p 5 --prec 15 --out " + out);
    REQUIRE(r2.code == 0);
    CHECK(first == slurp(out));
    CHECK(!first.empty());

    auto j = nlohmann::json::parse(first);
    CHECK(j["config"]["out"] == out);
    CHECK(j["schema"] == 1);
}
