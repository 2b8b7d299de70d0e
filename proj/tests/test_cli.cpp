#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef ZT_CLI_BIN
#error "ZT_CLI_BIN must point at the command-line binary"
#endif
#ifndef ZT_FIXTURE_DIR
#error "ZT_FIXTURE_DIR must point at the fixture directory"
#endif

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(ZT_CLI_BIN) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(ZT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("count emits the frozen projective-line table") {
    const CliResult tsv = run_cli("count " + fixture("p1_f3.json") + " -R 4 -f tsv");
    CHECK(tsv.code == 0);
    CHECK(tsv.out == "1\t4\n2\t10\n3\t28\n4\t82\n");

    const CliResult text = run_cli("count " + fixture("p1_f3.json") + " -R 2");
    CHECK(text.code == 0);
    CHECK(text.out.find("N_1 = 4") != std::string::npos);
    CHECK(text.out.find("N_2 = 10") != std::string::npos);

    const CliResult js = run_cli("count " + fixture("p1_f3.json") + " -R 3 -f json");
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["command"] == "count");
    CHECK(j["q"] == "3");
    CHECK(j["counts"] == std::vector<std::uint64_t>{4, 10, 28});
    CHECK(j["input"]["hash"].get<std::string>().size() == 16);
}

TEST_CASE("zeta reports the factored form") {
    const CliResult js = run_cli("zeta " + fixture("p1_f3.json") + " -f json");
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["zeta"]["factors"][0] == std::vector<std::string>{"1", "-1"});
    CHECK(j["zeta"]["factors"][1] == std::vector<std::string>{"1"});
    CHECK(j["zeta"]["factors"][2] == std::vector<std::string>{"1", "-3"});
    CHECK(j["zeta"]["kind"] == "standard");

    const CliResult text = run_cli("zeta " + fixture("p1_f3.json"));
    CHECK(text.out.find("P_2 = 1 - 3*t") != std::string::npos);
}

TEST_CASE("verify passes on the projective fixtures") {
    const CliResult p1 = run_cli("verify " + fixture("p1_f3.json") + " -f json");
    CHECK(p1.code == 0);
    const auto j = nlohmann::json::parse(p1.out);
    CHECK(j["pass"] == true);
    CHECK(j["functional_eq_sign"] == 1);
    bool saw_rationality = false, saw_smale = false, saw_block = false;
    for (const auto& c : j["checks"]) {
        if (c["name"] == "rationality") {
            saw_rationality = true;
            CHECK(c["status"] == "pass");
        }
        if (c["name"] == "smale_probe") {
            saw_smale = true;
            CHECK(c["status"] == "reported");
        }
        if (c["name"] == "block_sign_claim") {
            saw_block = true;
            CHECK(c["status"] == "reported");
        }
    }
    CHECK(saw_rationality);
    CHECK(saw_smale);
    CHECK(saw_block);

    const CliResult p2 = run_cli("verify " + fixture("p2_f2.json") + " -f json");
    CHECK(p2.code == 0);
    const auto j2 = nlohmann::json::parse(p2.out);
    CHECK(j2["pass"] == true);
    CHECK(j2["functional_eq_sign"] == -1);
}

TEST_CASE("json and tsv output are byte-identical across worker counts and runs") {
    const std::string base = "count " + fixture("genus2_f3.json") + " -R 5 -f json";
    const CliResult a = run_cli(base + " --workers 1");
    const CliResult b = run_cli(base + " --workers 3");
    const CliResult c = run_cli(base + " --workers 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    const std::string vtsv = "verify " + fixture("p1_f3.json") + " -f tsv";
    CHECK(run_cli(vtsv).out == run_cli(vtsv + " --workers 4").out);
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "/tmp/zt_cli_out.json";
    std::remove(path.c_str());
    const CliResult direct = run_cli("zeta " + fixture("p2_f2.json") + " -f json");
    const CliResult filed =
        run_cli("zeta " + fixture("p2_f2.json") + " -f json -o " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("usage and input problems exit 2") {
    CHECK(run_cli("count /nonexistent.json").code == 2);
    CHECK(run_cli("count").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("count " + fixture("p1_f3.json") + " --no-such-flag").code == 2);
    CHECK(run_cli("count " + fixture("p1_f3.json") + " -f xml").code == 2);
    CHECK(run_cli("frobnicate " + fixture("p1_f3.json")).code == 2);

    const std::string bad = "/tmp/zt_cli_bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("count " + bad).code == 2);
    const std::string inhom = "/tmp/zt_cli_inhom.json";
    std::ofstream(inhom) << R"({"p":5,"num_vars":2,"dim":1,
        "polys":[[{"exps":[1,0],"coeff":1},{"exps":[2,0],"coeff":1}]]})";
    const CliResult r = run_cli("count " + inhom + " -R 1", true);
    CHECK(r.code == 2);
    CHECK(r.out.find("variety_counter") != std::string::npos);
    std::remove(bad.c_str());
    std::remove(inhom.c_str());
}

TEST_CASE("busting the budget exits 3") {
    const CliResult r = run_cli("count " + fixture("e1_f5.json") + " -R 6", true);
    CHECK(r.code == 3);
    CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("insufficient terms exit 1 and name the required count") {
    const CliResult r = run_cli("zeta " + fixture("e1_f5.json") + " -R 5", true);
    CHECK(r.code == 1);
    CHECK(r.out.find("R >= 6") != std::string::npos);
    CHECK(r.out.find("zeta_engine") != std::string::npos);
}

TEST_CASE("trace analysis on the projective line") {
    const CliResult r = run_cli("trace " + fixture("p1_f3.json") + " -f json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["omega"] == "0");
    CHECK(j["trace"] == "0");
    CHECK(j["module_rank"] == 1);
    CHECK(j["point_count_formula"] == "4");
    CHECK(j["lefschetz_number"] == "-2");
}

TEST_CASE("lefschetz analysis reports an empty smale set for the line") {
    const CliResult r = run_cli("lefschetz " + fixture("p1_f3.json") + " -f json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["smale"].empty());
    CHECK(j["lefschetz"]["kind"] == "lefschetz");
    CHECK(j["lefschetz"]["factors"][2] == std::vector<std::string>{"1", "3"});
    CHECK(j["standard"]["factors"][2] == std::vector<std::string>{"1", "-3"});
}

TEST_CASE("cm command checks all fixture curve/prime pairs") {
    const CliResult js = run_cli("cm " + fixture("cm_curves.json") + " -f json");
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["label"] == "e1");
    CHECK(j["rows"][0]["p"] == "5");
    CHECK(j["rows"][0]["n1"] == "8");
    CHECK(j["rows"][0]["psi"] == "-1+2*i");
    CHECK(j["rows"][0]["predict_r1"] == "8");
    CHECK(j["rows"][0]["predict_r2"] == "32");
    CHECK(j["rows"][3]["label"] == "e2");
    CHECK(j["rows"][3]["p"] == "13");
    CHECK(j["rows"][3]["psi"] == "1+2*sqrt(-3)");

    const CliResult tsv = run_cli("cm " + fixture("cm_curves.json") + " -f tsv");
    CHECK(tsv.code == 0);
    int lines = 0;
    for (const char ch : tsv.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 4);
    CHECK(tsv.out.find("e2\t7\t12\t-4\t-2+sqrt(-3)\t12\t48\t48") != std::string::npos);
}

TEST_CASE("full verify pipeline on the elliptic fixture") {
    const CliResult r =
        run_cli("verify " + fixture("e1_f5.json") + " --budget 250000000 -f json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["functional_eq_sign"] == 1);
    CHECK(j["counts"] == std::vector<std::uint64_t>{8, 32, 104, 640, 3208, 15392});
    CHECK(j["zeta"]["factors"][1] == std::vector<std::string>{"1", "2", "5"});
    bool smale_empty = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "smale_probe")
            smale_empty = c["detail"].get<std::string>().find("(empty)") != std::string::npos;
    CHECK(smale_empty);
}
