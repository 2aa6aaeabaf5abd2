// Exercises the command-line tool end to end through a subprocess; the path
// to the built binary is injected by the build as PZERO_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PZERO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    RunResult r;
    r.out = std::move(out);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("group build then analyze round-trips") {
    const auto path = temp_file("pzero_cli_psl2_8.json");
    const RunResult build = run_cli("group build --family psl2 --n 8 --out " + path.string());
    REQUIRE(build.exit_code == 0);

    const json doc = json::parse(std::ifstream(path));
    CHECK(doc.at("degree") == 9);
    CHECK(doc.at("metadata").at("family") == "psl2");
    CHECK(doc.at("metadata").at("expected_order") == 504);
    CHECK(doc.at("metadata").at("labels").size() == 9);

    const RunResult analyze = run_cli("group analyze " + path.string());
    REQUIRE(analyze.exit_code == 0);
    const json rep = json::parse(analyze.out);
    CHECK(rep.at("meta").at("seed") == 23130);
    CHECK(rep.at("kind") == "linear_family");
    CHECK(rep.at("family") == "PSL");
    CHECK(rep.at("n") == 8);
    std::filesystem::remove(path);
}

TEST_CASE("group build emits a metadata-only handle for su3") {
    const RunResult r = run_cli("group build --family su3 --n 4");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("family") == "su3");
    CHECK(doc.at("order") == 62400);
    CHECK(doc.at("center_order") == 1);
    CHECK(doc.at("degree") == 4095);
    CHECK(!doc.contains("generators"));
}

TEST_CASE("group analyze classifies the order-6 Frobenius group") {
    const auto path = temp_file("pzero_cli_s3.json");
    std::ofstream(path) << R"({"degree":3,"generators":[[1,2,0],[1,0,2]]})";
    const RunResult r = run_cli("group analyze " + path.string());
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep.at("kind") == "odd_times_2group");
    CHECK(rep.at("s2_order") == 2);
    std::filesystem::remove(path);
}

TEST_CASE("group analyze exits 1 naming a fixed-point-free involution") {
    const auto path = temp_file("pzero_cli_c2.json");
    std::ofstream(path) << R"({"degree":2,"generators":[[1,0]]})";
    const RunResult r = run_cli("group analyze " + path.string());
    CHECK(r.exit_code == 1);
    const json rep = json::parse(r.out);
    CHECK(rep.at("error") == "condition (4) violated");
    CHECK(rep.at("involution") == "(0 1)");
    CHECK(rep.at("fixed_points") == 0);
    std::filesystem::remove(path);
}

TEST_CASE("budget and usage violations exit 2") {
    CHECK(run_cli("group build --family psu3 --n 16").exit_code == 2);
    CHECK(run_cli("curve points --family II --n 4 --field-exp 21").exit_code == 2);
    CHECK(run_cli("group build --family nosuch --n 8").exit_code == 2);
    CHECK(run_cli("group analyze /nonexistent/file.json").exit_code == 2);
    CHECK(run_cli("spectrum --family psu3 --n 4 --quotients --format csv").exit_code == 2);
    CHECK(run_cli("curve info --no-such-flag").exit_code == 2);
}

TEST_CASE("curve info reports genus and automorphism order") {
    const RunResult r = run_cli("curve info --family III --n 8");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("genus") == 14);
    CHECK(doc.at("automorphisms").at("order") == 29120);
    CHECK(doc.at("automorphisms").at("full_group_known") == true);
    CHECK(doc.at("two_rank") == 0);
}

TEST_CASE("curve points emits json and csv") {
    const RunResult j = run_cli("curve points --family II --n 4 --field-exp 4");
    REQUIRE(j.exit_code == 0);
    CHECK(json::parse(j.out).at("total") == 65);

    const RunResult c = run_cli("curve points --family IV --n 4 --field-exp 4 --format csv");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out ==
          "family,field_exp,affine_smooth,infinity_correction,total\n"
          "IV,4,4,1,5\n");
}

TEST_CASE("curve verify-aut passes on the unital and fails cleanly elsewhere") {
    const RunResult ok = run_cli("curve verify-aut --family II --n 4");
    REQUIRE(ok.exit_code == 0);
    const json doc = json::parse(ok.out);
    CHECK(doc.at("group_order") == 62400);
    CHECK(doc.at("points_match") == true);
    CHECK(doc.at("order_match") == true);

    // No verification routine exists for family (IV): invariant exit.
    CHECK(run_cli("curve verify-aut --family IV --n 4").exit_code == 1);
}

TEST_CASE("spectrum emits the psu3(4) table with its witness") {
    const RunResult j = run_cli("spectrum --family psu3 --n 4");
    REQUIRE(j.exit_code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.at("entries").size() == 4);
    CHECK(doc.at("entries")[0].at("case") == "PSU3-first");
    CHECK(doc.at("entries")[0].at("t") == 1);
    CHECK(doc.at("entries")[0].at("witness") == "II");
    CHECK(doc.at("entries")[0].at("genus") == 6);

    const RunResult c = run_cli("spectrum --family psu3 --n 4 --format csv");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out.rfind("family,n,case,t,genus,s_order,sq_order,witness,flags\n", 0) == 0);
    CHECK(c.out.find("psu3,4,PSU3-first,1,6,62400,13,II,") != std::string::npos);

    const RunResult q = run_cli("spectrum --family psu3 --n 4 --quotients");
    REQUIRE(q.exit_code == 0);
    const json table = json::parse(q.out);
    CHECK(table.at("all_consistent") == true);
    bool saw_inadmissible = false;
    for (const auto& chk : table.at("checks"))
        if (chk.at("h") == 65) saw_inadmissible = chk.at("admissible") == false;
    CHECK(saw_inadmissible);
}

TEST_CASE("bounds reports the trigger and the fixed-point route") {
    const RunResult r = run_cli("bounds --g 6 --order 62400");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("checks").at("trigger_gt_24g2") == true);

    const RunResult s = run_cli("bounds --g 4 --order 1152 --solvable true --fixes-point true");
    REQUIRE(s.exit_code == 0);
    const json doc = json::parse(s.out);
    CHECK(doc.at("checks").at("trigger_gt_24g2") == true);
    CHECK(doc.at("checks").at("routed_to_fixed_point") == true);
}

TEST_CASE("verify runs a suite and reports machine-readable results") {
    const RunResult r = run_cli("verify --suite spectrum");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("meta").at("suite") == "spectrum");
    CHECK(doc.at("meta").at("seed") == 23130);
    REQUIRE(doc.at("criteria").size() == 3);
    for (const auto& c : doc.at("criteria")) CHECK(c.at("pass") == true);
    CHECK(doc.at("pass") == true);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string cmds[] = {"spectrum --family psu3 --n 4", "curve info --family II --n 8",
                                "verify --suite spectrum"};
    for (const auto& cmd : cmds) {
        const RunResult a = run_cli(cmd);
        const RunResult b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}
