#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "slmn/slmn.hpp"

using json = nlohmann::json;
using namespace slmn;

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(SLMN_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST(Cli, RhoNonStandard) {
    CliRun t = run("rho --sig 1,1,1 --system nonstandard --table");
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(t.out, "0,0|0\n");
    CliRun j = run("rho --sig 1,1,1 --system nonstandard");
    ASSERT_EQ(j.status, 0);
    EXPECT_EQ(json::parse(j.out)["rho"], "0,0|0");
}

TEST(Cli, ClassifyMatchesLibrary) {
    CliRun r = run("classify --sig 2,0,1 --weight \"3,1|2\"");
    ASSERT_EQ(r.status, 0);
    json v = json::parse(r.out);
    Verdict lib = classify_fd(parse_weight("3,1|2"), make_signature(2, 0, 1));
    EXPECT_EQ(v["unitarizable"].get<bool>(), lib.unitarizable);
    EXPECT_EQ(v["case"], "compact");
    ASSERT_EQ(v["reasons"].size(), lib.reasons.size());
    for (std::size_t i = 0; i < lib.reasons.size(); ++i) {
        EXPECT_EQ(v["reasons"][i]["condition"], lib.reasons[i].condition);
        EXPECT_TRUE(v["reasons"][i]["margin"].is_string() || v["reasons"][i]["margin"].is_null());
    }
}

TEST(Cli, FamilySweepSu22) {
    CliRun r = run("family --sig 2,0,2 --a 0,1 --b 2,0 --sweep 0:5:1/2");
    ASSERT_EQ(r.status, 0);
    json out = json::parse(r.out);
    ASSERT_EQ(out["points"].size(), 11u);
    EXPECT_EQ(out["thresholds"]["x_min"], "2");
    EXPECT_EQ(out["thresholds"]["x_max"], "2");
    for (const auto& p : out["points"]) {
        Rational x = parse_rational(p["x"].get<std::string>());
        bool want = x == 2 || x > 2;
        EXPECT_EQ(p["unitarizable"].get<bool>(), want) << p["x"];
    }
    // short parameter forms give the same report
    CliRun s = run("family --sig 2,0,2 --a 1 --b 2 --sweep 0:5:1/2");
    EXPECT_EQ(s.out, r.out);
}

TEST(Cli, FamilyTable) {
    CliRun r = run("family --sig 1,1,1 --lambda -3 --sweep -2:2:1 --table");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("x\tweight\tunitarizable"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
    CliRun r = run("family --sig 1,1,2 --lambda -2 --b 1 --sweep -2:2:1/4");
    ASSERT_EQ(r.status, 0);
    Signature s = make_signature(1, 1, 2);
    for (const auto& p : json::parse(r.out)["points"]) {
        Verdict v = classify(parse_weight(p["weight"].get<std::string>()), s);
        EXPECT_EQ(v.unitarizable, p["unitarizable"].get<bool>());
        ASSERT_EQ(v.reasons.size(), p["reasons"].size());
        for (std::size_t i = 0; i < v.reasons.size(); ++i)
            EXPECT_EQ(p["reasons"][i]["condition"], v.reasons[i].condition);
    }
}

TEST(Cli, MarginsGramKs) {
    CliRun m = run("margins --sig 2,0,2 --a 1 --b 2 --x 2");
    ASSERT_EQ(m.status, 0);
    json mj = json::parse(m.out);
    EXPECT_FALSE(mj["typical"].get<bool>());
    bool saw = false;
    for (const auto& row : mj["margins"])
        if (row["root"] == "e2-d2") {
            saw = true;
            EXPECT_EQ(row["margin"], "0");
        }
    EXPECT_TRUE(saw);

    CliRun g = run("gram --sig 2,0,1 --weight \"1,-1|2\" --eta e2-d1");
    ASSERT_EQ(g.status, 0);
    json gj = json::parse(g.out);
    EXPECT_EQ(gj["entries"][0][0], "1");  // L + rho = (1,-2|3)
    EXPECT_TRUE(gj["psd"].get<bool>());

    CliRun k = run("ksdet --sig 2,0,1 --weight \"1,-1|1\" --eta \"1,0|-1\"");
    ASSERT_EQ(k.status, 0);
    json kj = json::parse(k.out);
    PositiveSystem ps = build_positive_system(make_signature(2, 0, 1), PositiveSystemKind::Standard);
    EXPECT_EQ(kj["value"], to_string(ks_determinant(parse_weight("1,-1|1"), Coords{1, 0, -1}, ps).value));
}

TEST(Cli, OracleExitStatus) {
    CliRun ok = run("oracle --sig 2,0,1 --a 1 --sweep 0:3:1/2 --depth 2");
    EXPECT_EQ(ok.status, 0);
    EXPECT_TRUE(json::parse(ok.out)["agree"].get<bool>());
    EXPECT_EQ(run("oracle --sig 2,0,1 --a 1 --x 1 --depth 9").status, 64);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("classify --sig 2,0,1 --bogus").status, 64);
    EXPECT_EQ(run("").status, 64);
    EXPECT_EQ(run("classify --sig 2,0,1 --weight \"1,2\"").status, 64);
    CliRun shape = run("classify --sig 2,0,1 --weight \"1,2|3,4\"");
    EXPECT_EQ(shape.status, 2);
    EXPECT_EQ(json::parse(shape.out)["error"], "LengthMismatch");
    CliRun psl = run("classify --sig 2,0,2 --weight \"1,0|0,0\" --psl");
    EXPECT_EQ(psl.status, 2);
    EXPECT_EQ(json::parse(psl.out)["error"], "PslConstraintViolated");
    EXPECT_EQ(run("rho --sig 2,0,1 --system nonstandard").status, 2);
    EXPECT_EQ(run("family --sig 2,0,1 --a 3,1 --x 0").status, 2);
}
