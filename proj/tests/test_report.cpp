#include <catch2/catch_amalgamated.hpp>

#include "ostat/commands.hpp"

#include "json.hpp"

namespace {

std::string field(const ostat::Record& rec, const std::string& key) {
    for (const auto& [k, c] : rec)
        if (k == key) return c.text;
    FAIL("missing column " << key);
    return {};
}

}  // namespace

TEST_CASE("csv and json carry the same content", "[report]") {
    auto doc = ostat::cmd_table({5, 1, "exp", 3});
    const std::string csv = ostat::to_csv(doc);
    auto json = nlohmann::json::parse(ostat::to_json(doc));

    CHECK(json["command"] == "table");
    CHECK(json["tool_version"] == ostat::kToolVersion);
    CHECK(json["parameters"]["n"] == "5");
    REQUIRE(json["rows"].size() == 4);
    CHECK(json["summary"]["passed"] == 0);

    std::istringstream lines(csv);
    std::string header, line;
    std::getline(lines, header);
    CHECK(header == "k,h_exact,h,rho,peak");
    for (std::size_t i = 0; i < 4; ++i) {
        std::getline(lines, line);
        const auto& row = json["rows"][i];
        std::ostringstream expect;
        expect << row["k"].get<int>() << "," << row["h_exact"].get<std::string>() << "," << field(doc.rows[i], "h")
               << "," << field(doc.rows[i], "rho") << "," << (row["peak"].get<bool>() ? "true" : "false");
        CHECK(line == expect.str());
        CHECK(row["h"].is_number());
    }
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("csv quoting", "[report]") {
    ostat::ReportDocument doc;
    doc.rows.push_back({{"a", ostat::Cell::str("x,y")}, {"b", ostat::Cell::str("say \"hi\"")}});
    CHECK(ostat::to_csv(doc) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
    CHECK(ostat::to_csv(ostat::ReportDocument{}).empty());
}

TEST_CASE("table command", "[report]") {
    auto doc = ostat::cmd_table({5, 1, "exp", 3});
    CHECK(field(doc.rows[0], "h_exact") == "16/41");
    CHECK(field(doc.rows[0], "h") == "0.390");
    CHECK(field(doc.rows[1], "peak") == "true");

    auto last = ostat::cmd_table({9, 8, "exponential", 3});
    REQUIRE(last.rows.size() == 1);
    CHECK(field(last.rows[0], "h") == "0.008");

    // Uniform, n = 6, t = 2: h(2) = h(3) exactly; the first maximizer is marked.
    auto tie = ostat::cmd_table({6, 2, "uniform", 4});
    REQUIRE(tie.rows.size() == 4);
    CHECK(field(tie.rows[1], "h_exact") == field(tie.rows[2], "h_exact"));
    CHECK(field(tie.rows[1], "peak") == "true");
    CHECK(field(tie.rows[2], "peak") == "false");

    auto quad = ostat::cmd_table({4, 1, "tri-inc", 6});
    CHECK(field(quad.rows[0], "h_exact").empty());

    CHECK_THROWS_AS(ostat::cmd_table({5, 5, "exp", 3}), ostat::UsageError);
    CHECK_THROWS_AS(ostat::cmd_table({5, 1, "cauchy", 3}), ostat::UsageError);
}

TEST_CASE("verify command row counts", "[report]") {
    ostat::VerifyOptions opt;
    opt.target = "thm1";
    opt.n_max = 60;
    auto doc = ostat::cmd_verify(opt);
    CHECK(doc.rows.size() == 1653);  // sum over n = 4..60 of n-3
    CHECK(doc.all_passed());

    opt.n_min = 5;
    opt.jobs = 3;
    auto from5 = ostat::cmd_verify(opt);
    CHECK(from5.rows.size() == 1652);
    CHECK(ostat::to_csv(from5).size() < ostat::to_csv(doc).size());

    opt = {};
    opt.target = "lemma";
    opt.lemma_cases = 500;
    opt.seed = 9;
    auto lemma = ostat::cmd_verify(opt);
    CHECK(lemma.rows.size() == 3);
    CHECK(lemma.all_passed());
    CHECK(ostat::to_csv(lemma) == ostat::to_csv(ostat::cmd_verify(opt)));

    opt.target = "identities";
    opt.n_max = 10;
    auto ids = ostat::cmd_verify(opt);
    CHECK(ids.rows.size() == 20);
    CHECK(field(ids.rows[0], "value") == "1");
}

TEST_CASE("usage errors", "[report]") {
    ostat::VerifyOptions opt;
    opt.target = "nonsense";
    CHECK_THROWS_AS(ostat::cmd_verify(opt), ostat::UsageError);
    opt.target = "thm1";
    opt.n_max = 3;
    CHECK_THROWS_AS(ostat::cmd_verify(opt), ostat::UsageError);

    CHECK_THROWS_AS(ostat::parse_int_range("5..2"), ostat::UsageError);
    CHECK_THROWS_AS(ostat::parse_int_range("a..b"), ostat::UsageError);
    CHECK_THROWS_AS(ostat::parse_int_range("3x"), ostat::UsageError);
    CHECK(ostat::parse_int_range("3..8").hi == 8);
    CHECK(ostat::parse_int_range("4").lo == 4);

    ostat::McOptions mc;
    mc.k = 5;
    CHECK_THROWS_AS(ostat::cmd_mc(mc), ostat::UsageError);
    mc = {};
    mc.mc = {100, 0, 100};
    CHECK_THROWS_AS(ostat::cmd_mc(mc), ostat::UsageError);

    auto spec = ostat::default_ineq_spec(ostat::IneqId::p19);
    spec.k = {1, 3};
    CHECK_THROWS_AS(ostat::cmd_proofcheck(spec), ostat::UsageError);
}

TEST_CASE("proofcheck, explore and mc reports", "[report]") {
    auto spec = ostat::default_ineq_spec(ostat::IneqId::i3_even);
    spec.m = {2, 20};
    spec.t = {1, 20};
    auto proof = ostat::cmd_proofcheck(spec);
    REQUIRE(proof.rows.size() == 1);
    CHECK(field(proof.rows[0], "cells") == "380");
    CHECK(field(proof.rows[0], "min_at") == "m=2,t=1");
    CHECK(proof.all_passed());

    ostat::ExploreOptions ex;
    ex.n = {3, 5};
    auto explore = ostat::cmd_explore(ex);
    CHECK(explore.rows.size() == 2 + 3 + 4);
    CHECK(explore.all_passed());

    ostat::McOptions mc;
    mc.mc = {20000, 7, 1000};
    auto est = ostat::cmd_mc(mc);
    CHECK(est.seed == 7u);
    CHECK(field(est.rows[0], "h_exact") == "369/769");
    CHECK(ostat::to_json(est) == ostat::to_json(ostat::cmd_mc(mc)));
}

TEST_CASE("csv columns are the union over rows", "[report]") {
    ostat::ReportDocument doc;
    doc.rows.push_back({{"n", ostat::Cell::integer(1)}, {"passed", ostat::Cell::boolean(true)}});
    doc.rows.push_back({{"n", ostat::Cell::integer(2)}, {"error", ostat::Cell::str("x")}});
    CHECK(ostat::to_csv(doc) == "n,passed,error\n1,true,\n2,,x\n");

    ostat::VerifyOptions opt;
    opt.target = "uniform-shape";
    opt.n_max = 6;
    auto shape = ostat::cmd_verify(opt);
    CHECK(shape.all_passed());
    for (const auto& rec : shape.rows) CHECK(rec.size() == shape.rows.front().size());
}
