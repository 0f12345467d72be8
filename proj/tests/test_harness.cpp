#include "amq/harness.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace amq;

namespace {

CampaignConfig mini_config() {
    CampaignConfig cfg;
    cfg.functions = {"x2", "exp"};
    cfg.lambda = {0.0, 1.0 / 3.0, 1.0};
    cfg.mu = {0.0, 0.5, 1.0};
    cfg.alpha = {0.5, 1.0};
    cfg.m = {0.5, 1.0};
    cfg.q = {1.0, 2.0};
    return cfg;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("fraction parsing") {
    CHECK(parse_fraction("1/3") == 1.0 / 3.0);  // bit-identical to the double nearest 1/3
    CHECK(parse_fraction("0.25") == 0.25);
    CHECK(parse_fraction("-3/4") == -0.75);
    CHECK_THROWS(parse_fraction("1/0"));
    CHECK_THROWS(parse_fraction("abc"));
}

TEST_CASE("config parsing") {
    const char* text = R"({
        "functions": ["x2", "exp"],
        "lambda": [0, 0.5], "mu": [0.5], "alpha": [1], "m": [1], "q": [1, 2],
        "a": 0, "b": 1, "tol": 1e-10, "format": "json", "seed": 7
    })";
    CampaignConfig cfg = parse_config(text);
    CHECK(cfg.functions.size() == 2);
    CHECK(cfg.q.size() == 2);
    CHECK(cfg.format == "json");
    CHECK(cfg.seed == 7);

    CHECK_THROWS_WITH_AS(parse_config("{\"functions\": []}"), "no functions selected",
                         std::runtime_error);
    CHECK_THROWS_AS(parse_config("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_config("{\"functions\": [\"x2\"], \"lambda\": [0.5]}"),
                    std::runtime_error);  // missing grids
    CHECK_THROWS_AS(load_config("/nonexistent/amq.json"), std::runtime_error);
}

TEST_CASE("mini campaign: coherent summary, zero violations") {
    CampaignConfig cfg = mini_config();
    CampaignResult res = run_campaign(cfg);
    CHECK(res.summary.rows == 2 * 3 * 3 * 2 * 2 * 2);
    CHECK(res.summary.skipped == 0);
    CHECK(res.summary.errors == 0);
    CHECK(res.summary.violations() == 0);
    CHECK(res.summary.cert_passes > 0);
    CHECK(res.summary.worst_ratio_t22 <= 1.0);
    for (const auto& row : res.rows) {
        REQUIRE(row.evaluated());
        if (row.report.certificate.pass && row.report.ratio_t22)
            CHECK(*row.report.ratio_t22 <= 1.0);
    }
}

TEST_CASE("Simpson-only grid over the whole catalog has no violations") {
    CampaignConfig cfg;
    cfg.functions = {"x2", "exp", "xexp", "inv1p", "sin"};
    cfg.lambda = {1.0 / 3.0};
    cfg.mu = {0.5};
    cfg.alpha = {1.0};
    cfg.m = {1.0};
    cfg.q = {1.0, 2.0, 3.0};
    CampaignResult res = run_campaign(cfg);
    CHECK(res.summary.rows == 15);
    CHECK(res.summary.violations() == 0);
    CHECK(res.summary.cert_passes == 12);  // sin fails the certificate at every q
}

TEST_CASE("unknown function id fails the campaign") {
    CampaignConfig cfg = mini_config();
    cfg.functions = {"nope"};
    CHECK_THROWS_AS(run_campaign(cfg), std::runtime_error);
}

TEST_CASE("constraint-violating grid points are skipped with reasons") {
    CampaignConfig cfg = mini_config();
    cfg.functions = {"x2"};
    cfg.a = 0.6;
    cfg.b = 1.0;
    cfg.m = {0.25, 1.0};  // m = 0.25 gives m*b = 0.25 <= a
    CampaignResult res = run_campaign(cfg);
    CHECK(res.summary.skipped == 3 * 3 * 2 * 2);
    CHECK(res.summary.rows == 3 * 3 * 2 * 2);
    REQUIRE_FALSE(res.skip_log.empty());
    CHECK(res.skip_log.front().find("m*b > a") != std::string::npos);
}

TEST_CASE("random rows are deterministic per seed") {
    CampaignConfig cfg = mini_config();
    cfg.functions = {"exp"};
    cfg.lambda = {1.0 / 3.0};
    cfg.mu = {0.5};
    cfg.alpha = {1.0};
    cfg.m = {1.0};
    cfg.q = {1.0};
    cfg.random_rows = 5;
    cfg.seed = 99;
    auto r1 = run_campaign(cfg);
    auto r2 = run_campaign(cfg);
    CHECK(r1.summary.rows == 6);
    CHECK(to_csv(r1.rows) == to_csv(r2.rows));
}

TEST_CASE("csv shape and header") {
    CampaignConfig cfg = mini_config();
    cfg.functions = {"x2"};
    cfg.lambda = {1.0 / 3.0};
    cfg.mu = {0.5};
    cfg.alpha = {1.0};
    cfg.m = {1.0};
    cfg.q = {1.0};
    CampaignResult res = run_campaign(cfg);
    REQUIRE(res.rows.size() == 1);
    std::string csv = to_csv(res.rows);
    std::istringstream is(csv);
    std::string header, row, extra;
    CHECK(std::getline(is, header));
    CHECK(std::getline(is, row));
    CHECK_FALSE(std::getline(is, extra));
    CHECK(header ==
          "function,a,b,lambda,mu,alpha,m,q,case,cert_violation,true_error,"
          "bound_t22,bound_c23,bound_t24,bound_t26,bound_simpson_classical,"
          "ratio_t22,ratio_t24,ratio_t26,identity_residual");
    CHECK(row.substr(0, 3) == "x2,");
    CHECK(row.find(",C1,") != std::string::npos);
}

TEST_CASE("json report round-trips every float bit-exactly") {
    CampaignConfig cfg = mini_config();
    cfg.lambda = {1.0 / 3.0, 1.0};
    cfg.mu = {0.5};
    CampaignResult res = run_campaign(cfg);
    std::string text = to_json(res.rows);
    nlohmann::json j = nlohmann::json::parse(text);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == res.rows.size());
    for (size_t i = 0; i < res.rows.size(); ++i) {
        const auto& row = res.rows[i];
        CHECK(j[i]["function"] == row.function);
        CHECK(j[i]["lambda"].get<double>() == row.params.lambda);
        CHECK(j[i]["true_error"].get<double>() == row.report.quad.true_error);
        if (row.report.bound_t24)
            CHECK(j[i]["bound_t24"].get<double>() == *row.report.bound_t24);
        else
            CHECK(j[i]["bound_t24"].is_null());
        CHECK(j[i]["identity_residual"].get<double>() == row.report.identity_residual);
    }
}

TEST_CASE("campaign writes report and log files") {
    CampaignConfig cfg = mini_config();
    cfg.functions = {"x2"};
    cfg.lambda = {1.0 / 3.0};
    cfg.mu = {0.5};
    cfg.alpha = {1.0};
    cfg.m = {1.0};
    cfg.q = {1.0, 2.0};
    cfg.out = temp_path("amq_test_report.csv");
    cfg.log = temp_path("amq_test_report.log");
    CampaignResult res = run_campaign(cfg);
    (void)res;
    std::ifstream in(cfg.out);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header.substr(0, 9) == "function,");
    std::ifstream log(cfg.log);
    REQUIRE(log.good());
    std::remove(cfg.out.c_str());
    std::remove(cfg.log.c_str());
}

TEST_CASE("default campaign config covers the five functions") {
    CampaignConfig cfg = default_campaign_config();
    CHECK(cfg.functions.size() == 5);
    CHECK(cfg.a == 0.0);
    CHECK(cfg.b == 1.0);
    CHECK(!cfg.lambda.empty());
    CHECK(!cfg.mu.empty());
}

TEST_CASE("shipped default config matches the built-in one") {
    CampaignConfig file = load_config(AMQ_SOURCE_DIR "/configs/default.json");
    CampaignConfig builtin = default_campaign_config();
    CHECK(file.functions == builtin.functions);
    CHECK(file.lambda == builtin.lambda);
    CHECK(file.mu == builtin.mu);
    CHECK(file.alpha == builtin.alpha);
    CHECK(file.m == builtin.m);
    CHECK(file.q == builtin.q);
    CHECK(file.a == builtin.a);
    CHECK(file.b == builtin.b);
    CHECK(file.tol == builtin.tol);
    CHECK(file.cert_points == builtin.cert_points);
}

TEST_CASE("default tolerance honors AMQ_TOL") {
    CHECK(default_tolerance() == 1e-10);
    setenv("AMQ_TOL", "1e-8", 1);
    CHECK(default_tolerance() == 1e-8);
    unsetenv("AMQ_TOL");
    CHECK(default_tolerance() == 1e-10);
}
