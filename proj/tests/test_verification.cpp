#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sqfw/verification.hpp"

using namespace sqfw;

TEST_CASE("individual checks pass at small depths") {
    CHECK(verify_iterates_squarefree(3).pass);
    CHECK(verify_block_permutations(1).pass);
    CHECK(verify_block_permutations(2).pass);
    CHECK(verify_center_extraction(1).pass);
    CHECK(verify_center_extraction(2).pass);
    CHECK(verify_route_agreement(2).pass);
}

TEST_CASE("a zero bound yields a vacuous pass") {
    const CheckResult result = verify_iterates_squarefree(0);
    CHECK(result.pass);
    CHECK(result.witness.find("vacuous") != std::string::npos);
    CHECK(verify_route_agreement(0).pass);
    CHECK(verify_block_permutations(0).pass);
}

TEST_CASE("the sweep report states its tested bound") {
    const CheckResult result = verify_iterates_squarefree(4, 3);
    CHECK(result.pass);
    CHECK(result.witness.find("n = 1..4") != std::string::npos);
}

TEST_CASE("verify_all passes with a small config and is deterministic") {
    VerifyConfig config;
    config.n_max = 3;
    config.naive_n_max = 3;
    config.antisymmetry_n_max = 3;
    config.thue_morse_log2 = 10;
    config.gap_word_log2 = 10;

    const VerificationReport first = verify_all(config);
    CHECK(first.all_pass());
    CHECK(first.checks.size() >= 5);

    const VerificationReport second = verify_all(config);
    REQUIRE(first.checks.size() == second.checks.size());
    for (std::size_t k = 0; k < first.checks.size(); ++k) {
        CHECK(first.checks[k].name == second.checks[k].name);
        CHECK(first.checks[k].params == second.checks[k].params);
        CHECK(first.checks[k].pass == second.checks[k].pass);
        CHECK(first.checks[k].witness == second.checks[k].witness);
    }
}

TEST_CASE("minimal config still emits five or more records") {
    VerifyConfig config;
    config.n_max = 1;
    config.naive_n_max = 1;
    config.antisymmetry_n_max = 1;
    config.thue_morse_log2 = 8;
    config.gap_word_log2 = 8;
    const VerificationReport report = verify_all(config);
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 5);
}

TEST_CASE("fault injection fails with a localizing witness") {
    VerifyConfig config;
    config.n_max = 3;
    config.naive_n_max = 3;
    config.antisymmetry_n_max = 2;
    config.thue_morse_log2 = 8;
    config.gap_word_log2 = 8;
    config.fault_inject = true;

    const VerificationReport report = verify_all(config);
    CHECK_FALSE(report.all_pass());
    CHECK(report.fail_count() >= 1);

    bool route_agreement_failed = false;
    for (const CheckResult& check : report.checks) {
        if (!check.pass) {
            CHECK_FALSE(check.witness.empty());
        }
        if (check.name == "route_agreement" && !check.pass) {
            route_agreement_failed = true;
            CHECK(check.witness.find("index") != std::string::npos);
        }
    }
    CHECK(route_agreement_failed);
}

TEST_CASE("the JSONL report parses line by line with the expected fields") {
    VerifyConfig config;
    config.n_max = 1;
    config.naive_n_max = 1;
    config.antisymmetry_n_max = 1;
    config.thue_morse_log2 = 8;
    config.gap_word_log2 = 8;
    const VerificationReport report = verify_all(config);

    std::istringstream lines(report.to_jsonl());
    std::string line;
    std::size_t records = 0;
    while (std::getline(lines, line)) {
        const nlohmann::json record = nlohmann::json::parse(line);
        CHECK(record.contains("name"));
        CHECK(record.contains("params"));
        CHECK(record.contains("status"));
        CHECK(record.contains("witness"));
        CHECK(record.contains("ms"));
        CHECK((record["status"] == "pass" || record["status"] == "fail"));
        ++records;
    }
    CHECK(records == report.checks.size());

    const std::string summary = report.summary();
    CHECK(summary.find("checks") != std::string::npos);
}
