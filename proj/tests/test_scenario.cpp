#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "admac/admac.hpp"
#include "support/fixtures.hpp"

using namespace admac;
using namespace admac::testing;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string scenario_path(const std::string& name) {
    return std::string(ADMAC_SCENARIOS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("the income-vs-rate scenario parses to the expected profile") {
    auto profile = parse_scenario(read_file(scenario_path("islm_income_vs_rate.json")));
    CHECK(profile.valuation.model() == ModelId::ISLM);
    CHECK(profile.angel_set == ComponentSet{"b", "G"});
    CHECK(profile.daemon_set == ComponentSet{"G", "P", "T"});
    CHECK(profile.angel_spread == 1);
    CHECK(profile.daemon_spread == 2);
    CHECK(profile.utility_kind == UtilityKind::Bimatrix);
    CHECK(profile.angel_utility.str() == "Y");
    CHECK(profile.daemon_utility.str() == "r");
    CHECK(profile.valuation["b"] == ExactScalar(3, 4));
    CHECK(profile.strength.daemon_delta("G") == ExactScalar(-25));
    CHECK(profile == islm_income_vs_rate_profile());
}

TEST_CASE("explicit zero-sum utilities parse") {
    auto profile = parse_scenario(R"({
        "model": "ISLM",
        "valuation": {"a": 200, "b": "3/4", "c": 200, "d": 25, "e": 1, "f": 100,
                      "T": 100, "G": 100, "M": 1000, "P": 2},
        "strength": {"angel": {"b": "1/20"}, "daemon": {"P": 1}},
        "profile": {"A": ["b"], "D": ["P"], "b_A": 1, "b_D": 1},
        "utilities": {"zero_sum": "Y - 550/3*r"}
    })");
    CHECK(profile.utility_kind == UtilityKind::ZeroSum);
    CHECK(profile.angel_utility.str() == "Y - 550/3*r");
    auto game = build_game<ExactScalar>(profile);
    CHECK(game.zero_sum());
}

TEST_CASE("an omitted strength table compiles to a constant game") {
    auto profile = parse_scenario(R"({
        "model": "ISLM",
        "valuation": {"a": 200, "b": "3/4", "c": 200, "d": 25, "e": 1, "f": 100,
                      "T": 100, "G": 100, "M": 1000, "P": 2},
        "profile": {"A": ["b", "G"], "D": ["P", "T"], "b_A": 1, "b_D": 1},
        "utilities": {"angel": "Y", "daemon": "r"}
    })");
    auto game = build_game<ExactScalar>(profile);
    for (std::size_t i = 0; i < game.rows(); ++i)
        for (std::size_t j = 0; j < game.cols(); ++j) {
            CHECK(game.cell(i, j).angel == ExactScalar(1100));
            CHECK(game.cell(i, j).daemon == ExactScalar(6));
        }
    CHECK(pure_nash(game).size() == 4);
}

TEST_CASE("scenario rejections") {
    SECTION("not JSON") {
        CHECK_THROWS_AS(parse_scenario("model = ISLM"), Error);
    }
    SECTION("non-integer JSON number") {
        CHECK_THROWS_AS(parse_scenario(R"({
            "model": "ISLM",
            "valuation": {"a": 200, "b": 0.75, "c": 200, "d": 25, "e": 1, "f": 100,
                          "T": 100, "G": 100, "M": 1000, "P": 2},
            "profile": {"A": ["b"], "D": ["P"], "b_A": 1, "b_D": 1},
            "utilities": {"angel": "Y", "daemon": "r"}
        })"),
                        Error);
    }
    SECTION("bound violation is caught at parse time") {
        try {
            parse_scenario(R"({
                "model": "ISLM",
                "valuation": {"a": 200, "b": 1, "c": 200, "d": 25, "e": 1, "f": 100,
                              "T": 100, "G": 100, "M": 1000, "P": 2},
                "profile": {"A": ["b"], "D": ["P"], "b_A": 1, "b_D": 1},
                "utilities": {"angel": "Y", "daemon": "r"}
            })");
            FAIL("expected BoundViolation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BoundViolation);
        }
    }
    SECTION("unknown component in the strength table") {
        CHECK_THROWS_AS(parse_scenario(R"({
            "model": "ISLM",
            "valuation": {"a": 200, "b": "3/4", "c": 200, "d": 25, "e": 1, "f": 100,
                          "T": 100, "G": 100, "M": 1000, "P": 2},
            "strength": {"angel": {"zz": 1}},
            "profile": {"A": ["b"], "D": ["P"], "b_A": 1, "b_D": 1},
            "utilities": {"angel": "Y", "daemon": "r"}
        })"),
                        Error);
    }
    SECTION("utility referencing an exogenous name") {
        CHECK_THROWS_AS(parse_scenario(R"({
            "model": "ISLM",
            "valuation": {"a": 200, "b": "3/4", "c": 200, "d": 25, "e": 1, "f": 100,
                          "T": 100, "G": 100, "M": 1000, "P": 2},
            "profile": {"A": ["b"], "D": ["P"], "b_A": 1, "b_D": 1},
            "utilities": {"angel": "G", "daemon": "r"}
        })"),
                        Error);
    }
}

TEST_CASE("parse-render-parse is the identity") {
    for (const char* name :
         {"islm_income_vs_rate.json", "islm_income_vs_low_rate.json", "islm_zero_sum.json",
          "islm_fiscal.json", "islm_balanced_budget.json", "islm_k_weighted_zero_sum.json",
          "ismp_demand_shocks.json", "ismp_zero_sum.json", "call_option.json",
          "islm_cycling.json"}) {
        auto profile = parse_scenario(read_file(scenario_path(name)));
        auto reparsed = parse_scenario(render_scenario(profile));
        INFO(name);
        CHECK(reparsed == profile);
    }
}

TEST_CASE("every bundled scenario loads and analyzes") {
    for (const char* name :
         {"islm_income_vs_rate.json", "islm_income_vs_low_rate.json", "islm_zero_sum.json",
          "islm_fiscal.json", "islm_balanced_budget.json", "islm_k_weighted_zero_sum.json",
          "ismp_demand_shocks.json", "ismp_demand_shocks_low_inflation.json", "ismp_zero_sum.json",
          "call_option.json", "islm_cycling.json"}) {
        INFO(name);
        auto profile = parse_scenario(read_file(scenario_path(name)));
        if (is_exact_model(profile.valuation.model())) {
            auto game = build_game<ExactScalar>(profile);
            CHECK_FALSE(mixed_nash(game).empty());
        } else {
            auto game = build_game<ApproxScalar>(profile);
            CHECK_FALSE(mixed_nash(game).empty());
        }
    }
}
