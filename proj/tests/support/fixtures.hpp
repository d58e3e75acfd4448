#pragma once

// Shared fixtures: the worked-example valuations and strength models, plus
// the reference 2x3 payoff tables those examples tabulate. The tables are
// entered as exact rationals (two-decimal entries become p/100) so the
// mixed-equilibrium arithmetic can be checked against the reference digits.

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "admac/admac.hpp"

namespace admac::testing {

inline Valuation base_islm_valuation() {
    return Valuation(ModelId::ISLM, {{"a", ExactScalar(200)},
                                     {"b", ExactScalar(3, 4)},
                                     {"c", ExactScalar(200)},
                                     {"d", ExactScalar(25)},
                                     {"e", ExactScalar(1)},
                                     {"f", ExactScalar(100)},
                                     {"T", ExactScalar(100)},
                                     {"G", ExactScalar(100)},
                                     {"M", ExactScalar(1000)},
                                     {"P", ExactScalar(2)}});
}

inline PerturbationStrengthModel islm_strength() {
    return PerturbationStrengthModel(
        ModelId::ISLM, {{"b", {ExactScalar(1, 20), ExactScalar(0)}},
                        {"G", {ExactScalar(50), ExactScalar(-25)}},
                        {"T", {ExactScalar(0), ExactScalar(50)}},
                        {"P", {ExactScalar(0), ExactScalar(1)}}});
}

inline UncertaintyProfile islm_income_vs_rate_profile(bool daemon_minimizes_rate = false) {
    Valuation valuation = base_islm_valuation();
    const ModelSchema& schema = valuation.schema();
    return UncertaintyProfile::bimatrix(
        std::move(valuation), islm_strength(), ComponentSet{"b", "G"}, ComponentSet{"P", "G", "T"},
        1, 2, UtilityExpr::parse("Y", schema),
        UtilityExpr::parse(daemon_minimizes_rate ? "-r" : "r", schema));
}

inline Valuation base_ismp_valuation() {
    return Valuation(ModelId::ISMP, {{"alpha", ExactScalar(1)},
                                     {"rho", ExactScalar(2)},
                                     {"phi", ExactScalar(1, 4)},
                                     {"theta_pi", ExactScalar(1, 2)},
                                     {"theta_Y", ExactScalar(1, 2)},
                                     {"pi_star", ExactScalar(2)},
                                     {"Ybar", ExactScalar(100)},
                                     {"eps", ExactScalar(1)},
                                     {"v", ExactScalar(1, 2)}});
}

inline PerturbationStrengthModel ismp_strength() {
    return PerturbationStrengthModel(
        ModelId::ISMP, {{"Ybar", {ExactScalar(25), ExactScalar(0)}},
                        {"eps", {ExactScalar(2), ExactScalar(0)}},
                        {"pi_star", {ExactScalar(0), ExactScalar(3)}},
                        {"v", {ExactScalar(0), ExactScalar(2)}}});
}

inline UncertaintyProfile ismp_demand_profile(bool daemon_minimizes_inflation = false) {
    Valuation valuation = base_ismp_valuation();
    const ModelSchema& schema = valuation.schema();
    return UncertaintyProfile::bimatrix(
        std::move(valuation), ismp_strength(), ComponentSet{"eps", "Ybar"},
        ComponentSet{"v", "pi_star"}, 1, 1, UtilityExpr::parse("Y", schema),
        UtilityExpr::parse(daemon_minimizes_inflation ? "-pi" : "pi", schema));
}

inline Valuation option_valuation() {
    return Valuation(ModelId::BINOMIAL_CALL, {{"S", ExactScalar(20)},
                                              {"X", ExactScalar(21)},
                                              {"Tm", ExactScalar(1, 4)},
                                              {"r", ExactScalar(12, 100)},
                                              {"u", ExactScalar(11, 10)},
                                              {"d", ExactScalar(6, 10)}});
}

inline PerturbationStrengthModel option_strength() {
    return PerturbationStrengthModel(
        ModelId::BINOMIAL_CALL, {{"r", {ExactScalar(-5, 100), ExactScalar(10, 100)}},
                                 {"u", {ExactScalar(4, 10), ExactScalar(0)}},
                                 {"d", {ExactScalar(0), ExactScalar(3, 10)}}});
}

inline UncertaintyProfile option_profile() {
    Valuation valuation = option_valuation();
    const ModelSchema& schema = valuation.schema();
    return UncertaintyProfile::zero_sum(std::move(valuation), option_strength(),
                                        ComponentSet{"u", "r"}, ComponentSet{"d", "r"}, 1, 1,
                                        UtilityExpr::parse("f", schema));
}

/// Builds a game from (angel action, daemon action, u_angel, u_daemon)
/// entries, ordering the actions canonically.
inline Game<ExactScalar> game_from_cells(
    std::vector<Action> angel_actions, std::vector<Action> daemon_actions,
    const std::vector<std::tuple<Action, Action, ExactScalar, ExactScalar>>& entries) {
    std::sort(angel_actions.begin(), angel_actions.end());
    std::sort(daemon_actions.begin(), daemon_actions.end());
    std::vector<Game<ExactScalar>::Cell> cells(angel_actions.size() * daemon_actions.size(),
                                               {ExactScalar(0), ExactScalar(0)});
    auto index_of = [](const std::vector<Action>& list, const Action& a) {
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == a) return i;
        throw std::logic_error("unknown action in table");
    };
    for (const auto& [a, d, ua, ud] : entries)
        cells[index_of(angel_actions, a) * daemon_actions.size() + index_of(daemon_actions, d)] = {
            ua, ud};
    return Game<ExactScalar>(std::move(angel_actions), std::move(daemon_actions), std::move(cells));
}

/// The reference 2x3 income-vs-interest table for the {b,G} / {P,G,T}
/// profile, entered digit-for-digit as tabulated. Its ({b},{T,G}) cell does
/// not reproduce from the stress definition (see the pipeline tests), so
/// analyses of the reference table live here.
inline Game<ExactScalar> reference_income_rate_game(bool daemon_minimizes_rate) {
    auto u = [&](long long num, long long den) {
        ExactScalar v(num, den);
        return daemon_minimizes_rate ? -v : v;
    };
    Action b{"b"}, g{"G"}, pg{"P", "G"}, pt{"P", "T"}, tg{"T", "G"};
    return game_from_cells(
        {b, g}, {pg, pt, tg},
        {
            {b, pg, ExactScalar(106296, 100), u(729, 100)},   // 1062.96, 7.29
            {b, pt, ExactScalar(102962, 100), u(3481, 500)},  // 1029.62, 6.962
            {b, tg, ExactScalar(123333, 100), u(22, 3)},      // 1233.33, 22/3
            {g, pg, ExactScalar(106666, 100), u(22, 3)},      // 1066.66, 22/3
            {g, pt, ExactScalar(104166, 100), u(177, 25)},    // 1041.66, 7.08
            {g, tg, ExactScalar(1075), u(23, 4)},             // 1075,    5.75
        });
}

}  // namespace admac::testing
