#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "admac/analysis.hpp"
#include "admac/dynamics.hpp"

namespace admac {

/// "p/q (= decimal)" for exact values with a non-trivial denominator,
/// plain text otherwise.
inline std::string render_scalar(const ExactScalar& v) {
    if (v.denominator() == 1) return v.str();
    return v.str() + " (= " + decimal6(v) + ")";
}

inline std::string render_scalar(const ApproxScalar& v) { return decimal6(v); }

template <ScalarLike S>
nlohmann::json scalar_json(const S& v) {
    nlohmann::json j;
    if constexpr (std::same_as<S, ExactScalar>) j["exact"] = v.str();
    j["decimal"] = v.to_double();
    return j;
}

/// Plain-text bimatrix: rows are angel actions, columns daemon actions,
/// each cell "u_A, u_D".
template <ScalarLike S>
std::string render_bimatrix(const Game<S>& game) {
    std::vector<std::vector<std::string>> cells(game.rows() + 1,
                                                std::vector<std::string>(game.cols() + 1));
    cells[0][0] = "angel \\ daemon";
    for (std::size_t j = 0; j < game.cols(); ++j) cells[0][j + 1] = game.daemon_actions()[j].str();
    for (std::size_t i = 0; i < game.rows(); ++i) {
        cells[i + 1][0] = game.angel_actions()[i].str();
        for (std::size_t j = 0; j < game.cols(); ++j) {
            const auto& cell = game.cell(i, j);
            if (game.zero_sum())
                cells[i + 1][j + 1] = render_scalar(cell.angel);
            else
                cells[i + 1][j + 1] = render_scalar(cell.angel) + ", " + render_scalar(cell.daemon);
        }
    }
    std::vector<std::size_t> widths(game.cols() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << std::left << std::setw(static_cast<int>(widths[j]) + 3) << row[j];
        out << "\n";
    }
    if (game.zero_sum()) out << "(zero-sum: cells list the angel's utility)\n";
    return out.str();
}

template <ScalarLike S>
nlohmann::json game_json(const Game<S>& game) {
    nlohmann::json j;
    j["zero_sum"] = game.zero_sum();
    j["angel_actions"] = nlohmann::json::array();
    for (const auto& a : game.angel_actions()) j["angel_actions"].push_back(a.names());
    j["daemon_actions"] = nlohmann::json::array();
    for (const auto& d : game.daemon_actions()) j["daemon_actions"].push_back(d.names());
    j["payoffs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < game.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < game.cols(); ++k) {
            const auto& cell = game.cell(i, k);
            row.push_back({{"angel", scalar_json(cell.angel)}, {"daemon", scalar_json(cell.daemon)}});
        }
        j["payoffs"].push_back(row);
    }
    return j;
}

inline nlohmann::json profile_json(const PureProfile& p) {
    return {{"angel", p.angel.names()}, {"daemon", p.daemon.names()}};
}

template <ScalarLike S>
nlohmann::json mixed_equilibrium_json(const MixedEquilibrium<S>& eq) {
    nlohmann::json j;
    j["alpha"] = nlohmann::json::array();
    for (const auto& p : eq.angel.probabilities) j["alpha"].push_back(scalar_json(p));
    j["beta"] = nlohmann::json::array();
    for (const auto& p : eq.daemon.probabilities) j["beta"].push_back(scalar_json(p));
    j["angel_utility"] = scalar_json(eq.angel_utility);
    j["daemon_utility"] = scalar_json(eq.daemon_utility);
    j["degenerate"] = eq.degenerate;
    return j;
}

template <ScalarLike S>
std::string render_mixed_equilibrium(const MixedEquilibrium<S>& eq) {
    auto strategy = [](const MixedStrategy<S>& s) {
        std::string out = "(";
        for (std::size_t i = 0; i < s.probabilities.size(); ++i) {
            if (i) out += ", ";
            out += render_scalar(s.probabilities[i]);
        }
        return out + ")";
    };
    std::string out = "alpha=" + strategy(eq.angel) + "  beta=" + strategy(eq.daemon) +
                      "\n  utilities: " + render_scalar(eq.angel_utility) + ", " +
                      render_scalar(eq.daemon_utility);
    if (eq.degenerate) out += "  [degenerate support]";
    return out;
}

inline nlohmann::json dynamics_json(const DynamicsTrace& trace) {
    nlohmann::json j;
    j["start"] = profile_json(trace.start);
    j["first_mover"] = player_name(trace.first_mover);
    j["steps"] = nlohmann::json::array();
    for (const auto& step : trace.steps)
        j["steps"].push_back({{"mover", player_name(step.mover)},
                              {"profile", profile_json(step.profile)}});
    if (const auto* c = std::get_if<Converged>(&trace.outcome)) {
        j["outcome"] = {{"kind", "converged"}, {"profile", profile_json(c->profile)}};
    } else if (const auto* cy = std::get_if<Cycle>(&trace.outcome)) {
        j["outcome"] = {{"kind", "cycle"}, {"start_index", cy->start_index}, {"period", cy->period}};
    } else if (const auto* t = std::get_if<Truncated>(&trace.outcome)) {
        j["outcome"] = {{"kind", "truncated"}, {"max_steps", t->max_steps}};
    }
    return j;
}

}  // namespace admac
