#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "admac/profile.hpp"

namespace admac {

using Action = ComponentSet;

enum class Player { Angel, Daemon };

inline const char* player_name(Player p) { return p == Player::Angel ? "angel" : "daemon"; }
inline Player other(Player p) { return p == Player::Angel ? Player::Daemon : Player::Angel; }

/// All k-subsets of `set`, ordered lexicographically by sorted component
/// name; k = 0 yields the single empty action.
inline std::vector<Action> enumerate_actions(const ComponentSet& set, std::size_t k) {
    if (k > set.size())
        raise(ErrorCode::SpreadTooLarge,
              "spread " + std::to_string(k) + " exceeds the " + std::to_string(set.size()) +
                  " permissible components");
    const auto& names = set.names();
    std::vector<Action> out;
    std::vector<std::string> current;
    auto recurse = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = start; i + remaining <= names.size(); ++i) {
            current.push_back(names[i]);
            self(self, i + 1, remaining - 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0, k);
    return out;
}

/// A pure strategy profile: one action per player.
struct PureProfile {
    Action angel;
    Action daemon;

    friend bool operator==(const PureProfile&, const PureProfile&) = default;
    friend bool operator<(const PureProfile& x, const PureProfile& y) {
        if (x.angel < y.angel) return true;
        if (y.angel < x.angel) return false;
        return x.daemon < y.daemon;
    }

    std::string str() const { return "(" + angel.str() + "," + daemon.str() + ")"; }
};

/// Two-player strategic game in bimatrix form; rows are angel actions,
/// columns daemon actions.
template <ScalarLike S>
class Game {
public:
    struct Cell {
        S angel;
        S daemon;
    };

    Game(std::vector<Action> actions_angel, std::vector<Action> actions_daemon,
         std::vector<Cell> payoffs)
        : actions_angel_(std::move(actions_angel)),
          actions_daemon_(std::move(actions_daemon)),
          payoffs_(std::move(payoffs)) {
        if (payoffs_.size() != actions_angel_.size() * actions_daemon_.size())
            raise(ErrorCode::DimensionMismatch, "payoff matrix does not match the action lists");
        zero_sum_ = true;
        for (const auto& cell : payoffs_)
            if (!(cell.angel + cell.daemon).is_zero()) { zero_sum_ = false; break; }
    }

    std::size_t rows() const { return actions_angel_.size(); }
    std::size_t cols() const { return actions_daemon_.size(); }
    std::size_t actions(Player p) const { return p == Player::Angel ? rows() : cols(); }

    const std::vector<Action>& angel_actions() const { return actions_angel_; }
    const std::vector<Action>& daemon_actions() const { return actions_daemon_; }
    const std::vector<Action>& actions_of(Player p) const {
        return p == Player::Angel ? actions_angel_ : actions_daemon_;
    }

    const Cell& cell(std::size_t row, std::size_t col) const {
        return payoffs_[row * cols() + col];
    }

    const S& payoff(Player p, std::size_t row, std::size_t col) const {
        const Cell& c = cell(row, col);
        return p == Player::Angel ? c.angel : c.daemon;
    }

    bool zero_sum() const { return zero_sum_; }

    std::size_t index_of(Player p, const Action& action) const {
        const auto& list = actions_of(p);
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == action) return i;
        raise(ErrorCode::UnknownAction,
              std::string(player_name(p)) + " has no action " + action.str());
    }

    std::size_t index_of_profile(const PureProfile& profile, Player p) const {
        return index_of(p, p == Player::Angel ? profile.angel : profile.daemon);
    }

    /// Smallest gap between two distinct payoffs of the same player; used to
    /// warn when double-valued games sit near a tie.
    double smallest_payoff_gap() const {
        double best = std::numeric_limits<double>::infinity();
        for (Player p : {Player::Angel, Player::Daemon}) {
            std::vector<double> vals;
            for (const auto& c : payoffs_) vals.push_back(p == Player::Angel ? c.angel.to_double() : c.daemon.to_double());
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (std::size_t j = i + 1; j < vals.size(); ++j) {
                    double gap = std::fabs(vals[i] - vals[j]);
                    if (gap > 0 && gap < best) best = gap;
                }
        }
        return best;
    }

private:
    std::vector<Action> actions_angel_;
    std::vector<Action> actions_daemon_;
    std::vector<Cell> payoffs_;
    bool zero_sum_ = false;
};

/// Compiles an uncertainty profile: enumerate both action sets, solve the
/// stressed model in every cell and evaluate the utilities there.
template <ScalarLike S>
Game<S> build_game(const UncertaintyProfile& profile, bool strict = false) {
    auto actions_angel = enumerate_actions(profile.angel_set, profile.angel_spread);
    auto actions_daemon = enumerate_actions(profile.daemon_set, profile.daemon_spread);

    S ratio = S::from_int(0);
    if (profile.utility_kind == UtilityKind::ZeroSumNormalized) {
        auto base = solve_model<S>(profile.valuation);
        S base_daemon = profile.daemon_utility.evaluate(base);
        if (base_daemon.is_zero())
            raise(ErrorCode::ZeroBaseline, "u_D vanishes at the unperturbed equilibrium");
        ratio = profile.angel_utility.evaluate(base) / base_daemon;
    }

    std::vector<typename Game<S>::Cell> payoffs;
    payoffs.reserve(actions_angel.size() * actions_daemon.size());
    for (const auto& a : actions_angel) {
        for (const auto& d : actions_daemon) {
            auto point = perturbed_equilibrium<S>(profile.valuation, profile.strength,
                                                  JointAction{a, d}, strict);
            S u_angel = profile.angel_utility.evaluate(point);
            if (profile.utility_kind == UtilityKind::ZeroSumNormalized) {
                S u = u_angel - ratio * profile.daemon_utility.evaluate(point);
                payoffs.push_back({u, -u});
            } else {
                payoffs.push_back({u_angel, profile.daemon_utility.evaluate(point)});
            }
        }
    }
    return Game<S>(std::move(actions_angel), std::move(actions_daemon), std::move(payoffs));
}

}  // namespace admac
