#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "admac/game.hpp"
#include "admac/linear.hpp"

namespace admac {

/// Probability distribution over one player's action list.
template <ScalarLike S>
struct MixedStrategy {
    std::vector<S> probabilities;

    friend bool operator==(const MixedStrategy& x, const MixedStrategy& y) {
        if (x.probabilities.size() != y.probabilities.size()) return false;
        for (std::size_t i = 0; i < x.probabilities.size(); ++i)
            if (!S::eq(x.probabilities[i], y.probabilities[i])) return false;
        return true;
    }
};

template <ScalarLike S>
struct MixedEquilibrium {
    MixedStrategy<S> angel;
    MixedStrategy<S> daemon;
    S angel_utility;
    S daemon_utility;
    bool degenerate = false;  // came out of an underdetermined indifference system
};

/// Indices of the actions maximizing `player`'s payoff against a fixed
/// opponent action (ties keep every maximizer).
template <ScalarLike S>
std::vector<std::size_t> best_response_indices(const Game<S>& game, Player player,
                                               std::size_t opponent_index) {
    std::size_t count = game.actions(player);
    if (opponent_index >= game.actions(other(player)))
        raise(ErrorCode::UnknownAction, "opponent action index out of range");
    auto payoff_at = [&](std::size_t i) -> const S& {
        return player == Player::Angel ? game.payoff(player, i, opponent_index)
                                       : game.payoff(player, opponent_index, i);
    };
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < count; ++i) {
        if (best.empty()) {
            best.push_back(i);
            continue;
        }
        const S& incumbent = payoff_at(best.front());
        const S& candidate = payoff_at(i);
        if (S::less(incumbent, candidate)) {
            best.clear();
            best.push_back(i);
        } else if (S::eq(incumbent, candidate)) {
            best.push_back(i);
        }
    }
    return best;
}

template <ScalarLike S>
std::vector<Action> best_responses(const Game<S>& game, Player player,
                                   const Action& opponent_action) {
    std::size_t opp = game.index_of(other(player), opponent_action);
    std::vector<Action> out;
    for (std::size_t i : best_response_indices(game, player, opp))
        out.push_back(game.actions_of(player)[i]);
    return out;
}

/// Exhaustive pure Nash check: (a,d) survives iff a is a best response to d
/// and d to a.
template <ScalarLike S>
std::vector<PureProfile> pure_nash(const Game<S>& game) {
    std::vector<PureProfile> out;
    for (std::size_t i = 0; i < game.rows(); ++i) {
        for (std::size_t j = 0; j < game.cols(); ++j) {
            auto angel_best = best_response_indices(game, Player::Angel, j);
            if (std::find(angel_best.begin(), angel_best.end(), i) == angel_best.end()) continue;
            auto daemon_best = best_response_indices(game, Player::Daemon, i);
            if (std::find(daemon_best.begin(), daemon_best.end(), j) == daemon_best.end()) continue;
            out.push_back({game.angel_actions()[i], game.daemon_actions()[j]});
        }
    }
    return out;
}

/// Profiles where each player's action is a best response against every
/// opponent action, not just the equilibrium one.
template <ScalarLike S>
std::vector<PureProfile> dominant_equilibria(const Game<S>& game) {
    auto dominant_rows = [&](Player player) {
        std::vector<bool> dominant(game.actions(player), true);
        for (std::size_t opp = 0; opp < game.actions(other(player)); ++opp) {
            auto best = best_response_indices(game, player, opp);
            std::vector<bool> in_best(game.actions(player), false);
            for (std::size_t i : best) in_best[i] = true;
            for (std::size_t i = 0; i < dominant.size(); ++i)
                if (!in_best[i]) dominant[i] = false;
        }
        return dominant;
    };
    auto angel_ok = dominant_rows(Player::Angel);
    auto daemon_ok = dominant_rows(Player::Daemon);
    std::vector<PureProfile> out;
    for (std::size_t i = 0; i < game.rows(); ++i)
        for (std::size_t j = 0; j < game.cols(); ++j)
            if (angel_ok[i] && daemon_ok[j])
                out.push_back({game.angel_actions()[i], game.daemon_actions()[j]});
    return out;
}

struct Elimination {
    Player player;
    Action removed;
    Action dominated_by;
};

template <ScalarLike S>
struct ReducedGame {
    Game<S> game;
    std::vector<Elimination> trace;
};

/// Iterated removal of strictly dominated pure actions until fixpoint.
/// Scans the angel first, then the daemon, restarting after each removal,
/// so the trace is deterministic.
template <ScalarLike S>
ReducedGame<S> eliminate_strictly_dominated(const Game<S>& game) {
    std::vector<Action> angel = game.angel_actions();
    std::vector<Action> daemon = game.daemon_actions();
    std::vector<std::size_t> angel_idx(angel.size()), daemon_idx(daemon.size());
    for (std::size_t i = 0; i < angel.size(); ++i) angel_idx[i] = i;
    for (std::size_t j = 0; j < daemon.size(); ++j) daemon_idx[j] = j;

    std::vector<Elimination> trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Player player : {Player::Angel, Player::Daemon}) {
            auto& own = player == Player::Angel ? angel_idx : daemon_idx;
            auto& opp = player == Player::Angel ? daemon_idx : angel_idx;
            if (own.size() <= 1) continue;
            for (std::size_t x = 0; x < own.size() && !changed; ++x) {
                for (std::size_t y = 0; y < own.size() && !changed; ++y) {
                    if (x == y) continue;
                    bool dominated = true;
                    for (std::size_t o : opp) {
                        const S& ux = player == Player::Angel ? game.payoff(player, own[x], o)
                                                              : game.payoff(player, o, own[x]);
                        const S& uy = player == Player::Angel ? game.payoff(player, own[y], o)
                                                              : game.payoff(player, o, own[y]);
                        if (!S::less(ux, uy)) { dominated = false; break; }
                    }
                    if (dominated) {
                        trace.push_back({player, game.actions_of(player)[own[x]],
                                         game.actions_of(player)[own[y]]});
                        own.erase(own.begin() + static_cast<std::ptrdiff_t>(x));
                        changed = true;
                    }
                }
            }
            if (changed) break;
        }
    }

    std::vector<Action> reduced_angel, reduced_daemon;
    for (std::size_t i : angel_idx) reduced_angel.push_back(game.angel_actions()[i]);
    for (std::size_t j : daemon_idx) reduced_daemon.push_back(game.daemon_actions()[j]);
    std::vector<typename Game<S>::Cell> payoffs;
    for (std::size_t i : angel_idx)
        for (std::size_t j : daemon_idx) payoffs.push_back(game.cell(i, j));
    return {Game<S>(std::move(reduced_angel), std::move(reduced_daemon), std::move(payoffs)),
            std::move(trace)};
}

/// Expected utility of a mixed profile: sum over cells of
/// alpha(a) beta(d) u_player(a,d).
template <ScalarLike S>
S mixed_utility(const Game<S>& game, const MixedStrategy<S>& alpha, const MixedStrategy<S>& beta,
                Player player) {
    if (alpha.probabilities.size() != game.rows() || beta.probabilities.size() != game.cols())
        raise(ErrorCode::DimensionMismatch, "strategy length does not match the action list");
    S total = S::from_int(0);
    for (std::size_t i = 0; i < game.rows(); ++i)
        for (std::size_t j = 0; j < game.cols(); ++j)
            total += alpha.probabilities[i] * beta.probabilities[j] * game.payoff(player, i, j);
    return total;
}

namespace detail {

/// Expected payoff of pure action `index` for `player` against the
/// opponent's mixed strategy.
template <ScalarLike S>
S row_utility(const Game<S>& game, Player player, std::size_t index,
              const std::vector<S>& opponent) {
    S total = S::from_int(0);
    if (player == Player::Angel) {
        for (std::size_t j = 0; j < game.cols(); ++j)
            total += opponent[j] * game.payoff(player, index, j);
    } else {
        for (std::size_t i = 0; i < game.rows(); ++i)
            total += opponent[i] * game.payoff(player, i, index);
    }
    return total;
}

/// Solves for the opponent's mixed strategy making `player` indifferent
/// across `player_support`, with the opponent restricted to
/// `opponent_support`. Unknowns are ordered (w, probabilities...) so that an
/// underdetermined system pins trailing probabilities, not w.
template <ScalarLike S>
std::optional<std::pair<std::vector<S>, bool>> indifference_strategy(
    const Game<S>& game, Player player, const std::vector<std::size_t>& player_support,
    const std::vector<std::size_t>& opponent_support) {
    const S zero = S::from_int(0);
    const S one = S::from_int(1);
    std::size_t k = opponent_support.size();
    std::vector<std::vector<S>> rows;
    std::vector<S> rhs;
    for (std::size_t a : player_support) {
        std::vector<S> row(k + 1, zero);
        row[0] = -one;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t o = opponent_support[j];
            row[j + 1] = player == Player::Angel ? game.payoff(player, a, o)
                                                 : game.payoff(player, o, a);
        }
        rows.push_back(std::move(row));
        rhs.push_back(zero);
    }
    std::vector<S> norm(k + 1, one);
    norm[0] = zero;
    rows.push_back(std::move(norm));
    rhs.push_back(one);

    auto solution = solve_linear_system<S>(std::move(rows), std::move(rhs));
    if (!solution) return std::nullopt;
    std::vector<S> full(game.actions(other(player)), zero);
    for (std::size_t j = 0; j < k; ++j) {
        const S& p = solution->values[j + 1];
        if (p.sign() < 0) return std::nullopt;
        full[opponent_support[j]] = p;
    }
    return std::make_pair(std::move(full), solution->underdetermined);
}

/// The two sides of the mixed-equilibrium characterization: on-support
/// actions meet the mixed utility exactly; off-support actions do not beat it.
template <ScalarLike S>
bool equilibrium_property_holds(const Game<S>& game, const std::vector<S>& alpha,
                                const std::vector<S>& beta) {
    for (Player player : {Player::Angel, Player::Daemon}) {
        const std::vector<S>& own = player == Player::Angel ? alpha : beta;
        const std::vector<S>& opp = player == Player::Angel ? beta : alpha;
        MixedStrategy<S> ma{alpha}, mb{beta};
        S mixed = mixed_utility(game, ma, mb, player);
        for (std::size_t i = 0; i < own.size(); ++i) {
            S pure = row_utility(game, player, i, opp);
            if (own[i].sign() > 0) {
                if (!S::eq(pure, mixed)) return false;
            } else if (S::less(mixed, pure)) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<std::vector<std::size_t>> supports(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) support.push_back(i);
        out.push_back(std::move(support));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

}  // namespace detail

/// Support enumeration over every pair of non-empty supports, with exact
/// linear solves. Consistent underdetermined systems contribute one basic
/// solution and are flagged degenerate. Candidates are kept only if the
/// mixed-equilibrium characterization verifies; pure equilibria show up as
/// point masses from the singleton supports.
template <ScalarLike S>
std::vector<MixedEquilibrium<S>> mixed_nash(const Game<S>& game) {
    std::vector<MixedEquilibrium<S>> found;
    auto angel_supports = detail::supports(game.rows());
    auto daemon_supports = detail::supports(game.cols());
    for (const auto& sa : angel_supports) {
        for (const auto& sd : daemon_supports) {
            auto beta = detail::indifference_strategy(game, Player::Angel, sa, sd);
            if (!beta) continue;
            auto alpha = detail::indifference_strategy(game, Player::Daemon, sd, sa);
            if (!alpha) continue;
            if (!detail::equilibrium_property_holds(game, alpha->first, beta->first)) continue;
            MixedEquilibrium<S> eq;
            eq.angel.probabilities = alpha->first;
            eq.daemon.probabilities = beta->first;
            eq.angel_utility = mixed_utility(game, eq.angel, eq.daemon, Player::Angel);
            eq.daemon_utility = mixed_utility(game, eq.angel, eq.daemon, Player::Daemon);
            eq.degenerate = alpha->second || beta->second;
            auto duplicate = std::find_if(found.begin(), found.end(), [&](const auto& other_eq) {
                return other_eq.angel == eq.angel && other_eq.daemon == eq.daemon;
            });
            if (duplicate == found.end()) found.push_back(std::move(eq));
            else duplicate->degenerate = duplicate->degenerate || eq.degenerate;
        }
    }
    return found;
}

/// The common equilibrium payoff of a zero-sum game. Asserts that every
/// equilibrium found agrees before returning it.
template <ScalarLike S>
S zero_sum_value(const Game<S>& game) {
    if (!game.zero_sum())
        raise(ErrorCode::NotZeroSum, "the game's payoffs do not sum to zero in every cell");
    auto equilibria = mixed_nash(game);
    if (equilibria.empty())
        raise(ErrorCode::SingularSystem, "no equilibrium found; the support enumeration failed");
    const S& value = equilibria.front().angel_utility;
    for (const auto& eq : equilibria)
        if (!S::eq(eq.angel_utility, value))
            raise(ErrorCode::NotZeroSum, "equilibria disagree on the game value");
    return value;
}

/// Outcome of the fiscal-policy classification for IS-LM strength models
/// that perturb only taxes and government spending with unit spreads and
/// utilities (Y, r).
struct FiscalClassification {
    ExactScalar mu_angel;   // b*delta_angel(T) + delta_angel(G)
    ExactScalar mu_daemon;  // b*delta_daemon(T) + delta_daemon(G)
    int sign_angel = 0;
    int sign_daemon = 0;
    std::vector<PureProfile> predicted_pne;  // full cartesian best-response set
    PureProfile dse_witness;
    bool verified = false;  // exhaustive game analysis agreed with the prediction
};

/// Everything the report commands need in one pass.
template <ScalarLike S>
struct EquilibriumReport {
    std::vector<PureProfile> pne;
    std::vector<PureProfile> dse;
    std::vector<MixedEquilibrium<S>> mixed;
    std::optional<S> value;  // zero-sum games only
    std::optional<FiscalClassification> mu_classification;
    bool degenerate = false;
    bool near_tie_warning = false;  // double-valued payoffs closer than 1e-6
};

template <ScalarLike S>
EquilibriumReport<S> analyze(const Game<S>& game) {
    EquilibriumReport<S> report;
    report.pne = pure_nash(game);
    report.dse = dominant_equilibria(game);
    report.mixed = mixed_nash(game);
    for (const auto& eq : report.mixed)
        if (eq.degenerate) report.degenerate = true;
    if (game.zero_sum() && !report.mixed.empty()) report.value = zero_sum_value(game);
    if constexpr (std::same_as<S, ApproxScalar>) {
        report.near_tie_warning = game.smallest_payoff_gap() < 1e-6;
    }
    return report;
}

}  // namespace admac
