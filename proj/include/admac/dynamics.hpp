#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "admac/analysis.hpp"

namespace admac {

/// One applied move: `mover` switched to a strictly better action, producing
/// `profile`.
struct DynamicsStep {
    Player mover;
    PureProfile profile;
};

struct Converged {
    PureProfile profile;
};
struct Cycle {
    std::size_t start_index;  // applied-step count when the repeated state was first seen
    std::size_t period;       // applied steps per loop
};
struct Truncated {
    std::size_t max_steps;
};

using DynamicsOutcome = std::variant<Converged, Cycle, Truncated>;

struct DynamicsTrace {
    PureProfile start;
    Player first_mover = Player::Angel;
    std::vector<DynamicsStep> steps;  // applied moves only; passes are not steps
    DynamicsOutcome outcome = Truncated{0};

    /// Arrow notation: "({b},{P,G}) --D--> ({b},{P,T}) --A--> ...".
    std::string str() const {
        std::string out = start.str();
        for (const auto& step : steps) {
            out += step.mover == Player::Angel ? " --A--> " : " --D--> ";
            out += step.profile.str();
        }
        return out;
    }
};

/// If the mover's current action is already a best response, NoMove
/// (nullopt); otherwise switch to the lexicographically smallest best
/// response, which strictly improves the mover's utility.
template <ScalarLike S>
std::optional<PureProfile> best_response_step(const Game<S>& game, const PureProfile& profile,
                                              Player mover) {
    std::size_t own = game.index_of_profile(profile, mover);
    std::size_t opp = game.index_of_profile(profile, other(mover));
    auto best = best_response_indices(game, mover, opp);
    for (std::size_t i : best)
        if (i == own) return std::nullopt;
    std::size_t chosen = *std::min_element(best.begin(), best.end());
    PureProfile next = profile;
    (mover == Player::Angel ? next.angel : next.daemon) = game.actions_of(mover)[chosen];
    return next;
}

/// Alternating best-response dynamics. A mover already at a best response
/// passes; two consecutive passes mean the profile is a pure Nash
/// equilibrium and the run converged. A repeated (profile, mover-to-act)
/// state closes a cycle.
template <ScalarLike S>
DynamicsTrace run_dynamics(const Game<S>& game, const PureProfile& start, Player first_mover,
                           std::size_t max_steps) {
    if (max_steps < 1) raise(ErrorCode::DimensionMismatch, "max_steps must be at least 1");
    game.index_of_profile(start, Player::Angel);  // validate both actions
    game.index_of_profile(start, Player::Daemon);

    DynamicsTrace trace;
    trace.start = start;
    trace.first_mover = first_mover;

    PureProfile current = start;
    Player mover = first_mover;
    int consecutive_passes = 0;
    std::map<std::pair<PureProfile, Player>, std::size_t> seen;
    seen[{current, mover}] = 0;

    while (trace.steps.size() < max_steps) {
        auto next = best_response_step(game, current, mover);
        if (next) {
            current = *next;
            trace.steps.push_back({mover, current});
            consecutive_passes = 0;
        } else {
            if (++consecutive_passes == 2) {
                trace.outcome = Converged{current};
                return trace;
            }
        }
        mover = other(mover);
        auto key = std::make_pair(current, mover);
        auto [it, inserted] = seen.try_emplace(key, trace.steps.size());
        if (!inserted) {
            trace.outcome = Cycle{it->second, trace.steps.size() - it->second};
            return trace;
        }
    }
    trace.outcome = Truncated{max_steps};
    return trace;
}

}  // namespace admac
