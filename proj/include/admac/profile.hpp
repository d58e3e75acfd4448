#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "admac/perturbation.hpp"
#include "admac/utility_expr.hpp"

namespace admac {

/// How a profile assigns utilities to the two agents.
enum class UtilityKind {
    Bimatrix,            // independent u_angel / u_daemon
    ZeroSum,             // single u; daemon gets -u
    ZeroSumNormalized,   // u = u_angel - (u_angel(0,0)/u_daemon(0,0)) * u_daemon
};

/// Full description of an uncertain situation: base valuation, potential
/// perturbations, the permissible sets, the spreads and the utilities.
/// Compiles to a strategic game.
struct UncertaintyProfile {
    Valuation valuation;
    PerturbationStrengthModel strength;
    ComponentSet angel_set;    // A
    ComponentSet daemon_set;   // D
    std::size_t angel_spread;  // b_A, number of components the angel perturbs
    std::size_t daemon_spread; // b_D
    UtilityKind utility_kind = UtilityKind::Bimatrix;
    UtilityExpr angel_utility;
    UtilityExpr daemon_utility;  // for ZeroSum this mirrors -angel_utility

    UncertaintyProfile(Valuation valuation_, PerturbationStrengthModel strength_,
                       ComponentSet angel_set_, ComponentSet daemon_set_,
                       std::size_t angel_spread_, std::size_t daemon_spread_,
                       UtilityKind kind, UtilityExpr angel_utility_, UtilityExpr daemon_utility_)
        : valuation(std::move(valuation_)),
          strength(std::move(strength_)),
          angel_set(std::move(angel_set_)),
          daemon_set(std::move(daemon_set_)),
          angel_spread(angel_spread_),
          daemon_spread(daemon_spread_),
          utility_kind(kind),
          angel_utility(std::move(angel_utility_)),
          daemon_utility(std::move(daemon_utility_)) {
        if (valuation.model() != strength.model())
            raise(ErrorCode::SchemaMismatch, "valuation and strength model disagree");
        auto check_subset = [&](const ComponentSet& set, const char* which) {
            for (const auto& name : set)
                if (!valuation.schema().has_component(name))
                    raise(ErrorCode::UnknownComponent,
                          std::string(which) + " set member '" + name + "' is not a component");
        };
        check_subset(angel_set, "angel");
        check_subset(daemon_set, "daemon");
        if (angel_spread > angel_set.size())
            raise(ErrorCode::SpreadTooLarge, "b_A exceeds #A");
        if (daemon_spread > daemon_set.size())
            raise(ErrorCode::SpreadTooLarge, "b_D exceeds #D");
    }

    static UncertaintyProfile bimatrix(Valuation valuation, PerturbationStrengthModel strength,
                                       ComponentSet angel_set, ComponentSet daemon_set,
                                       std::size_t b_a, std::size_t b_d,
                                       UtilityExpr u_angel, UtilityExpr u_daemon) {
        UtilityExpr daemon_copy = u_daemon;
        return UncertaintyProfile(std::move(valuation), std::move(strength), std::move(angel_set),
                                  std::move(daemon_set), b_a, b_d, UtilityKind::Bimatrix,
                                  std::move(u_angel), std::move(daemon_copy));
    }

    static UncertaintyProfile zero_sum(Valuation valuation, PerturbationStrengthModel strength,
                                       ComponentSet angel_set, ComponentSet daemon_set,
                                       std::size_t b_a, std::size_t b_d, UtilityExpr u) {
        UtilityExpr negated = u.negated();
        return UncertaintyProfile(std::move(valuation), std::move(strength), std::move(angel_set),
                                  std::move(daemon_set), b_a, b_d, UtilityKind::ZeroSum,
                                  std::move(u), std::move(negated));
    }

    friend bool operator==(const UncertaintyProfile& x, const UncertaintyProfile& y) {
        return x.valuation == y.valuation && x.strength == y.strength &&
               x.angel_set == y.angel_set && x.daemon_set == y.daemon_set &&
               x.angel_spread == y.angel_spread && x.daemon_spread == y.daemon_spread &&
               x.utility_kind == y.utility_kind && x.angel_utility == y.angel_utility &&
               x.daemon_utility == y.daemon_utility;
    }
};

/// Replaces the profile's pair of utilities by the single normalized
/// objective u = u_A - (u_A(0,0)/u_D(0,0)) u_D; the baseline is always the
/// unperturbed valuation, whether or not (0,0) is a permissible profile.
inline UncertaintyProfile make_zero_sum_profile(const UncertaintyProfile& profile) {
    if (profile.utility_kind == UtilityKind::ZeroSumNormalized) return profile;
    UncertaintyProfile out = profile;
    if (is_exact_model(profile.valuation.model())) {
        auto base = solve_model<ExactScalar>(profile.valuation);
        if (profile.daemon_utility.evaluate(base).is_zero())
            raise(ErrorCode::ZeroBaseline, "u_D vanishes at the unperturbed equilibrium");
    } else {
        auto base = solve_model<ApproxScalar>(profile.valuation);
        if (profile.daemon_utility.evaluate(base).is_zero())
            raise(ErrorCode::ZeroBaseline, "u_D vanishes at the unperturbed equilibrium");
    }
    out.utility_kind = UtilityKind::ZeroSumNormalized;
    return out;
}

}  // namespace admac
