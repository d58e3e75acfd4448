#pragma once

// Identity checkers shared by the perturbation unit tests and the
// acceptance suite: the linearity factorizations of the perturbed
// equilibrium, each evaluated in exact arithmetic.

#include "admac/admac.hpp"

namespace admac::testing {

/// Unperturbed-system characterization. Per component, the stressed value
/// moves by exactly the 4-case delta, so it is unchanged iff that delta is
/// zero; components outside a∪d and components with zero rows never move.
/// (The stronger converse "unchanged implies both deltas zero" fails when a
/// one-sided zero delta is selected alone, so it is not asserted.)
inline bool stress_identity_holds(const Valuation& valuation,
                                 const PerturbationStrengthModel& strength,
                                 const JointAction& action) {
    Valuation stressed = stress(valuation, strength, action);
    bool all_deltas_zero = true;
    for (const auto& name : valuation.schema().component_names) {
        ExactScalar d = delta(strength, name, action);
        if (!(stressed[name] == valuation[name] + d)) return false;
        bool touched = action.angel.contains(name) || action.daemon.contains(name);
        auto entry = strength.entry(name);
        bool zero_row = entry.angel.is_zero() && entry.daemon.is_zero();
        if ((!touched || zero_row) && !d.is_zero()) return false;
        if (!d.is_zero()) all_deltas_zero = false;
    }
    return (stressed == valuation) == all_deltas_zero;
}

/// IS-LM factorization when {b,d,e,f,P} are unperturbable:
/// perturbed = base + (1/g) [[f, d/P],[e, -(1-b)/P]] (delta_acGT, delta_M)^T.
inline bool islm_linearity_holds(const Valuation& valuation,
                                 const PerturbationStrengthModel& strength,
                                 const JointAction& action) {
    auto base = solve_islm(valuation);
    auto perturbed = perturbed_equilibrium<ExactScalar>(valuation, strength, action);
    ExactScalar one(1);
    const ExactScalar& b = valuation["b"];
    const ExactScalar& d = valuation["d"];
    const ExactScalar& e = valuation["e"];
    const ExactScalar& f = valuation["f"];
    const ExactScalar& p = valuation["P"];
    ExactScalar g = (one - b) * f + d * e;
    ExactScalar d_demand = delta(strength, "a", action) + delta(strength, "c", action) +
                           delta(strength, "G", action) - b * delta(strength, "T", action);
    ExactScalar d_money = delta(strength, "M", action);
    ExactScalar dy = (f * d_demand + (d / p) * d_money) / g;
    ExactScalar dr = (e * d_demand - ((one - b) / p) * d_money) / g;
    return perturbed["Y"] == base["Y"] + dy && perturbed["r"] == base["r"] + dr;
}

/// IS-LM fiscal factorization when only {G,T} are perturbable:
/// perturbed = base + (delta_GT / g) (f, e)^T.
inline bool islm_fiscal_linearity_holds(const Valuation& valuation,
                                        const PerturbationStrengthModel& strength,
                                        const JointAction& action) {
    auto base = solve_islm(valuation);
    auto perturbed = perturbed_equilibrium<ExactScalar>(valuation, strength, action);
    ExactScalar one(1);
    const ExactScalar& b = valuation["b"];
    ExactScalar g = (one - b) * valuation["f"] + valuation["d"] * valuation["e"];
    ExactScalar d_gt = delta(strength, "G", action) - b * delta(strength, "T", action);
    return perturbed["Y"] == base["Y"] + (d_gt / g) * valuation["f"] &&
           perturbed["r"] == base["r"] + (d_gt / g) * valuation["e"];
}

/// IS-MP factorization when the parameters are unperturbable:
/// perturbed = base + M (delta_eps, delta_v)^T + (delta_Ybar, delta_pi_star)^T.
inline bool ismp_linearity_holds(const Valuation& valuation,
                                 const PerturbationStrengthModel& strength,
                                 const JointAction& action) {
    auto base = solve_ismp(valuation);
    auto perturbed = perturbed_equilibrium<ExactScalar>(valuation, strength, action);
    ExactScalar one(1);
    ExactScalar common = one + valuation["alpha"] * (valuation["theta_Y"] +
                                                     valuation["phi"] * valuation["theta_pi"]);
    ExactScalar gamma = one / common;
    ExactScalar delta_hat = valuation["alpha"] * valuation["theta_pi"] * gamma;
    ExactScalar rho_hat = valuation["phi"] * gamma;
    ExactScalar mu_hat = (one + valuation["alpha"] * valuation["theta_Y"]) * gamma;
    ExactScalar d_eps = delta(strength, "eps", action);
    ExactScalar d_v = delta(strength, "v", action);
    ExactScalar dy = gamma * d_eps - delta_hat * d_v + delta(strength, "Ybar", action);
    ExactScalar dpi = rho_hat * d_eps + mu_hat * d_v + delta(strength, "pi_star", action);
    return perturbed["Y"] == base["Y"] + dy && perturbed["pi"] == base["pi"] + dpi;
}

/// IS-MP shift when only {Ybar, pi_star} are perturbable:
/// Y(a,d) = Y + delta_Ybar, pi(a,d) = pi + delta_pi_star.
inline bool ismp_shift_holds(const Valuation& valuation,
                             const PerturbationStrengthModel& strength,
                             const JointAction& action) {
    auto base = solve_ismp(valuation);
    auto perturbed = perturbed_equilibrium<ExactScalar>(valuation, strength, action);
    return perturbed["Y"] == base["Y"] + delta(strength, "Ybar", action) &&
           perturbed["pi"] == base["pi"] + delta(strength, "pi_star", action);
}

}  // namespace admac::testing
