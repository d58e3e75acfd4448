#pragma once

#include <cmath>
#include <map>
#include <string>

#include "admac/rational.hpp"
#include "admac/valuation.hpp"

namespace admac {

/// Solved values of a model's endogenous variables, keyed by name.
template <ScalarLike S>
struct EquilibriumPoint {
    std::map<std::string, S> values;

    const S& operator[](const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end())
            raise(ErrorCode::UnknownName, "'" + name + "' is not an endogenous variable here");
        return it->second;
    }

    friend bool operator==(const EquilibriumPoint&, const EquilibriumPoint&) = default;
};

/// IS-LM closed form. With g = (1-b)f + de:
///   Y = (f/g)(a+c+G-bT) + (d/g)(M/P)
///   r = (e/g)(a+c+G-bT) - ((1-b)/g)(M/P)
inline EquilibriumPoint<ExactScalar> solve_islm(const Valuation& valuation) {
    if (valuation.model() != ModelId::ISLM)
        raise(ErrorCode::SchemaMismatch, "solve_islm needs an ISLM valuation");
    const ExactScalar one(1);
    const ExactScalar& b = valuation["b"];
    const ExactScalar& d = valuation["d"];
    const ExactScalar& e = valuation["e"];
    const ExactScalar& f = valuation["f"];
    const ExactScalar& P = valuation["P"];
    ExactScalar g = (one - b) * f + d * e;
    if (g.is_zero()) raise(ErrorCode::SingularSystem, "(1-b)f + de = 0; no unique equilibrium");
    if (P.is_zero()) raise(ErrorCode::SingularSystem, "P = 0; money supply undefined");
    ExactScalar demand = valuation["a"] + valuation["c"] + valuation["G"] - b * valuation["T"];
    ExactScalar money = valuation["M"] / P;
    EquilibriumPoint<ExactScalar> point;
    point.values["Y"] = (f / g) * demand + (d / g) * money;
    point.values["r"] = (e / g) * demand - ((one - b) / g) * money;
    return point;
}

/// IS-MP closed form. With c = 1 + alpha(theta_Y + phi*theta_pi):
///   Y  = Ybar + eps/c - (alpha*theta_pi/c) v
///   pi = pi_star + (phi/c) eps + ((1+alpha*theta_Y)/c) v
inline EquilibriumPoint<ExactScalar> solve_ismp(const Valuation& valuation) {
    if (valuation.model() != ModelId::ISMP)
        raise(ErrorCode::SchemaMismatch, "solve_ismp needs an ISMP valuation");
    const ExactScalar one(1);
    const ExactScalar& alpha = valuation["alpha"];
    const ExactScalar& phi = valuation["phi"];
    const ExactScalar& theta_pi = valuation["theta_pi"];
    const ExactScalar& theta_y = valuation["theta_Y"];
    ExactScalar common = one + alpha * (theta_y + phi * theta_pi);
    if (common.is_zero())
        raise(ErrorCode::SingularSystem, "1 + alpha(theta_Y + phi*theta_pi) = 0; no unique equilibrium");
    ExactScalar gamma = one / common;
    ExactScalar delta = alpha * theta_pi * gamma;
    ExactScalar rho = phi * gamma;
    ExactScalar mu = (one + alpha * theta_y) * gamma;
    const ExactScalar& eps = valuation["eps"];
    const ExactScalar& v = valuation["v"];
    EquilibriumPoint<ExactScalar> point;
    point.values["Y"] = valuation["Ybar"] + gamma * eps - delta * v;
    point.values["pi"] = valuation["pi_star"] + rho * eps + mu * v;
    return point;
}

/// One-step binomial call: Delta hedges the up/down payoffs, the price
/// discounts the hedged portfolio at the risk-free rate.
inline EquilibriumPoint<ApproxScalar> price_call_binomial(const Valuation& valuation) {
    if (valuation.model() != ModelId::BINOMIAL_CALL)
        raise(ErrorCode::SchemaMismatch, "price_call_binomial needs a BINOMIAL_CALL valuation");
    if (valuation["u"] == valuation["d"])
        raise(ErrorCode::DegenerateTree, "u = d; the tree has a single branch");
    double s = valuation["S"].to_double();
    double x = valuation["X"].to_double();
    double expiry = valuation["Tm"].to_double();
    double rate = valuation["r"].to_double();
    double up = valuation["u"].to_double();
    double down = valuation["d"].to_double();
    double f_up = std::max(s * up - x, 0.0);
    double f_down = std::max(s * down - x, 0.0);
    double hedge = (f_up - f_down) / (s * up - s * down);
    double price = s * hedge * (1.0 - down * std::exp(-rate * expiry));
    EquilibriumPoint<ApproxScalar> point;
    point.values["Delta"] = ApproxScalar(hedge);
    point.values["f"] = ApproxScalar(price);
    return point;
}

/// Payoff scalar type produced when solving a given model.
template <ScalarLike S>
EquilibriumPoint<S> solve_model(const Valuation& valuation);

template <>
inline EquilibriumPoint<ExactScalar> solve_model<ExactScalar>(const Valuation& valuation) {
    switch (valuation.model()) {
        case ModelId::ISLM: return solve_islm(valuation);
        case ModelId::ISMP: return solve_ismp(valuation);
        case ModelId::BINOMIAL_CALL:
            raise(ErrorCode::SchemaMismatch, "the option model is solved in ApproxScalar");
    }
    raise(ErrorCode::SchemaMismatch, "unknown model");
}

template <>
inline EquilibriumPoint<ApproxScalar> solve_model<ApproxScalar>(const Valuation& valuation) {
    if (valuation.model() != ModelId::BINOMIAL_CALL)
        raise(ErrorCode::SchemaMismatch, "macro models are solved in ExactScalar");
    return price_call_binomial(valuation);
}

inline bool is_exact_model(ModelId id) { return id != ModelId::BINOMIAL_CALL; }

}  // namespace admac
