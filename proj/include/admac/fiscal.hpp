#pragma once

#include <string>
#include <vector>

#include "admac/analysis.hpp"

namespace admac {

/// Classifies the fiscal game by the sign pair of mu = b*delta(T) + delta(G)
/// per agent: each agent's constant best response is {G} for mu > 0, {T} for
/// mu < 0, and both on a tie, making the predicted equilibria a product set.
/// The compiled game <E,S,{G,T},{G,T},1,1,Y,r> is analyzed exhaustively and
/// the result cross-checked against the prediction.
inline FiscalClassification classify_fiscal(const PerturbationStrengthModel& strength,
                                            const Valuation& valuation) {
    if (valuation.model() != ModelId::ISLM || strength.model() != ModelId::ISLM)
        raise(ErrorCode::NotFiscalStrength, "fiscal classification is an IS-LM analysis");
    if (!strength.perturbs_only(ComponentSet{"T", "G"}))
        raise(ErrorCode::NotFiscalStrength, "strength model perturbs components outside {T,G}");
    validate(valuation);

    const ExactScalar& b = valuation["b"];
    FiscalClassification result;
    result.mu_angel = b * strength.angel_delta("T") + strength.angel_delta("G");
    result.mu_daemon = b * strength.daemon_delta("T") + strength.daemon_delta("G");
    result.sign_angel = result.mu_angel.sign();
    result.sign_daemon = result.mu_daemon.sign();

    auto responses = [](int sign) -> std::vector<Action> {
        if (sign > 0) return {Action{"G"}};
        if (sign < 0) return {Action{"T"}};
        return {Action{"G"}, Action{"T"}};
    };
    for (const auto& a : responses(result.sign_angel))
        for (const auto& d : responses(result.sign_daemon))
            result.predicted_pne.push_back({a, d});
    std::sort(result.predicted_pne.begin(), result.predicted_pne.end());
    result.dse_witness = result.predicted_pne.front();

    const ModelSchema& schema = valuation.schema();
    auto profile = UncertaintyProfile::bimatrix(
        valuation, strength, ComponentSet{"G", "T"}, ComponentSet{"G", "T"}, 1, 1,
        UtilityExpr::parse("Y", schema), UtilityExpr::parse("r", schema));
    auto game = build_game<ExactScalar>(profile);
    auto pne = pure_nash(game);
    auto dse = dominant_equilibria(game);
    std::sort(pne.begin(), pne.end());
    std::sort(dse.begin(), dse.end());
    result.verified = pne == result.predicted_pne && dse == result.predicted_pne;
    if (!result.verified)
        raise(ErrorCode::NotFiscalStrength,
              "classification disagrees with the exhaustive game analysis");
    return result;
}

/// True when the profile is exactly the classifier's setting: IS-LM,
/// {T,G}-only strength, A = D = {G,T}, unit spreads, utilities (Y, r).
inline bool is_fiscal_profile(const UncertaintyProfile& profile) {
    if (profile.valuation.model() != ModelId::ISLM) return false;
    if (!profile.strength.perturbs_only(ComponentSet{"T", "G"})) return false;
    ComponentSet fiscal{"G", "T"};
    if (!(profile.angel_set == fiscal && profile.daemon_set == fiscal)) return false;
    if (profile.angel_spread != 1 || profile.daemon_spread != 1) return false;
    if (profile.utility_kind != UtilityKind::Bimatrix) return false;
    const ModelSchema& schema = profile.valuation.schema();
    return profile.angel_utility == UtilityExpr::parse("Y", schema) &&
           profile.daemon_utility == UtilityExpr::parse("r", schema);
}

/// Full analysis of an exact-model profile; attaches the fiscal
/// classification when the profile matches its hypotheses.
inline EquilibriumReport<ExactScalar> analyze_profile(const UncertaintyProfile& profile,
                                                      bool strict = false) {
    auto game = build_game<ExactScalar>(profile, strict);
    auto report = analyze(game);
    if (is_fiscal_profile(profile))
        report.mu_classification = classify_fiscal(profile.strength, profile.valuation);
    return report;
}

}  // namespace admac
