#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "admac/profile.hpp"

namespace admac {

/// On-disk scenario: model, valuation table, strength table (rows keyed by
/// agent, columns by component), profile sets/spreads and the utilities.
/// Numbers are JSON integers or strings holding exact rationals ("3/4",
/// "0.75"); plain JSON fractions are rejected so nothing rounds silently.
namespace scenario_detail {

using nlohmann::json;

inline ExactScalar scalar_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return ExactScalar(j.get<long long>());
    if (j.is_number())
        raise(ErrorCode::ParseError,
              where + ": write non-integer numbers as strings (\"3/4\", \"0.75\") to keep them exact");
    raise(ErrorCode::ParseError, where + ": expected a number or rational string");
}

inline const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) raise(ErrorCode::ParseError, where + ": missing key '" + key + "'");
    return *it;
}

}  // namespace scenario_detail

inline UncertaintyProfile parse_scenario(const std::string& text) {
    using nlohmann::json;
    using scenario_detail::require;
    using scenario_detail::scalar_from_json;

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::ParseError, std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) raise(ErrorCode::ParseError, "scenario root must be an object");

    ModelId model = parse_model_id(require(root, "model", "scenario").get<std::string>());
    const ModelSchema& schema = schema_for(model);

    std::map<std::string, ExactScalar> values;
    for (const auto& [key, value] : require(root, "valuation", "scenario").items())
        values.emplace(key, scalar_from_json(value, "valuation." + key));
    Valuation valuation(model, std::move(values));
    validate(valuation);

    std::map<std::string, PerturbationStrengthModel::Entry> deltas;
    if (auto it = root.find("strength"); it != root.end()) {
        auto read_row = [&](const char* agent, bool is_angel) {
            auto row = it->find(agent);
            if (row == it->end()) return;
            for (const auto& [key, value] : row->items()) {
                ExactScalar d = scalar_from_json(value, std::string("strength.") + agent + "." + key);
                auto& entry = deltas[key];
                (is_angel ? entry.angel : entry.daemon) = d;
            }
        };
        read_row("angel", true);
        read_row("daemon", false);
    }
    PerturbationStrengthModel strength(model, std::move(deltas));

    const auto& profile_json = require(root, "profile", "scenario");
    auto read_set = [&](const char* key) {
        std::vector<std::string> names;
        for (const auto& n : require(profile_json, key, "profile"))
            names.push_back(n.get<std::string>());
        return ComponentSet(std::move(names));
    };
    ComponentSet angel_set = read_set("A");
    ComponentSet daemon_set = read_set("D");
    auto read_spread = [&](const char* key) {
        const auto& v = require(profile_json, key, "profile");
        if (!v.is_number_unsigned())
            raise(ErrorCode::ParseError, std::string("profile.") + key + " must be a non-negative integer");
        return v.get<std::size_t>();
    };
    std::size_t b_a = read_spread("b_A");
    std::size_t b_d = read_spread("b_D");

    // The option model defaults to the zero-sum call price objective.
    json utilities = model == ModelId::BINOMIAL_CALL ? json{{"zero_sum", "f"}} : json{};
    if (auto it = root.find("utilities"); it != root.end()) utilities = *it;
    if (utilities.is_null()) raise(ErrorCode::ParseError, "scenario: missing 'utilities'");

    if (utilities.contains("zero_sum_normalized")) {
        if (!utilities.value("zero_sum_normalized", false))
            raise(ErrorCode::ParseError, "utilities.zero_sum_normalized must be true when present");
        // Defaults to normalizing the model's own endogenous pair (Y vs r,
        // Y vs pi); explicit angel/daemon expressions override.
        std::string angel_text = utilities.contains("angel")
                                     ? utilities["angel"].get<std::string>()
                                     : schema.endogenous_names.at(0);
        std::string daemon_text = utilities.contains("daemon")
                                      ? utilities["daemon"].get<std::string>()
                                      : schema.endogenous_names.at(1);
        UtilityExpr u_angel = UtilityExpr::parse(angel_text, schema);
        UtilityExpr u_daemon = UtilityExpr::parse(daemon_text, schema);
        auto profile = UncertaintyProfile::bimatrix(std::move(valuation), std::move(strength),
                                                    std::move(angel_set), std::move(daemon_set),
                                                    b_a, b_d, std::move(u_angel), std::move(u_daemon));
        return make_zero_sum_profile(profile);
    }
    if (utilities.contains("zero_sum")) {
        UtilityExpr u = UtilityExpr::parse(utilities["zero_sum"].get<std::string>(), schema);
        return UncertaintyProfile::zero_sum(std::move(valuation), std::move(strength),
                                            std::move(angel_set), std::move(daemon_set), b_a, b_d,
                                            std::move(u));
    }
    UtilityExpr u_angel =
        UtilityExpr::parse(require(utilities, "angel", "utilities").get<std::string>(), schema);
    UtilityExpr u_daemon =
        UtilityExpr::parse(require(utilities, "daemon", "utilities").get<std::string>(), schema);
    return UncertaintyProfile::bimatrix(std::move(valuation), std::move(strength),
                                        std::move(angel_set), std::move(daemon_set), b_a, b_d,
                                        std::move(u_angel), std::move(u_daemon));
}

/// Inverse of parse_scenario, canonical key order; parse(render(p)) == p.
inline std::string render_scenario(const UncertaintyProfile& profile) {
    using nlohmann::json;
    json root;
    root["model"] = model_id_name(profile.valuation.model());
    json valuation = json::object();
    for (const auto& name : profile.valuation.schema().component_names)
        valuation[name] = profile.valuation[name].str();
    root["valuation"] = valuation;
    json angel_row = json::object(), daemon_row = json::object();
    for (const auto& [name, entry] : profile.strength.entries()) {
        if (!entry.angel.is_zero()) angel_row[name] = entry.angel.str();
        if (!entry.daemon.is_zero()) daemon_row[name] = entry.daemon.str();
    }
    root["strength"] = {{"angel", angel_row}, {"daemon", daemon_row}};
    root["profile"] = {{"A", profile.angel_set.names()},
                       {"D", profile.daemon_set.names()},
                       {"b_A", profile.angel_spread},
                       {"b_D", profile.daemon_spread}};
    switch (profile.utility_kind) {
        case UtilityKind::Bimatrix:
            root["utilities"] = {{"angel", profile.angel_utility.str()},
                                 {"daemon", profile.daemon_utility.str()}};
            break;
        case UtilityKind::ZeroSum:
            root["utilities"] = {{"zero_sum", profile.angel_utility.str()}};
            break;
        case UtilityKind::ZeroSumNormalized:
            root["utilities"] = {{"zero_sum_normalized", true},
                                 {"angel", profile.angel_utility.str()},
                                 {"daemon", profile.daemon_utility.str()}};
            break;
    }
    return root.dump(2);
}

}  // namespace admac
