// Command-line front end: loads a scenario file and runs one analysis
// command over the compiled angel-daemon game.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "admac/admac.hpp"

namespace {

using namespace admac;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitEmptyAnalysis = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string scenario_path;
    bool structured = false;
    bool require_pne = false;
    bool strict = false;
    std::string angel_components;   // stress
    std::string daemon_components;  // stress
    std::string start;              // dynamics, "angel-set/daemon-set"
    std::string first_mover = "angel";
    std::size_t max_steps = 100;
};

std::string read_scenario_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ComponentSet parse_component_list(const std::string& text) {
    std::vector<std::string> names;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(current);
    return ComponentSet(std::move(names));
}

PureProfile parse_start_profile(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        raise(ErrorCode::ParseError,
              "--start expects 'angel-components/daemon-components', e.g. 'b/P,T'");
    return {parse_component_list(text.substr(0, slash)),
            parse_component_list(text.substr(slash + 1))};
}

void emit(const Options& options, const json& structured, const std::string& text) {
    if (options.structured) {
        json out = structured;
        out["spec_version"] = 1;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

template <ScalarLike S>
json equilibrium_json(const EquilibriumPoint<S>& point) {
    json j = json::object();
    for (const auto& [name, value] : point.values) j[name] = scalar_json(value);
    return j;
}

template <ScalarLike S>
std::string equilibrium_text(const EquilibriumPoint<S>& point) {
    std::string out;
    for (const auto& [name, value] : point.values) out += name + " = " + render_scalar(value) + "\n";
    return out;
}

template <ScalarLike S>
int run_solve(const UncertaintyProfile& profile, const Options& options) {
    auto point = solve_model<S>(profile.valuation);
    emit(options, {{"command", "solve"}, {"equilibrium", equilibrium_json(point)}},
         equilibrium_text(point));
    return kExitOk;
}

template <ScalarLike S>
int run_stress(const UncertaintyProfile& profile, const Options& options) {
    JointAction action{parse_component_list(options.angel_components),
                       parse_component_list(options.daemon_components)};
    Valuation stressed = stress(profile.valuation, profile.strength, action, options.strict);
    auto point = solve_model<S>(stressed);

    std::string text = "joint action " + action.str() + "\n";
    json values = json::object();
    for (const auto& name : stressed.schema().component_names) {
        const ExactScalar& after = stressed[name];
        values[name] = {{"exact", after.str()}, {"decimal", after.to_double()}};
        text += name + " = " + render_scalar(after);
        if (!(after == profile.valuation[name])) text += "   (was " + render_scalar(profile.valuation[name]) + ")";
        text += "\n";
    }
    text += "equilibrium:\n" + equilibrium_text(point);
    emit(options,
         {{"command", "stress"},
          {"joint_action", {{"angel", action.angel.names()}, {"daemon", action.daemon.names()}}},
          {"valuation", values},
          {"equilibrium", equilibrium_json(point)}},
         text);
    return kExitOk;
}

template <ScalarLike S>
int run_game(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    emit(options, {{"command", "game"}, {"game", game_json(game)}}, render_bimatrix(game));
    return kExitOk;
}

json profiles_json(const std::vector<PureProfile>& profiles) {
    json out = json::array();
    for (const auto& p : profiles) out.push_back(profile_json(p));
    return out;
}

std::string profiles_text(const std::vector<PureProfile>& profiles, const std::string& label) {
    if (profiles.empty()) return "no " + label + "\n";
    std::string out;
    for (const auto& p : profiles) out += p.str() + "\n";
    return out;
}

template <ScalarLike S>
int run_pne(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    auto pne = pure_nash(game);
    emit(options, {{"command", "pne"}, {"pne", profiles_json(pne)}},
         profiles_text(pne, "pure Nash equilibrium"));
    return pne.empty() && options.require_pne ? kExitEmptyAnalysis : kExitOk;
}

template <ScalarLike S>
int run_dse(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    auto dse = dominant_equilibria(game);
    emit(options, {{"command", "dse"}, {"dse", profiles_json(dse)}},
         profiles_text(dse, "dominant strategy equilibrium"));
    return kExitOk;
}

template <ScalarLike S>
int run_mixed(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    auto equilibria = mixed_nash(game);
    json j = json::array();
    std::string text;
    for (const auto& eq : equilibria) {
        j.push_back(mixed_equilibrium_json(eq));
        text += render_mixed_equilibrium(eq) + "\n";
    }
    if constexpr (std::same_as<S, ApproxScalar>) {
        if (game.smallest_payoff_gap() < 1e-6)
            text += "warning: payoff gap below 1e-6; ties may be tolerance artifacts\n";
    }
    emit(options, {{"command", "mixed"}, {"equilibria", j}}, text);
    return kExitOk;
}

template <ScalarLike S>
int run_value(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    S value = zero_sum_value(game);
    emit(options, {{"command", "value"}, {"value", scalar_json(value)}},
         render_scalar(value) + "\n");
    return kExitOk;
}

template <ScalarLike S>
int run_dynamics(const UncertaintyProfile& profile, const Options& options) {
    auto game = build_game<S>(profile, options.strict);
    PureProfile start = options.start.empty()
                            ? PureProfile{game.angel_actions().front(), game.daemon_actions().front()}
                            : parse_start_profile(options.start);
    Player first = options.first_mover == "daemon" ? Player::Daemon : Player::Angel;
    auto trace = run_dynamics(game, start, first, options.max_steps);
    std::string text = trace.str() + "\n";
    if (const auto* c = std::get_if<Converged>(&trace.outcome))
        text += "converged at " + c->profile.str() + " after " +
                std::to_string(trace.steps.size()) + " steps\n";
    else if (const auto* cy = std::get_if<Cycle>(&trace.outcome))
        text += "cycle of period " + std::to_string(cy->period) + " (first seen after " +
                std::to_string(cy->start_index) + " steps)\n";
    else
        text += "truncated after " + std::to_string(options.max_steps) + " steps\n";
    emit(options, {{"command", "dynamics"}, {"trace", dynamics_json(trace)}}, text);
    return kExitOk;
}

int run_classify_fiscal(const UncertaintyProfile& profile, const Options& options) {
    auto result = classify_fiscal(profile.strength, profile.valuation);
    auto sign_text = [](int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); };
    std::string text = "mu_angel  = " + render_scalar(result.mu_angel) + "  (sign " +
                       sign_text(result.sign_angel) + ")\n" +
                       "mu_daemon = " + render_scalar(result.mu_daemon) + "  (sign " +
                       sign_text(result.sign_daemon) + ")\n" +
                       "predicted equilibria (also dominant):\n" +
                       profiles_text(result.predicted_pne, "equilibria") +
                       "verified against exhaustive analysis: " +
                       (result.verified ? "yes" : "no") + "\n";
    emit(options,
         {{"command", "classify-fiscal"},
          {"mu_angel", scalar_json(result.mu_angel)},
          {"mu_daemon", scalar_json(result.mu_daemon)},
          {"sign_angel", result.sign_angel},
          {"sign_daemon", result.sign_daemon},
          {"predicted_pne", profiles_json(result.predicted_pne)},
          {"dse_witness", profile_json(result.dse_witness)},
          {"verified", result.verified}},
         text);
    return kExitOk;
}

template <class Fn>
int dispatch(const UncertaintyProfile& profile, Fn&& fn) {
    if (is_exact_model(profile.valuation.model()))
        return fn.template operator()<ExactScalar>();
    return fn.template operator()<ApproxScalar>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"angel-daemon uncertainty analysis for linear macro models"};
    app.require_subcommand(1);

    Options options;
    if (const char* env = std::getenv("ADMAC_FORMAT"))
        options.structured = std::string(env) == "structured";

    std::string format;
    app.add_option("--format", format, "output format: text or structured");
    app.add_flag("--require-pne", options.require_pne,
                 "exit 1 when the analysis finds no pure Nash equilibrium");
    app.add_flag("--strict", options.strict,
                 "re-validate perturbed valuations against the model bounds");

    auto add_scenario_arg = [&](CLI::App* cmd) {
        cmd->add_option("scenario", options.scenario_path, "scenario file path, or - for stdin")
            ->required();
    };

    auto* solve = app.add_subcommand("solve", "base equilibrium of the scenario valuation");
    add_scenario_arg(solve);
    auto* stress_cmd = app.add_subcommand("stress", "perturbed valuation and equilibrium");
    add_scenario_arg(stress_cmd);
    stress_cmd->add_option("--angel", options.angel_components, "components the angel perturbs");
    stress_cmd->add_option("--daemon", options.daemon_components, "components the daemon perturbs");
    auto* game_cmd = app.add_subcommand("game", "payoff bimatrix of the compiled game");
    add_scenario_arg(game_cmd);
    auto* pne = app.add_subcommand("pne", "pure Nash equilibria");
    add_scenario_arg(pne);
    auto* dse = app.add_subcommand("dse", "dominant strategy equilibria");
    add_scenario_arg(dse);
    auto* mixed = app.add_subcommand("mixed", "mixed Nash equilibria by support enumeration");
    add_scenario_arg(mixed);
    auto* value = app.add_subcommand("value", "zero-sum game value");
    add_scenario_arg(value);
    auto* dynamics_cmd = app.add_subcommand("dynamics", "alternating best-response dynamics");
    add_scenario_arg(dynamics_cmd);
    dynamics_cmd->add_option("--start", options.start,
                             "start profile as 'angel-set/daemon-set', e.g. 'b/P,T'");
    dynamics_cmd->add_option("--first-mover", options.first_mover, "angel or daemon")
        ->check(CLI::IsMember({"angel", "daemon"}));
    dynamics_cmd->add_option("--max-steps", options.max_steps, "step budget before truncation");
    auto* classify = app.add_subcommand("classify-fiscal",
                                        "mu-sign classification of a {T,G} fiscal strength model");
    add_scenario_arg(classify);

    CLI11_PARSE(app, argc, argv);
    if (!format.empty()) options.structured = format == "structured";

    try {
        UncertaintyProfile profile = parse_scenario(read_scenario_text(options.scenario_path));
        if (solve->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_solve<S>(profile, options); });
        if (stress_cmd->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_stress<S>(profile, options); });
        if (game_cmd->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_game<S>(profile, options); });
        if (pne->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_pne<S>(profile, options); });
        if (dse->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_dse<S>(profile, options); });
        if (mixed->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_mixed<S>(profile, options); });
        if (value->parsed())
            return dispatch(profile, [&]<ScalarLike S>() { return run_value<S>(profile, options); });
        if (dynamics_cmd->parsed())
            return dispatch(profile,
                            [&]<ScalarLike S>() { return run_dynamics<S>(profile, options); });
        if (classify->parsed()) return run_classify_fiscal(profile, options);
    } catch (const admac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
