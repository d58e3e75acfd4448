#pragma once

#include <map>
#include <string>
#include <utility>

#include "admac/models.hpp"
#include "admac/valuation.hpp"

namespace admac {

/// The component subsets actually perturbed by each agent.
struct JointAction {
    ComponentSet angel;
    ComponentSet daemon;

    friend bool operator==(const JointAction&, const JointAction&) = default;

    std::string str() const { return "(" + angel.str() + "," + daemon.str() + ")"; }
};

/// Per-component additive deltas each agent could apply. Components without
/// an entry default to (0,0), so sparse tables stay sparse.
class PerturbationStrengthModel {
public:
    struct Entry {
        ExactScalar angel;
        ExactScalar daemon;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    PerturbationStrengthModel(ModelId model, std::map<std::string, Entry> deltas)
        : schema_(&schema_for(model)), deltas_(std::move(deltas)) {
        for (const auto& [name, _] : deltas_) {
            if (!schema_->has_component(name))
                raise(ErrorCode::UnknownComponent,
                      "'" + name + "' is not a component of " + model_id_name(model));
        }
    }

    const ModelSchema& schema() const { return *schema_; }
    ModelId model() const { return schema_->model_id; }

    Entry entry(const std::string& component) const {
        if (!schema_->has_component(component))
            raise(ErrorCode::UnknownComponent, "'" + component + "' is not a component");
        auto it = deltas_.find(component);
        return it == deltas_.end() ? Entry{} : it->second;
    }

    ExactScalar angel_delta(const std::string& component) const { return entry(component).angel; }
    ExactScalar daemon_delta(const std::string& component) const { return entry(component).daemon; }

    const std::map<std::string, Entry>& entries() const { return deltas_; }

    /// True when every delta outside `allowed` is zero.
    bool perturbs_only(const ComponentSet& allowed) const {
        for (const auto& [name, entry] : deltas_) {
            if (allowed.contains(name)) continue;
            if (!entry.angel.is_zero() || !entry.daemon.is_zero()) return false;
        }
        return true;
    }

    /// Equality is over effective deltas, so explicit and implicit (0,0)
    /// entries compare equal.
    friend bool operator==(const PerturbationStrengthModel& x,
                           const PerturbationStrengthModel& y) {
        if (x.model() != y.model()) return false;
        for (const auto& name : x.schema_->component_names)
            if (!(x.entry(name) == y.entry(name))) return false;
        return true;
    }

private:
    const ModelSchema* schema_;
    std::map<std::string, Entry> deltas_;
};

/// The additive change a joint action (a,d) applies to one component:
/// nothing outside a∪d, the angel's delta on a\d, the daemon's on d\a,
/// and their sum where both act.
inline ExactScalar delta(const PerturbationStrengthModel& strength, const std::string& component,
                         const JointAction& action) {
    auto entry = strength.entry(component);  // validates the component name
    bool in_angel = action.angel.contains(component);
    bool in_daemon = action.daemon.contains(component);
    if (!in_angel && !in_daemon) return ExactScalar(0);
    if (in_angel && !in_daemon) return entry.angel;
    if (!in_angel && in_daemon) return entry.daemon;
    return entry.angel + entry.daemon;
}

/// The valuation under strength: every component shifted by its delta.
/// Deliberately does not re-check the base bounds; callers wanting that
/// use `strict`.
inline Valuation stress(const Valuation& valuation, const PerturbationStrengthModel& strength,
                        const JointAction& action, bool strict = false) {
    if (valuation.model() != strength.model())
        raise(ErrorCode::SchemaMismatch, "valuation and strength model use different schemas");
    std::map<std::string, ExactScalar> shifted;
    for (const auto& [name, value] : valuation.values())
        shifted.emplace(name, value + delta(strength, name, action));
    Valuation out(valuation.model(), std::move(shifted));
    if (strict) validate(out);
    return out;
}

/// Equilibrium of the stressed valuation.
template <ScalarLike S>
EquilibriumPoint<S> perturbed_equilibrium(const Valuation& valuation,
                                          const PerturbationStrengthModel& strength,
                                          const JointAction& action, bool strict = false) {
    return solve_model<S>(stress(valuation, strength, action, strict));
}

}  // namespace admac
