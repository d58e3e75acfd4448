#pragma once

#include <map>
#include <string>
#include <vector>

#include "admac/rational.hpp"
#include "admac/schema.hpp"

namespace admac {

/// Assignment of exact values to every exogenous component of a model.
class Valuation {
public:
    Valuation(ModelId model, std::map<std::string, ExactScalar> values)
        : schema_(&schema_for(model)), values_(std::move(values)) {
        for (const auto& [name, _] : values_) {
            if (!schema_->has_component(name))
                raise(ErrorCode::UnknownComponent,
                      "'" + name + "' is not a component of " + model_id_name(model));
        }
        for (const auto& name : schema_->component_names) {
            if (!values_.count(name))
                raise(ErrorCode::SchemaMismatch,
                      "missing value for component '" + name + "'");
        }
    }

    const ModelSchema& schema() const { return *schema_; }
    ModelId model() const { return schema_->model_id; }

    const ExactScalar& operator[](const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end())
            raise(ErrorCode::UnknownComponent, "'" + name + "' is not a component");
        return it->second;
    }

    const std::map<std::string, ExactScalar>& values() const { return values_; }

    Valuation with(const std::string& name, ExactScalar value) const {
        Valuation copy = *this;
        copy.values_.at(name) = std::move(value);
        return copy;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.schema_->model_id == b.schema_->model_id && a.values_ == b.values_;
    }

private:
    const ModelSchema* schema_;
    std::map<std::string, ExactScalar> values_;
};

struct BoundViolationDetail {
    std::string component;
    std::string bound;
};

/// Checks the sign/range constraints of the valuation's model. Returns every
/// violated bound; empty means the valuation is admissible.
inline std::vector<BoundViolationDetail> bound_violations(const Valuation& valuation) {
    std::vector<BoundViolationDetail> out;
    auto positive = [&](const char* name) {
        if (valuation[name].sign() <= 0) out.push_back({name, std::string("0<") + name});
    };
    switch (valuation.model()) {
        case ModelId::ISLM: {
            for (const char* name : {"a", "c", "d", "e", "f", "T", "G", "M", "P"}) positive(name);
            const ExactScalar& b = valuation["b"];
            if (!(b.sign() > 0 && b < ExactScalar(1))) out.push_back({"b", "0<b<1"});
            break;
        }
        case ModelId::ISMP: {
            for (const char* name : {"alpha", "rho", "phi", "theta_pi", "theta_Y"}) positive(name);
            break;
        }
        case ModelId::BINOMIAL_CALL: {
            for (const char* name : {"S", "X", "Tm"}) positive(name);
            const ExactScalar& u = valuation["u"];
            const ExactScalar& d = valuation["d"];
            if (!(d.sign() > 0 && d < u)) out.push_back({"d", "u>d>0"});
            break;
        }
    }
    return out;
}

/// Throws BoundViolation naming every violated bound.
inline void validate(const Valuation& valuation) {
    auto violations = bound_violations(valuation);
    if (violations.empty()) return;
    std::string msg;
    for (const auto& v : violations) {
        if (!msg.empty()) msg += "; ";
        msg += v.component + " violates " + v.bound;
    }
    raise(ErrorCode::BoundViolation, msg);
}

}  // namespace admac
