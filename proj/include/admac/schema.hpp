#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "admac/errors.hpp"

namespace admac {

enum class ModelId { ISLM, ISMP, BINOMIAL_CALL };

inline const char* model_id_name(ModelId id) {
    switch (id) {
        case ModelId::ISLM: return "ISLM";
        case ModelId::ISMP: return "ISMP";
        case ModelId::BINOMIAL_CALL: return "BINOMIAL_CALL";
    }
    return "?";
}

inline ModelId parse_model_id(std::string_view text) {
    if (text == "ISLM") return ModelId::ISLM;
    if (text == "ISMP") return ModelId::ISMP;
    if (text == "BINOMIAL_CALL") return ModelId::BINOMIAL_CALL;
    raise(ErrorCode::ParseError, "unknown model id '" + std::string(text) + "'");
}

/// Component names are ordered case-insensitively (ties broken byte-wise) so
/// that action lists come out as {b} < {G} and {G} < {P} < {T}.
struct ComponentNameLess {
    bool operator()(std::string_view a, std::string_view b) const {
        auto la = a.begin(), lb = b.begin();
        for (; la != a.end() && lb != b.end(); ++la, ++lb) {
            char ca = static_cast<char>(std::tolower(static_cast<unsigned char>(*la)));
            char cb = static_cast<char>(std::tolower(static_cast<unsigned char>(*lb)));
            if (ca != cb) return ca < cb;
        }
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sorted, duplicate-free set of component names.
class ComponentSet {
public:
    ComponentSet() = default;
    ComponentSet(std::initializer_list<std::string> names) : names_(names) { normalize(); }
    explicit ComponentSet(std::vector<std::string> names) : names_(std::move(names)) { normalize(); }

    bool contains(std::string_view name) const {
        return std::binary_search(names_.begin(), names_.end(), name, ComponentNameLess{});
    }
    bool empty() const { return names_.empty(); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    auto begin() const { return names_.begin(); }
    auto end() const { return names_.end(); }

    bool subset_of(const ComponentSet& other) const {
        return std::all_of(names_.begin(), names_.end(),
                           [&](const std::string& n) { return other.contains(n); });
    }

    friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
    friend bool operator<(const ComponentSet& a, const ComponentSet& b) {
        return std::lexicographical_compare(a.names_.begin(), a.names_.end(),
                                            b.names_.begin(), b.names_.end(), ComponentNameLess{});
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i) out += ",";
            out += names_[i];
        }
        return out + "}";
    }

private:
    void normalize() {
        std::sort(names_.begin(), names_.end(), ComponentNameLess{});
        names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    }

    std::vector<std::string> names_;
};

/// Names and roles of a model's exogenous components and solved variables.
struct ModelSchema {
    ModelId model_id;
    std::vector<std::string> component_names;
    std::vector<std::string> endogenous_names;

    bool has_component(std::string_view name) const {
        return std::find(component_names.begin(), component_names.end(), name) != component_names.end();
    }
    bool has_endogenous(std::string_view name) const {
        return std::find(endogenous_names.begin(), endogenous_names.end(), name) != endogenous_names.end();
    }

    friend bool operator==(const ModelSchema&, const ModelSchema&) = default;
};

inline const ModelSchema& schema_for(ModelId id) {
    static const ModelSchema islm{
        ModelId::ISLM,
        {"a", "b", "c", "d", "e", "f", "T", "G", "M", "P"},
        {"Y", "r"}};
    static const ModelSchema ismp{
        ModelId::ISMP,
        {"alpha", "rho", "phi", "theta_pi", "theta_Y", "pi_star", "Ybar", "eps", "v"},
        {"Y", "pi"}};
    static const ModelSchema binomial{
        ModelId::BINOMIAL_CALL,
        {"S", "X", "Tm", "r", "u", "d"},
        {"Delta", "f"}};
    switch (id) {
        case ModelId::ISLM: return islm;
        case ModelId::ISMP: return ismp;
        case ModelId::BINOMIAL_CALL: return binomial;
    }
    raise(ErrorCode::ParseError, "invalid model id");
}

}  // namespace admac
