#pragma once

#include <string>
#include <utility>
#include <vector>

#include "admac/models.hpp"
#include "admac/rational.hpp"
#include "admac/schema.hpp"

namespace admac {

/// Linear utility over a model's endogenous variables:
/// sum of coeff*var terms plus an optional constant.
class UtilityExpr {
public:
    struct Term {
        std::string name;
        ExactScalar coefficient;
        friend bool operator==(const Term&, const Term&) = default;
    };

    UtilityExpr() = default;
    UtilityExpr(std::vector<Term> terms, ExactScalar constant)
        : terms_(std::move(terms)), constant_(std::move(constant)) {}

    /// Grammar: expr := ['-'] term (('+'|'-') term)*
    ///          term := [coeff '*'] var | coeff
    ///          coeff := rational literal ("550/3", "0.75", "2")
    /// Every var must be endogenous in `schema`; at least one coefficient
    /// must be nonzero.
    static UtilityExpr parse(std::string_view text, const ModelSchema& schema) {
        Parser parser{text, 0};
        UtilityExpr expr;
        bool negative = parser.consume('-');
        for (;;) {
            parser.skip_spaces();
            auto [coeff, name] = parser.term(schema);
            if (negative) coeff = -coeff;
            if (name.empty()) {
                expr.constant_ += coeff;
            } else {
                expr.add_term(name, coeff);
            }
            parser.skip_spaces();
            if (parser.at_end()) break;
            if (parser.consume('+')) negative = false;
            else if (parser.consume('-')) negative = true;
            else parser.fail("expected '+' or '-'");
        }
        if (!expr.has_variable_term())
            raise(ErrorCode::ParseError,
                  "utility '" + std::string(text) + "' references no endogenous variable");
        return expr;
    }

    const std::vector<Term>& terms() const { return terms_; }
    const ExactScalar& constant() const { return constant_; }

    bool has_variable_term() const {
        for (const auto& t : terms_)
            if (!t.coefficient.is_zero()) return true;
        return false;
    }

    template <ScalarLike S>
    S evaluate(const EquilibriumPoint<S>& point) const {
        S total = convert<S>(constant_);
        for (const auto& t : terms_) total += convert<S>(t.coefficient) * point[t.name];
        return total;
    }

    UtilityExpr negated() const {
        UtilityExpr out = *this;
        for (auto& t : out.terms_) t.coefficient = -t.coefficient;
        out.constant_ = -out.constant_;
        return out;
    }

    std::string str() const {
        std::string out;
        const ExactScalar one(1);
        for (const auto& t : terms_) {
            ExactScalar c = t.coefficient;
            bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) c = -c;
            if (c == one) out += t.name;
            else out += c.str() + "*" + t.name;
        }
        if (!constant_.is_zero() || out.empty()) {
            ExactScalar c = constant_;
            bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) c = -c;
            out += c.str();
        }
        return out;
    }

    friend bool operator==(const UtilityExpr&, const UtilityExpr&) = default;

private:
    template <ScalarLike S>
    static S convert(const ExactScalar& value) {
        if constexpr (std::same_as<S, ExactScalar>) return value;
        else return S(value.to_double());
    }

    void add_term(const std::string& name, const ExactScalar& coeff) {
        for (auto& t : terms_) {
            if (t.name == name) {
                t.coefficient += coeff;
                return;
            }
        }
        terms_.push_back({name, coeff});
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;

        [[noreturn]] void fail(const std::string& what) const {
            raise(ErrorCode::ParseError,
                  what + " at column " + std::to_string(pos + 1) + " in '" + std::string(text) + "'");
        }

        void skip_spaces() {
            while (pos < text.size() && text[pos] == ' ') ++pos;
        }
        bool at_end() const { return pos >= text.size(); }

        bool consume(char c) {
            skip_spaces_const();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        void skip_spaces_const() {
            while (pos < text.size() && text[pos] == ' ') ++pos;
        }

        // Returns (coefficient, variable name); name is empty for a bare constant.
        std::pair<ExactScalar, std::string> term(const ModelSchema& schema) {
            skip_spaces();
            if (at_end()) fail("expected a term");
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                ExactScalar coeff = number();
                skip_spaces();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    std::string name = identifier(schema);
                    return {coeff, name};
                }
                return {coeff, ""};
            }
            std::string name = identifier(schema);
            return {ExactScalar(1), name};
        }

        ExactScalar number() {
            std::size_t start = pos;
            bool seen_slash = false;
            while (pos < text.size()) {
                char c = text[pos];
                if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                    ++pos;
                } else if (c == '/' && !seen_slash) {
                    seen_slash = true;
                    ++pos;
                } else {
                    break;
                }
            }
            try {
                return ExactScalar::parse(text.substr(start, pos - start));
            } catch (const Error&) {
                pos = start;
                fail("malformed rational literal");
            }
        }

        std::string identifier(const ModelSchema& schema) {
            skip_spaces();
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (pos == start) fail("expected a variable name");
            std::string name(text.substr(start, pos - start));
            if (!schema.has_endogenous(name))
                raise(ErrorCode::UnknownName,
                      "'" + name + "' is not endogenous in " + model_id_name(schema.model_id));
            return name;
        }
    };

    std::vector<Term> terms_;
    ExactScalar constant_;
};

}  // namespace admac
