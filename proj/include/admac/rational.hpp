#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>

#include "admac/errors.hpp"

namespace admac {

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; arithmetic never rounds.
class ExactScalar {
public:
    using rep = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    ExactScalar() = default;
    ExactScalar(long long n) : value_(n) {}
    ExactScalar(long long num, long long den) {
        if (den == 0) raise(ErrorCode::DivideByZero, "rational with zero denominator");
        value_ = rep(integer(num)) / rep(integer(den));
    }
    explicit ExactScalar(rep v) : value_(std::move(v)) {}

    /// Accepts "p/q", an integer "p", or a decimal literal ("0.75" -> 3/4).
    static ExactScalar parse(std::string_view text) {
        std::string s(trim(text));
        if (s.empty()) raise(ErrorCode::ParseError, "empty rational literal");
        if (auto slash = s.find('/'); slash != std::string::npos) {
            ExactScalar num = parse_decimal(s.substr(0, slash));
            ExactScalar den = parse_decimal(s.substr(slash + 1));
            return num / den;
        }
        return parse_decimal(s);
    }

    integer numerator() const { return boost::multiprecision::numerator(value_); }
    integer denominator() const { return boost::multiprecision::denominator(value_); }

    ExactScalar operator-() const { return ExactScalar(rep(-value_)); }

    ExactScalar& operator+=(const ExactScalar& o) { value_ += o.value_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { value_ -= o.value_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { value_ *= o.value_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.value_.is_zero()) raise(ErrorCode::DivideByZero, "exact division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    double to_double() const { return value_.convert_to<double>(); }

    /// Lowest-terms text: "p/q", or just "p" for integers.
    std::string str() const {
        std::string out = numerator().str();
        if (denominator() != 1) out += "/" + denominator().str();
        return out;
    }

    // Scalar interface shared with ApproxScalar.
    static ExactScalar from_int(long long n) { return ExactScalar(n); }
    static bool eq(const ExactScalar& a, const ExactScalar& b) { return a == b; }
    static bool less(const ExactScalar& a, const ExactScalar& b) { return a < b; }

private:
    static std::string_view trim(std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    }

    // Integer or decimal text, exactly: "d+", "-d+", "d.d+" scaled by 10^k.
    static ExactScalar parse_decimal(std::string_view text) {
        std::string s(trim(text));
        if (s.empty()) raise(ErrorCode::ParseError, "empty numeric literal");
        bool negative = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            negative = s[0] == '-';
            i = 1;
        }
        std::string digits;
        int frac_digits = 0;
        bool seen_dot = false;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == '.') {
                if (seen_dot) raise(ErrorCode::ParseError, "malformed numeric literal '" + s + "'");
                seen_dot = true;
            } else if (c >= '0' && c <= '9') {
                digits += c;
                if (seen_dot) ++frac_digits;
            } else {
                raise(ErrorCode::ParseError, "unexpected character in numeric literal '" + s + "'");
            }
        }
        if (digits.empty()) raise(ErrorCode::ParseError, "no digits in numeric literal '" + s + "'");
        // cpp_int's string constructor reads a leading 0 as an octal prefix
        std::size_t first = digits.find_first_not_of('0');
        if (first == std::string::npos) first = digits.size() - 1;
        integer num(digits.substr(first));
        if (negative) num = -num;
        integer den = 1;
        for (int k = 0; k < frac_digits; ++k) den *= 10;
        return ExactScalar(rep(num) / rep(den));
    }

    rep value_{};
};

/// IEEE double wrapper used only where the models need transcendentals
/// (the option's discount factor). Published values must stay finite and
/// comparisons treat gaps below 1e-9 as ties.
class ApproxScalar {
public:
    static constexpr double tolerance = 1e-9;

    ApproxScalar() = default;
    ApproxScalar(long long n) : value_(static_cast<double>(n)) {}
    explicit ApproxScalar(double v) : value_(check(v)) {}

    double value() const { return value_; }

    ApproxScalar operator-() const { return ApproxScalar(-value_); }

    ApproxScalar& operator+=(const ApproxScalar& o) { value_ = check(value_ + o.value_); return *this; }
    ApproxScalar& operator-=(const ApproxScalar& o) { value_ = check(value_ - o.value_); return *this; }
    ApproxScalar& operator*=(const ApproxScalar& o) { value_ = check(value_ * o.value_); return *this; }
    ApproxScalar& operator/=(const ApproxScalar& o) {
        if (o.value_ == 0.0) raise(ErrorCode::DivideByZero, "approximate division by zero");
        value_ = check(value_ / o.value_);
        return *this;
    }

    friend ApproxScalar operator+(ApproxScalar a, const ApproxScalar& b) { return a += b; }
    friend ApproxScalar operator-(ApproxScalar a, const ApproxScalar& b) { return a -= b; }
    friend ApproxScalar operator*(ApproxScalar a, const ApproxScalar& b) { return a *= b; }
    friend ApproxScalar operator/(ApproxScalar a, const ApproxScalar& b) { return a /= b; }

    bool is_zero() const { return std::fabs(value_) <= tolerance; }
    int sign() const { return is_zero() ? 0 : (value_ < 0 ? -1 : 1); }

    double to_double() const { return value_; }

    std::string str() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9g", value_);
        return buf;
    }

    static ApproxScalar from_int(long long n) { return ApproxScalar(n); }
    static bool eq(const ApproxScalar& a, const ApproxScalar& b) {
        return std::fabs(a.value_ - b.value_) <= tolerance;
    }
    static bool less(const ApproxScalar& a, const ApproxScalar& b) {
        return b.value_ - a.value_ > tolerance;
    }

private:
    static double check(double v) {
        if (!std::isfinite(v)) raise(ErrorCode::NonFiniteValue, "operation produced a non-finite value");
        return v;
    }

    double value_ = 0.0;
};

/// Payoff scalar usable by the generic game machinery: exact rationals for
/// the macro models, tolerant doubles for the option model.
template <class S>
concept ScalarLike = requires(const S& a, const S& b) {
    { S::from_int(0) } -> std::same_as<S>;
    { S::eq(a, b) } -> std::same_as<bool>;
    { S::less(a, b) } -> std::same_as<bool>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.sign() } -> std::same_as<int>;
    { a.to_double() } -> std::same_as<double>;
    { a.str() } -> std::same_as<std::string>;
};

static_assert(ScalarLike<ExactScalar>);
static_assert(ScalarLike<ApproxScalar>);

/// Decimal display form: six significant digits, matching the report tables.
inline std::string decimal6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

template <ScalarLike S>
std::string decimal6(const S& v) {
    return decimal6(v.to_double());
}

}  // namespace admac
