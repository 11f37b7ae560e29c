#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace riddle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Integers are arbitrary precision, so arithmetic never rounds
/// and never overflows.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt value) : num_(std::move(value)) {}

    /// Throws ZeroDenominator when `den` is zero.
    Rational(BigInt num, BigInt den);

    static Rational normalize(std::int64_t num, std::int64_t den) { return {BigInt(num), BigInt(den)}; }

    /// Parses `p/q` or a bare integer `p` (optional leading '-').
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    BigInt floor() const;
    BigInt ceil() const;
    double to_double() const;

    /// `p/q`, or `p` when the denominator is one.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void reduce();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riddle
