#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Rational is the only scalar type in the library. Values are always kept in
 * lowest terms with a positive denominator, and zero is 0/1. The text form is
 * "num/den" (e.g. "-2/3"); integers print without the "/1".
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pqa {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "a" or "a/b" with an optional leading sign. Decimals and
    /// exponents are rejected; throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string numerator_str() const;
    [[nodiscard]] std::string denominator_str() const;

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Integer power; negative exponents invert (throws std::domain_error on 0).
    [[nodiscard]] Rational pow(long exponent) const;
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& v);
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(m,2) = m(m-1)/2, defined for every integer m.
constexpr long choose2(long m) { return m * (m - 1) / 2; }

}  // namespace pqa
