#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in x over exact rationals, together
 *        with the (p,q)-derivative and the dilation operators.
 *
 * Coefficients are stored in ascending degree with trailing zeros trimmed,
 * so the zero polynomial has no coefficients and no degree.
 *
 * A Poly does not carry its (p,q) context; the operators that depend on p
 * and q take a PQContext explicitly.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pqappell/pq_core.hpp"
#include "pqappell/rational.hpp"

namespace pqa {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(Rational c);
    static Poly monomial(Rational c, std::size_t degree);
    static Poly x() { return monomial(Rational(1), 1); }

    /// std::nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const;
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rational coeff(std::size_t i) const;
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Number of stored coefficients (degree + 1, or 0).
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    /// Horner evaluation.
    [[nodiscard]] Rational eval(const Rational& x0) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human-readable form, highest degree first: "8x^3 - 7x", "(1/2)x^2 - 1".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string latex() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// g(x) = f(c x).
Poly dilate(const Poly& f, const Rational& c);

/// f(x) * x.
Poly mul_x(const Poly& f);

/// D_{p,q} f, coefficient-wise: x^n -> [n]_{p,q} x^{n-1}.
Poly pq_derivative(const PQContext& ctx, const Poly& f);

/// k-fold application of pq_derivative.
Poly pq_derivative_n(const PQContext& ctx, const Poly& f, std::size_t k);

/// (x (-) a)^n = prod_{k<n} (p^k x - q^k a).
Poly falling_power(const PQContext& ctx, const Rational& a, std::size_t n);

/// (x (+) a)^n = prod_{k<n} (p^k x + q^k a).
Poly raising_power(const PQContext& ctx, const Rational& a, std::size_t n);

/// Rebuilds f from its (p,q)-Taylor data (D^k f)(0)/[k]! at 0 <= k <= deg f.
/// The result must equal f.
Poly taylor_reconstruct(const PQContext& ctx, const Poly& f);

/// Residual between the binomial expansion
///   sum_k binom(n,k) q^{C(k,2)} p^{C(n-k,2)} (-x)^k a^{n-k}
/// and the product (a (-) x)^n = prod_{k<n} (p^k a - q^k x). Should be zero.
Poly falling_expansion_check(const PQContext& ctx, const Rational& a, std::size_t n);

}  // namespace pqa
