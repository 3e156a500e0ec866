#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in t with polynomial coefficients.
 *
 * Storage is factorial-normalized: entry n holds c_n where the series is
 *
 *     sum_{n=0}^{N} c_n t^n / [n]_{p,q}!
 *
 * In this form the product of two series is the (p,q)-binomial convolution
 * c_n = sum_k binom(n,k) a_k b_{n-k}, and D_t is a plain left shift.
 * Scalar series are series whose coefficients are constant polynomials.
 */

#include <cstddef>
#include <vector>

#include "pqappell/polynomial.hpp"
#include "pqappell/pq_core.hpp"
#include "pqappell/rational.hpp"

namespace pqa {

class Series {
public:
    /// coeffs.size() must be order + 1 (explicit zeros are kept).
    Series(ContextPtr ctx, std::vector<Poly> coeffs);

    static Series zero(ContextPtr ctx, std::size_t order);
    static Series one(ContextPtr ctx, std::size_t order);
    static Series from_scalars(ContextPtr ctx, const std::vector<Rational>& coeffs);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Poly& coeff(std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] const std::vector<Poly>& coeffs() const { return coeffs_; }
    [[nodiscard]] const PQContext& context() const { return *ctx_; }
    [[nodiscard]] const ContextPtr& context_ptr() const { return ctx_; }

    /// Constant terms of every coefficient; throws std::invalid_argument if
    /// some coefficient is not a constant polynomial.
    [[nodiscard]] std::vector<Rational> scalars() const;
    [[nodiscard]] bool is_zero() const;

    /// Keeps t^0..t^order.
    [[nodiscard]] Series truncate(std::size_t order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Rational& s, const Series& a);

    /// Same order, same (p,q), equal coefficients.
    friend bool operator==(const Series& a, const Series& b);

private:
    ContextPtr ctx_;
    std::vector<Poly> coeffs_;
};

/// Normalized Cauchy product, truncated to min(order A, order B).
/// Throws std::invalid_argument on a context mismatch.
Series cauchy_product(const Series& a, const Series& b);

/// Multiplicative inverse by forward substitution. The constant term must be
/// a nonzero constant; otherwise std::domain_error.
Series reciprocal(const Series& a);

/// e_{p,q}(lambda t): normalized coefficients p^{C(n,2)} lambda^n.
Series small_exp(ContextPtr ctx, const Rational& lambda, std::size_t order);

/// E_{p,q}(lambda t): normalized coefficients q^{C(n,2)} lambda^n.
Series big_exp(ContextPtr ctx, const Rational& lambda, std::size_t order);

/// e_{p,q}(scale x t) with coefficient n equal to p^{C(n,2)} scale^n x^n.
Series small_exp_in_x(ContextPtr ctx, const Rational& scale, std::size_t order);

/// D_t: coefficient n of the result is a_{n+1}; order drops by one.
/// An order-0 input yields the order-0 zero series.
Series derivative_t(const Series& a);

/// A(t) -> A(c t).
Series dilate_t(const Series& a, const Rational& c);

/// A(t) -> t A(t) in normalized storage: c_n = [n] a_{n-1}, c_0 = 0; order grows by one.
Series mul_t(const Series& a);

/// A(t; x) -> A(t; c x), applied to every polynomial coefficient.
Series dilate_x(const Series& a, const Rational& c);

struct ExpDerivativeResidual {
    Series small;  ///< D^n e(lambda t) - lambda^n p^{C(n,2)} e(lambda p^n t)
    Series big;    ///< D^n E(lambda t) - lambda^n q^{C(n,2)} E(lambda q^n t)

    [[nodiscard]] bool is_zero() const { return small.is_zero() && big.is_zero(); }
};

/// Residuals of the n-th derivative formulas for both exponentials,
/// over t^0..t^{order-n}. Requires n <= order.
ExpDerivativeResidual nth_derivative_exp_check(ContextPtr ctx, const Rational& lambda, std::size_t n,
                                               std::size_t order);

}  // namespace pqa
