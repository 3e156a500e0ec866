#pragma once

/**
 * @file appell.hpp
 * @brief (p,q)-Appell polynomial sequences and the algebra on them.
 *
 * A sequence is stored through its determining coefficients a_0..a_N, i.e.
 * the normalized coefficients of A(t) = sum a_n t^n/[n]!. Components are
 *
 *     f_n(x) = sum_{k=0}^{n} binom(n,k) p^{C(n-k,2)} a_k x^{n-k},
 *
 * which is the coefficient of t^n/[n]! in A(t) e_{p,q}(xt), and satisfy
 * D_{p,q} f_{n+1}(x) = [n+1] f_n(px).
 *
 * Sequences with a_0 = 0 (the Genocchi family) are admitted as "degenerate":
 * their components drop one degree, and the operations needing an
 * invertible A(t) refuse them with std::domain_error.
 */

#include <cstddef>
#include <vector>

#include "pqappell/polynomial.hpp"
#include "pqappell/pq_core.hpp"
#include "pqappell/rational.hpp"
#include "pqappell/series.hpp"

namespace pqa {

class AppellSequence {
public:
    /// The degenerate flag is derived from a[0] == 0. `a` must be nonempty.
    AppellSequence(ContextPtr ctx, std::vector<Rational> a);

    [[nodiscard]] std::size_t order() const { return a_.size() - 1; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return a_; }
    [[nodiscard]] bool degenerate() const { return degenerate_; }
    [[nodiscard]] const PQContext& context() const { return *ctx_; }
    [[nodiscard]] const ContextPtr& context_ptr() const { return ctx_; }

    /// A(t) as a scalar series of the stored order.
    [[nodiscard]] Series determining_series() const;

    /// Truncated to a_0..a_order.
    [[nodiscard]] AppellSequence truncate(std::size_t order) const;

    friend bool operator==(const AppellSequence& a, const AppellSequence& b);

private:
    ContextPtr ctx_;
    std::vector<Rational> a_;
    bool degenerate_ = false;
};

/// I = {p^{C(n,2)} x^n}, determining function A(t) = 1.
AppellSequence identity_sequence(ContextPtr ctx, std::size_t order);

/// f_n(x); throws std::out_of_range if n > f.order().
Poly component(const AppellSequence& f, std::size_t n);

/// f_0..f_n.
std::vector<Poly> components(const AppellSequence& f, std::size_t n);

/// A(t) e_{p,q}(xt) through t^order.
Series generating_series(const AppellSequence& f, std::size_t order);

/// (sum_k a_k p^{C(n-k,2)}/[k]! D^k) x^n, with D^k x^n computed by repeated
/// (p,q)-differentiation.
Poly operator_form(const AppellSequence& f, std::size_t n);

/// Checks D f_{n+1} = [n+1] f_n(px) on every consecutive pair, and deg f_n = n
/// unless `degenerate` is set.
bool is_appell(const PQContext& ctx, const std::vector<Poly>& polys, bool degenerate = false);

/// Determining coefficients added. Throws std::domain_error when a_0 + b_0 = 0.
AppellSequence add(const AppellSequence& f, const AppellSequence& g);

/// lambda f; lambda = 0 throws std::domain_error.
AppellSequence scalar_mul(const Rational& lambda, const AppellSequence& f);

/// f * g with determining function A(t) B(t).
AppellSequence convolve(const AppellSequence& f, const AppellSequence& g);

/// The * product on arbitrary polynomial sets:
///   (f*g)_n(x) = sum_k alpha(n,k) p^{-C(k,2)} g_k(x),  f_n = sum_k alpha(n,k) x^k.
/// Requires deg f_n <= n (std::invalid_argument otherwise). The result has
/// min(|f|, |g|) entries.
std::vector<Poly> star_general(const PQContext& ctx, const std::vector<Poly>& f, const std::vector<Poly>& g);

/// Determining function 1/A(t). Degenerate input throws std::domain_error.
AppellSequence inverse(const AppellSequence& f);

/// f^0 = I, f^k = f * f^{k-1}, f^{-k} = f^{-1} * f^{-k+1}.
AppellSequence power(const AppellSequence& f, long k);

/// x^n - p^{-C(n,2)} sum_k binom(n,k) b_k f_{n-k}(x), with b the determining
/// coefficients of f^{-1}. Zero for every non-degenerate f.
Poly monomial_expansion_residual(const AppellSequence& f, std::size_t n);

}  // namespace pqa
