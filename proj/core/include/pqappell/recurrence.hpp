#pragma once

/**
 * @file recurrence.hpp
 * @brief The alpha-series t D_t A(t) / A(pt) and exact residual evaluators
 *        for the recurrence and (p,q)-difference equation of Appell sequences.
 *
 * The "printed" residuals evaluate the published identities as they stand
 * and report whatever exact polynomial comes out; they are not assumed to
 * vanish. For p != q they generally do not, because the published derivation
 * differentiates e_{p,q}(pxt) in t as px e_{p,q}(pqxt) instead of
 * px e_{p,q}(p^2xt). Redoing the derivation with the product rule
 *   D_t(A(t)B(t)) = A(pt) D_t B(t) + B(qt) D_t A(t)
 * gives the recurrence evaluated by derived_recurrence_residual:
 *
 *   [n] f_n(x) = [n] p^{n-1} x f_{n-1}(x)
 *              + sum_{k=0}^{n} binom(n,k) alpha_k p^{n-k} f_{n-k}(qx/p).
 */

#include <cstddef>
#include <vector>

#include "pqappell/appell.hpp"
#include "pqappell/polynomial.hpp"
#include "pqappell/pq_core.hpp"
#include "pqappell/rational.hpp"

namespace pqa {

struct AlphaSeries {
    ContextPtr ctx;
    std::vector<Rational> alpha;  ///< alpha_0..alpha_N, alpha_0 is always 0
};

/// Normalized coefficients of t D_t A(t) / A(pt) through t^order
/// (order is clamped to f.order()). Degenerate f throws std::domain_error.
AlphaSeries alpha_series(const AppellSequence& f, std::size_t order);

/// f_n(px/q) - [ (1/[n]) sum_k binom(n,k) alpha_k f_{n-k}(x) + p^n q^{-1} x f_{n-1}(x) ].
Poly printed_recurrence_residual(const AppellSequence& f, std::size_t n);

/// [n] f_n(x) - [n] p^{n-1} x f_{n-1}(x) - sum_k binom(n,k) alpha_k p^{n-k} f_{n-k}(qx/p).
Poly derived_recurrence_residual(const AppellSequence& f, std::size_t n);

/// (sum_k alpha_k/[k]! L_p^{-k} D^k + p^n q^{-1} x L_p^{-1} D) f_n(x) - [n] f_n(px/q),
/// where L_c is the dilation g(x) -> g(c x).
Poly printed_difference_residual(const AppellSequence& f, std::size_t n);

/// D^k f_n(x) - [n]!/[n-k]! f_{n-k}(p^k x), the shift as printed. Requires
/// k <= n. Because D[g(px)] = p (Dg)(px), this is zero only when p = 1 or
/// k <= 1; see iterated_appell_residual for the identity that always holds.
Poly appell_shift_identity(const AppellSequence& f, std::size_t n, std::size_t k);

/// D^k f_n(x) - p^{C(k,2)} [n]!/[n-k]! f_{n-k}(p^k x). Zero for every Appell
/// sequence and 0 <= k <= n.
Poly iterated_appell_residual(const AppellSequence& f, std::size_t n, std::size_t k);

}  // namespace pqa
