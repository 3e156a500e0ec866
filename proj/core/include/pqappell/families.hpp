#pragma once

/**
 * @file families.hpp
 * @brief (p,q)-Bernoulli, Euler, Genocchi and Hermite sequences.
 *
 * Determining functions:
 *   Bernoulli  t / (e_{p,q}(t) - 1)
 *   Euler      2 / (e_{p,q}(t) + 1)
 *   Genocchi   2t / (e_{p,q}(t) + 1)      (a_0 = 0, degenerate)
 *   Hermite    sum_m (-1)^m p^{m(m-1)} t^{2m} / [2m]!!
 *
 * The family numbers B_{n,p,q}, E_{n,p,q}, G_{n,p,q} are the determining
 * coefficients a_n themselves.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pqappell/appell.hpp"
#include "pqappell/polynomial.hpp"
#include "pqappell/pq_core.hpp"

namespace pqa {

enum class FamilyKind { Bernoulli, Euler, Genocchi, Hermite };

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::Bernoulli, FamilyKind::Euler, FamilyKind::Genocchi,
                                              FamilyKind::Hermite};

std::string_view family_name(FamilyKind kind);
/// Case-sensitive lower-case names: "bernoulli", "euler", "genocchi", "hermite".
std::optional<FamilyKind> parse_family(std::string_view name);

AppellSequence bernoulli_sequence(ContextPtr ctx, std::size_t order);
AppellSequence euler_sequence(ContextPtr ctx, std::size_t order);
AppellSequence genocchi_sequence(ContextPtr ctx, std::size_t order);
AppellSequence hermite_sequence(ContextPtr ctx, std::size_t order);
AppellSequence family_sequence(FamilyKind kind, ContextPtr ctx, std::size_t order);

/// sum_k binom(n,k) p^{C(n-k,2)} a_k x^{n-k} minus coefficient n of the
/// family's generating series. Zero for every family.
Poly family_representation_residual(FamilyKind kind, ContextPtr ctx, std::size_t n);

/// sum_{k<=n/2} (-1)^k p^{C(n-2k,2)+k(k-1)} [n]! / ([2k]!! [n-2k]!) x^{n-2k}.
Poly hermite_explicit(const PQContext& ctx, std::size_t n);

/// H_{n+1}(px) - p^{n+1} x H_n(qx) + p^{n-1} [n] H_{n-1}(qx), as printed. n >= 1.
Poly hermite_printed_recurrence_residual(ContextPtr ctx, std::size_t n);

/// L_p^{-2} D^2 H_n - p^2 q^{-1} x L_p^{-1} D H_n + p^{2-n} [n] H_n(px/q), as printed.
Poly hermite_difference_residual(ContextPtr ctx, std::size_t n);

/// H_n(x) - p^{n-1} x H_{n-1}(x) + [n-1] p^{n-2} H_{n-2}(qx/p). n >= 2.
Poly hermite_derived_recurrence_residual(ContextPtr ctx, std::size_t n);

}  // namespace pqa
