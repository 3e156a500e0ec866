#pragma once

/**
 * @file pq_core.hpp
 * @brief Twin-basic (p,q) numbers, factorials, double factorials and binomials.
 *
 * [n]_{p,q} is computed as the homogeneous sum  p^{n-1} + p^{n-2}q + ... + q^{n-1},
 * which equals (p^n - q^n)/(p - q) when p != q and stays defined at p = q.
 * This makes the classical point p = q = 1 and the q-calculus point p = 1
 * ordinary contexts rather than limits.
 *
 * A PQContext memoizes [n], [n]! and [2m]!!. The tables only grow and are
 * guarded by a mutex, so one context may be shared between threads.
 */

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "pqappell/rational.hpp"

namespace pqa {

class PQContext {
public:
    /// Throws std::invalid_argument if p or q is zero.
    PQContext(Rational p, Rational q);

    PQContext(const PQContext&) = delete;
    PQContext& operator=(const PQContext&) = delete;

    [[nodiscard]] const Rational& p() const { return p_; }
    [[nodiscard]] const Rational& q() const { return q_; }

    [[nodiscard]] Rational number(std::size_t n) const;
    [[nodiscard]] Rational factorial(std::size_t n) const;
    /// [n]!! for even n: product of [2], [4], ..., [n]. Odd n throws std::invalid_argument.
    [[nodiscard]] Rational double_factorial(std::size_t n) const;
    /// Zero outside 0 <= k <= n. Throws std::domain_error if a factorial in
    /// the denominator vanishes (possible only when p = -q).
    [[nodiscard]] Rational binomial(std::size_t n, long k) const;

    [[nodiscard]] Rational p_pow(long e) const { return p_.pow(e); }
    [[nodiscard]] Rational q_pow(long e) const { return q_.pow(e); }

    /// Two contexts are interchangeable when their parameters agree.
    [[nodiscard]] bool same_parameters(const PQContext& other) const {
        return p_ == other.p_ && q_ == other.q_;
    }

private:
    void grow_numbers(std::size_t n) const;  // requires mutex_ held

    Rational p_;
    Rational q_;

    mutable std::mutex mutex_;
    mutable std::vector<Rational> numbers_;     // [0], [1], ...
    mutable std::vector<Rational> factorials_;  // [0]!, [1]!, ...
    mutable std::vector<Rational> double_factorials_;  // [0]!!, [2]!!, [4]!!, ...
};

using ContextPtr = std::shared_ptr<const PQContext>;

ContextPtr make_context(Rational p, Rational q);

/// Throws std::invalid_argument when the two contexts carry different (p,q).
void require_same_context(const PQContext& a, const PQContext& b);

Rational pq_number(const PQContext& ctx, std::size_t n);
Rational pq_factorial(const PQContext& ctx, std::size_t n);
Rational pq_binomial(const PQContext& ctx, std::size_t n, long k);
Rational pq_double_factorial(const PQContext& ctx, std::size_t n);

/// sum_k binom(n,k) (-1)^k q^{C(k,2)} p^{C(n-k,2)}; equals 1 at n = 0 and 0 otherwise.
Rational alternating_delta_sum(const PQContext& ctx, std::size_t n);

}  // namespace pqa
