#include "pqappell/pq_core.hpp"

#include <stdexcept>

namespace pqa {

PQContext::PQContext(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero() || q_.is_zero()) {
        throw std::invalid_argument("PQContext: p and q must be nonzero");
    }
    numbers_.emplace_back(0);
    factorials_.emplace_back(1);
    double_factorials_.emplace_back(1);
}

void PQContext::grow_numbers(std::size_t n) const {
    // [k+1] = p^k + q*[k]
    while (numbers_.size() <= n) {
        const std::size_t k = numbers_.size() - 1;
        numbers_.push_back(p_.pow(static_cast<long>(k)) + q_ * numbers_.back());
    }
}

Rational PQContext::number(std::size_t n) const {
    std::lock_guard lock(mutex_);
    grow_numbers(n);
    return numbers_[n];
}

Rational PQContext::factorial(std::size_t n) const {
    std::lock_guard lock(mutex_);
    grow_numbers(n);
    while (factorials_.size() <= n) {
        factorials_.push_back(factorials_.back() * numbers_[factorials_.size()]);
    }
    return factorials_[n];
}

Rational PQContext::double_factorial(std::size_t n) const {
    if (n % 2 != 0) throw std::invalid_argument("pq_double_factorial: argument must be even");
    std::lock_guard lock(mutex_);
    grow_numbers(n);
    const std::size_t half = n / 2;
    while (double_factorials_.size() <= half) {
        const std::size_t m = double_factorials_.size();
        double_factorials_.push_back(double_factorials_.back() * numbers_[2 * m]);
    }
    return double_factorials_[half];
}

Rational PQContext::binomial(std::size_t n, long k) const {
    if (k < 0 || static_cast<std::size_t>(k) > n) return Rational(0);
    const auto kk = static_cast<std::size_t>(k);
    Rational den = factorial(kk) * factorial(n - kk);
    if (den.is_zero()) {
        throw std::domain_error("pq_binomial: vanishing (p,q)-factorial (p = -q?)");
    }
    return factorial(n) / den;
}

ContextPtr make_context(Rational p, Rational q) {
    return std::make_shared<const PQContext>(std::move(p), std::move(q));
}

void require_same_context(const PQContext& a, const PQContext& b) {
    if (!a.same_parameters(b)) {
        throw std::invalid_argument("context mismatch: (" + a.p().str() + "," + a.q().str() + ") vs (" +
                                    b.p().str() + "," + b.q().str() + ")");
    }
}

Rational pq_number(const PQContext& ctx, std::size_t n) { return ctx.number(n); }
Rational pq_factorial(const PQContext& ctx, std::size_t n) { return ctx.factorial(n); }
Rational pq_binomial(const PQContext& ctx, std::size_t n, long k) { return ctx.binomial(n, k); }
Rational pq_double_factorial(const PQContext& ctx, std::size_t n) { return ctx.double_factorial(n); }

Rational alternating_delta_sum(const PQContext& ctx, std::size_t n) {
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
        const long kl = static_cast<long>(k);
        const long rest = static_cast<long>(n - k);
        Rational term = ctx.binomial(n, kl) * ctx.q_pow(choose2(kl)) * ctx.p_pow(choose2(rest));
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace pqa
