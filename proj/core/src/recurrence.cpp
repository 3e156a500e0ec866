#include "pqappell/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "pqappell/series.hpp"

namespace pqa {

namespace {

void require_index(const AppellSequence& f, std::size_t n, const char* who) {
    if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
    if (n > f.order()) throw std::out_of_range(std::string(who) + ": n exceeds stored order");
}

Rational nonzero_number(const PQContext& ctx, std::size_t n, const char* who) {
    Rational v = ctx.number(n);
    if (v.is_zero()) throw std::domain_error(std::string(who) + ": [n]_{p,q} vanishes at this context");
    return v;
}

}  // namespace

AlphaSeries alpha_series(const AppellSequence& f, std::size_t order) {
    if (f.degenerate()) throw std::domain_error("alpha_series: degenerate sequence (a_0 = 0), A(pt) not invertible");
    const AppellSequence g = f.truncate(std::min(order, f.order()));
    const Series a = g.determining_series();
    const Series numerator = mul_t(derivative_t(a));
    const Series ratio = cauchy_product(numerator, reciprocal(dilate_t(a, f.context().p())));
    return {f.context_ptr(), ratio.scalars()};
}

Poly printed_recurrence_residual(const AppellSequence& f, std::size_t n) {
    require_index(f, n, "printed_recurrence_residual");
    const PQContext& ctx = f.context();
    const AlphaSeries alpha = alpha_series(f, n);
    const Rational bracket = nonzero_number(ctx, n, "printed_recurrence_residual");

    Poly sum;
    for (std::size_t k = 0; k <= n; ++k) {
        if (alpha.alpha[k].is_zero()) continue;
        sum += (ctx.binomial(n, static_cast<long>(k)) * alpha.alpha[k]) * component(f, n - k);
    }
    const long nl = static_cast<long>(n);
    Poly rhs = bracket.inverse() * sum + (ctx.p_pow(nl) / ctx.q()) * mul_x(component(f, n - 1));
    return dilate(component(f, n), ctx.p() / ctx.q()) - rhs;
}

Poly derived_recurrence_residual(const AppellSequence& f, std::size_t n) {
    require_index(f, n, "derived_recurrence_residual");
    const PQContext& ctx = f.context();
    const AlphaSeries alpha = alpha_series(f, n);
    const Rational bracket = ctx.number(n);
    const long nl = static_cast<long>(n);
    const Rational shrink = ctx.q() / ctx.p();

    Poly rhs = (bracket * ctx.p_pow(nl - 1)) * mul_x(component(f, n - 1));
    for (std::size_t k = 0; k <= n; ++k) {
        if (alpha.alpha[k].is_zero()) continue;
        const Rational w = ctx.binomial(n, static_cast<long>(k)) * alpha.alpha[k] * ctx.p_pow(nl - static_cast<long>(k));
        rhs += w * dilate(component(f, n - k), shrink);
    }
    return bracket * component(f, n) - rhs;
}

Poly printed_difference_residual(const AppellSequence& f, std::size_t n) {
    require_index(f, n, "printed_difference_residual");
    const PQContext& ctx = f.context();
    const AlphaSeries alpha = alpha_series(f, n);
    const Poly fn = component(f, n);
    const long nl = static_cast<long>(n);

    Poly lhs;
    Poly dk = fn;  // D^k f_n
    for (std::size_t k = 0; k <= n; ++k) {
        if (!alpha.alpha[k].is_zero()) {
            const Rational fact = ctx.factorial(k);
            if (fact.is_zero()) throw std::domain_error("printed_difference_residual: [k]! vanishes at this context");
            lhs += (alpha.alpha[k] / fact) * dilate(dk, ctx.p_pow(-static_cast<long>(k)));
        }
        dk = pq_derivative(ctx, dk);
    }
    const Poly first = pq_derivative(ctx, fn);
    lhs += (ctx.p_pow(nl) / ctx.q()) * mul_x(dilate(first, ctx.p().inverse()));
    return lhs - ctx.number(n) * dilate(fn, ctx.p() / ctx.q());
}

namespace {

Poly shift_residual(const AppellSequence& f, std::size_t n, std::size_t k, bool with_p_factor, const char* who) {
    if (k > n) throw std::invalid_argument(std::string(who) + ": k must not exceed n");
    if (n > f.order()) throw std::out_of_range(std::string(who) + ": n exceeds stored order");
    const PQContext& ctx = f.context();
    const Poly lhs = pq_derivative_n(ctx, component(f, n), k);
    // [n]!/[n-k]! = [n][n-1]...[n-k+1]
    Rational scale(1);
    for (std::size_t i = n - k + 1; i <= n; ++i) scale *= ctx.number(i);
    const long kl = static_cast<long>(k);
    if (with_p_factor) scale *= ctx.p_pow(choose2(kl));
    return lhs - scale * dilate(component(f, n - k), ctx.p_pow(kl));
}

}  // namespace

Poly appell_shift_identity(const AppellSequence& f, std::size_t n, std::size_t k) {
    return shift_residual(f, n, k, false, "appell_shift_identity");
}

Poly iterated_appell_residual(const AppellSequence& f, std::size_t n, std::size_t k) {
    return shift_residual(f, n, k, true, "iterated_appell_residual");
}

}  // namespace pqa
