#include "pqappell/families.hpp"

#include <stdexcept>

#include "pqappell/series.hpp"

namespace pqa {

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Bernoulli: return "bernoulli";
        case FamilyKind::Euler: return "euler";
        case FamilyKind::Genocchi: return "genocchi";
        case FamilyKind::Hermite: return "hermite";
    }
    return "unknown";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
    for (FamilyKind kind : kAllFamilies) {
        if (family_name(kind) == name) return kind;
    }
    return std::nullopt;
}

AppellSequence bernoulli_sequence(ContextPtr ctx, std::size_t order) {
    // (e(t) - 1)/t has normalized coefficients p^{C(n+1,2)} [n]!/[n+1]! = p^{C(n+1,2)}/[n+1]
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c[n] = ctx->p_pow(choose2(static_cast<long>(n) + 1)) / ctx->number(n + 1);
    }
    return AppellSequence(ctx, reciprocal(Series::from_scalars(ctx, c)).scalars());
}

AppellSequence euler_sequence(ContextPtr ctx, std::size_t order) {
    Series e_plus_one = small_exp(ctx, Rational(1), order) + Series::one(ctx, order);
    return AppellSequence(ctx, (Rational(2) * reciprocal(e_plus_one)).scalars());
}

AppellSequence genocchi_sequence(ContextPtr ctx, std::size_t order) {
    if (order == 0) return AppellSequence(ctx, {Rational(0)});
    const AppellSequence euler = euler_sequence(ctx, order - 1);
    return AppellSequence(ctx, mul_t(euler.determining_series()).scalars());
}

AppellSequence hermite_sequence(ContextPtr ctx, std::size_t order) {
    std::vector<Rational> a(order + 1);
    for (std::size_t n = 0; n <= order; n += 2) {
        const long m = static_cast<long>(n / 2);
        Rational v = ctx->p_pow(m * (m - 1)) * ctx->factorial(n) / ctx->double_factorial(n);
        a[n] = m % 2 == 1 ? -v : v;
    }
    return AppellSequence(ctx, std::move(a));
}

AppellSequence family_sequence(FamilyKind kind, ContextPtr ctx, std::size_t order) {
    switch (kind) {
        case FamilyKind::Bernoulli: return bernoulli_sequence(std::move(ctx), order);
        case FamilyKind::Euler: return euler_sequence(std::move(ctx), order);
        case FamilyKind::Genocchi: return genocchi_sequence(std::move(ctx), order);
        case FamilyKind::Hermite: return hermite_sequence(std::move(ctx), order);
    }
    throw std::invalid_argument("family_sequence: unknown family");
}

Poly family_representation_residual(FamilyKind kind, ContextPtr ctx, std::size_t n) {
    const AppellSequence f = family_sequence(kind, ctx, n);
    const auto& numbers = f.coefficients();
    std::vector<Rational> explicit_sum(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const long deg = static_cast<long>(n - k);
        explicit_sum[n - k] = ctx->binomial(n, static_cast<long>(k)) * ctx->p_pow(choose2(deg)) * numbers[k];
    }
    return Poly(std::move(explicit_sum)) - generating_series(f, n).coeff(n);
}

Poly hermite_explicit(const PQContext& ctx, std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const long kl = static_cast<long>(k);
        const std::size_t deg = n - 2 * k;
        Rational v = ctx.p_pow(choose2(static_cast<long>(deg)) + kl * (kl - 1)) * ctx.factorial(n) /
                     (ctx.double_factorial(2 * k) * ctx.factorial(deg));
        c[deg] = k % 2 == 1 ? -v : v;
    }
    return Poly(std::move(c));
}

Poly hermite_printed_recurrence_residual(ContextPtr ctx, std::size_t n) {
    if (n == 0) throw std::invalid_argument("hermite_printed_recurrence_residual: n must be at least 1");
    const AppellSequence h = hermite_sequence(ctx, n + 1);
    const long nl = static_cast<long>(n);
    const Rational& p = ctx->p();
    const Rational& q = ctx->q();
    Poly rhs = ctx->p_pow(nl + 1) * mul_x(dilate(component(h, n), q)) -
               (ctx->p_pow(nl - 1) * ctx->number(n)) * dilate(component(h, n - 1), q);
    return dilate(component(h, n + 1), p) - rhs;
}

Poly hermite_difference_residual(ContextPtr ctx, std::size_t n) {
    const AppellSequence h = hermite_sequence(ctx, n);
    const Poly hn = component(h, n);
    const Rational& p = ctx->p();
    const Rational& q = ctx->q();
    const Poly d1 = pq_derivative(*ctx, hn);
    const Poly d2 = pq_derivative(*ctx, d1);
    Poly out = dilate(d2, ctx->p_pow(-2));
    out -= (p * p / q) * mul_x(dilate(d1, p.inverse()));
    out += (ctx->p_pow(2 - static_cast<long>(n)) * ctx->number(n)) * dilate(hn, p / q);
    return out;
}

Poly hermite_derived_recurrence_residual(ContextPtr ctx, std::size_t n) {
    if (n < 2) throw std::invalid_argument("hermite_derived_recurrence_residual: n must be at least 2");
    const AppellSequence h = hermite_sequence(ctx, n);
    const long nl = static_cast<long>(n);
    Poly rhs = ctx->p_pow(nl - 1) * mul_x(component(h, n - 1)) -
               (ctx->number(n - 1) * ctx->p_pow(nl - 2)) * dilate(component(h, n - 2), ctx->q() / ctx->p());
    return component(h, n) - rhs;
}

}  // namespace pqa
