#include "pqappell/appell.hpp"

#include <stdexcept>
#include <string>

namespace pqa {

AppellSequence::AppellSequence(ContextPtr ctx, std::vector<Rational> a) : ctx_(std::move(ctx)), a_(std::move(a)) {
    if (!ctx_) throw std::invalid_argument("AppellSequence: null context");
    if (a_.empty()) throw std::invalid_argument("AppellSequence: needs at least a_0");
    degenerate_ = a_.front().is_zero();
}

Series AppellSequence::determining_series() const { return Series::from_scalars(ctx_, a_); }

AppellSequence AppellSequence::truncate(std::size_t order) const {
    if (order >= this->order()) return *this;
    return AppellSequence(ctx_, std::vector<Rational>(a_.begin(), a_.begin() + static_cast<long>(order) + 1));
}

bool operator==(const AppellSequence& a, const AppellSequence& b) {
    return a.ctx_->same_parameters(*b.ctx_) && a.a_ == b.a_;
}

AppellSequence identity_sequence(ContextPtr ctx, std::size_t order) {
    std::vector<Rational> a(order + 1);
    a[0] = Rational(1);
    return AppellSequence(std::move(ctx), std::move(a));
}

Poly component(const AppellSequence& f, std::size_t n) {
    if (n > f.order()) {
        throw std::out_of_range("component: n = " + std::to_string(n) + " exceeds stored order " +
                                std::to_string(f.order()));
    }
    const PQContext& ctx = f.context();
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const long deg = static_cast<long>(n - k);
        c[n - k] = ctx.binomial(n, static_cast<long>(k)) * ctx.p_pow(choose2(deg)) * f.coefficients()[k];
    }
    return Poly(std::move(c));
}

std::vector<Poly> components(const AppellSequence& f, std::size_t n) {
    std::vector<Poly> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out.push_back(component(f, i));
    return out;
}

Series generating_series(const AppellSequence& f, std::size_t order) {
    const Series a = f.determining_series().truncate(order);
    return cauchy_product(a, small_exp_in_x(f.context_ptr(), Rational(1), order));
}

Poly operator_form(const AppellSequence& f, std::size_t n) {
    if (n > f.order()) throw std::out_of_range("operator_form: n exceeds stored order");
    const PQContext& ctx = f.context();
    Poly acc;
    Poly dk = Poly::monomial(Rational(1), n);  // D^k x^n
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational& ak = f.coefficients()[k];
        if (!ak.is_zero()) {
            const long rest = static_cast<long>(n - k);
            acc += (ak * ctx.p_pow(choose2(rest)) / ctx.factorial(k)) * dk;
        }
        dk = pq_derivative(ctx, dk);
    }
    return acc;
}

bool is_appell(const PQContext& ctx, const std::vector<Poly>& polys, bool degenerate) {
    if (!degenerate) {
        for (std::size_t n = 0; n < polys.size(); ++n) {
            if (polys[n].degree() != n) return false;
        }
    }
    for (std::size_t n = 0; n + 1 < polys.size(); ++n) {
        if (pq_derivative(ctx, polys[n + 1]) != ctx.number(n + 1) * dilate(polys[n], ctx.p())) return false;
    }
    return true;
}

AppellSequence add(const AppellSequence& f, const AppellSequence& g) {
    require_same_context(f.context(), g.context());
    const Series sum = f.determining_series() + g.determining_series();
    std::vector<Rational> a = sum.scalars();
    if (a[0].is_zero()) throw std::domain_error("add: A(0) + B(0) = 0, the sum loses its leading degree");
    return AppellSequence(f.context_ptr(), std::move(a));
}

AppellSequence scalar_mul(const Rational& lambda, const AppellSequence& f) {
    if (lambda.is_zero()) throw std::domain_error("scalar_mul: lambda must be nonzero");
    std::vector<Rational> a = f.coefficients();
    for (auto& c : a) c *= lambda;
    return AppellSequence(f.context_ptr(), std::move(a));
}

AppellSequence convolve(const AppellSequence& f, const AppellSequence& g) {
    return AppellSequence(f.context_ptr(), cauchy_product(f.determining_series(), g.determining_series()).scalars());
}

std::vector<Poly> star_general(const PQContext& ctx, const std::vector<Poly>& f, const std::vector<Poly>& g) {
    const std::size_t count = std::min(f.size(), g.size());
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (f[n].size() > n + 1) {
            throw std::invalid_argument("star_general: deg f_" + std::to_string(n) + " exceeds " + std::to_string(n));
        }
        Poly acc;
        for (std::size_t k = 0; k < f[n].size(); ++k) {
            const Rational& alpha = f[n].coeffs()[k];
            if (alpha.is_zero()) continue;
            acc += (alpha * ctx.p_pow(-choose2(static_cast<long>(k)))) * g[k];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

AppellSequence inverse(const AppellSequence& f) {
    if (f.degenerate()) throw std::domain_error("inverse: degenerate sequence (a_0 = 0) has no inverse");
    return AppellSequence(f.context_ptr(), reciprocal(f.determining_series()).scalars());
}

AppellSequence power(const AppellSequence& f, long k) {
    if (k < 0 && f.degenerate()) {
        throw std::domain_error("power: negative power of a degenerate sequence (a_0 = 0)");
    }
    const AppellSequence base = k < 0 ? inverse(f) : f;
    AppellSequence out = identity_sequence(f.context_ptr(), f.order());
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = convolve(base, out);
    return out;
}

Poly monomial_expansion_residual(const AppellSequence& f, std::size_t n) {
    const AppellSequence inv = inverse(f);
    const PQContext& ctx = f.context();
    Poly sum;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += (ctx.binomial(n, static_cast<long>(k)) * inv.coefficients().at(k)) * component(f, n - k);
    }
    return Poly::monomial(Rational(1), n) - ctx.p_pow(-choose2(static_cast<long>(n))) * sum;
}

}  // namespace pqa
