#include "pqappell/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace pqa {

Series::Series(ContextPtr ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (!ctx_) throw std::invalid_argument("Series: null context");
    if (coeffs_.empty()) throw std::invalid_argument("Series: needs at least the t^0 coefficient");
}

Series Series::zero(ContextPtr ctx, std::size_t order) {
    return Series(std::move(ctx), std::vector<Poly>(order + 1));
}

Series Series::one(ContextPtr ctx, std::size_t order) {
    std::vector<Poly> c(order + 1);
    c[0] = Poly::constant(Rational(1));
    return Series(std::move(ctx), std::move(c));
}

Series Series::from_scalars(ContextPtr ctx, const std::vector<Rational>& coeffs) {
    std::vector<Poly> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.push_back(Poly::constant(r));
    return Series(std::move(ctx), std::move(c));
}

std::vector<Rational> Series::scalars() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.size() > 1) throw std::invalid_argument("Series: coefficient is not a constant");
        out.push_back(c.coeff(0));
    }
    return out;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& c) { return c.is_zero(); });
}

Series Series::truncate(std::size_t order) const {
    if (order >= this->order()) return *this;
    return Series(ctx_, std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

Series operator+(const Series& a, const Series& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Poly> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(a.ctx_, std::move(out));
}

Series operator-(const Series& a, const Series& b) {
    require_same_context(*a.ctx_, *b.ctx_);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Poly> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = a.coeffs_[i] - b.coeffs_[i];
    return Series(a.ctx_, std::move(out));
}

Series operator*(const Rational& s, const Series& a) {
    std::vector<Poly> out = a.coeffs_;
    for (auto& c : out) c *= s;
    return Series(a.ctx_, std::move(out));
}

bool operator==(const Series& a, const Series& b) {
    return a.ctx_->same_parameters(*b.ctx_) && a.coeffs_ == b.coeffs_;
}

Series cauchy_product(const Series& a, const Series& b) {
    require_same_context(a.context(), b.context());
    const PQContext& ctx = a.context();
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Poly> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Poly acc;
        for (std::size_t k = 0; k <= n; ++k) {
            const Poly& ak = a.coeff(k);
            const Poly& bk = b.coeff(n - k);
            if (ak.is_zero() || bk.is_zero()) continue;
            acc += ctx.binomial(n, static_cast<long>(k)) * (ak * bk);
        }
        out[n] = std::move(acc);
    }
    return Series(a.context_ptr(), std::move(out));
}

Series reciprocal(const Series& a) {
    const Poly& head = a.coeff(0);
    if (head.is_zero() || head.size() > 1) {
        throw std::domain_error("reciprocal: constant term must be a nonzero constant (a_0 = 0 is not invertible)");
    }
    const PQContext& ctx = a.context();
    const Rational inv_head = head.coeff(0).inverse();
    std::vector<Poly> b(a.order() + 1);
    b[0] = Poly::constant(inv_head);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Poly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            const Poly& ak = a.coeff(k);
            if (ak.is_zero() || b[n - k].is_zero()) continue;
            acc += ctx.binomial(n, static_cast<long>(k)) * (ak * b[n - k]);
        }
        b[n] = -(inv_head * acc);
    }
    return Series(a.context_ptr(), std::move(b));
}

namespace {

Series exp_series(ContextPtr ctx, const Rational& base, const Rational& lambda, std::size_t order) {
    std::vector<Poly> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const long nl = static_cast<long>(n);
        c[n] = Poly::constant(base.pow(choose2(nl)) * lambda.pow(nl));
    }
    return Series(std::move(ctx), std::move(c));
}

}  // namespace

Series small_exp(ContextPtr ctx, const Rational& lambda, std::size_t order) {
    const Rational p = ctx->p();
    return exp_series(std::move(ctx), p, lambda, order);
}

Series big_exp(ContextPtr ctx, const Rational& lambda, std::size_t order) {
    const Rational q = ctx->q();
    return exp_series(std::move(ctx), q, lambda, order);
}

Series small_exp_in_x(ContextPtr ctx, const Rational& scale, std::size_t order) {
    std::vector<Poly> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const long nl = static_cast<long>(n);
        c[n] = Poly::monomial(ctx->p_pow(choose2(nl)) * scale.pow(nl), n);
    }
    return Series(std::move(ctx), std::move(c));
}

Series derivative_t(const Series& a) {
    if (a.order() == 0) return Series::zero(a.context_ptr(), 0);
    return Series(a.context_ptr(), std::vector<Poly>(a.coeffs().begin() + 1, a.coeffs().end()));
}

Series dilate_t(const Series& a, const Rational& c) {
    std::vector<Poly> out = a.coeffs();
    Rational power(1);
    for (auto& coeff : out) {
        coeff *= power;
        power *= c;
    }
    return Series(a.context_ptr(), std::move(out));
}

Series mul_t(const Series& a) {
    const PQContext& ctx = a.context();
    std::vector<Poly> out(a.order() + 2);
    for (std::size_t n = 1; n < out.size(); ++n) out[n] = ctx.number(n) * a.coeff(n - 1);
    return Series(a.context_ptr(), std::move(out));
}

Series dilate_x(const Series& a, const Rational& c) {
    std::vector<Poly> out;
    out.reserve(a.coeffs().size());
    for (const auto& coeff : a.coeffs()) out.push_back(dilate(coeff, c));
    return Series(a.context_ptr(), std::move(out));
}

ExpDerivativeResidual nth_derivative_exp_check(ContextPtr ctx, const Rational& lambda, std::size_t n,
                                               std::size_t order) {
    if (n > order) throw std::invalid_argument("nth_derivative_exp_check: n exceeds order");
    const long nl = static_cast<long>(n);
    const std::size_t rest = order - n;

    Series small = small_exp(ctx, lambda, order);
    Series big = big_exp(ctx, lambda, order);
    for (std::size_t i = 0; i < n; ++i) {
        small = derivative_t(small);
        big = derivative_t(big);
    }
    const Rational small_scale = lambda.pow(nl) * ctx->p_pow(choose2(nl));
    const Rational big_scale = lambda.pow(nl) * ctx->q_pow(choose2(nl));
    Series small_ref = small_scale * small_exp(ctx, lambda * ctx->p_pow(nl), rest);
    Series big_ref = big_scale * big_exp(ctx, lambda * ctx->q_pow(nl), rest);
    return {small - small_ref, big - big_ref};
}

}  // namespace pqa
