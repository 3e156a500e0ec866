#include "pqappell/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pqa {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::eval(const Rational& x0) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

namespace {

// Shared by str() and latex(); `frac` renders a non-integer magnitude.
template <typename FracFn>
std::string render(const std::vector<Rational>& coeffs, FracFn frac, bool latex) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = c.abs();
        if (k == 0) {
            os << (mag.is_integer() ? mag.str() : frac(mag, false));
            continue;
        }
        if (!mag.is_one()) os << (mag.is_integer() ? mag.str() : frac(mag, true));
        os << "x";
        if (k > 1) os << (latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k));
    }
    return os.str();
}

}  // namespace

std::string Poly::str() const {
    return render(
        coeffs_, [](const Rational& r, bool wrap) { return wrap ? "(" + r.str() + ")" : r.str(); }, false);
}

std::string Poly::latex() const {
    return render(
        coeffs_,
        [](const Rational& r, bool) { return "\\frac{" + r.numerator_str() + "}{" + r.denominator_str() + "}"; },
        true);
}

Poly dilate(const Poly& f, const Rational& c) {
    std::vector<Rational> out = f.coeffs();
    Rational power(1);
    for (auto& coeff : out) {
        coeff *= power;
        power *= c;
    }
    return Poly(std::move(out));
}

Poly mul_x(const Poly& f) {
    if (f.is_zero()) return {};
    std::vector<Rational> out;
    out.reserve(f.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), f.coeffs().begin(), f.coeffs().end());
    return Poly(std::move(out));
}

Poly pq_derivative(const PQContext& ctx, const Poly& f) {
    if (f.size() <= 1) return {};
    std::vector<Rational> out(f.size() - 1);
    for (std::size_t n = 1; n < f.size(); ++n) out[n - 1] = ctx.number(n) * f.coeffs()[n];
    return Poly(std::move(out));
}

Poly pq_derivative_n(const PQContext& ctx, const Poly& f, std::size_t k) {
    Poly out = f;
    for (std::size_t i = 0; i < k && !out.is_zero(); ++i) out = pq_derivative(ctx, out);
    return out;
}

namespace {

Poly signed_power(const PQContext& ctx, const Rational& a, std::size_t n, int sign) {
    Poly out = Poly::constant(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        const long kl = static_cast<long>(k);
        Rational shift = ctx.q_pow(kl) * a;
        if (sign < 0) shift = -shift;
        out = out * Poly{shift, ctx.p_pow(kl)};
    }
    return out;
}

}  // namespace

Poly falling_power(const PQContext& ctx, const Rational& a, std::size_t n) { return signed_power(ctx, a, n, -1); }

Poly raising_power(const PQContext& ctx, const Rational& a, std::size_t n) { return signed_power(ctx, a, n, +1); }

Poly taylor_reconstruct(const PQContext& ctx, const Poly& f) {
    if (f.is_zero()) return {};
    const std::size_t deg = *f.degree();
    std::vector<Rational> out(deg + 1);
    Poly d = f;
    for (std::size_t k = 0; k <= deg; ++k) {
        out[k] = d.eval(Rational(0)) / ctx.factorial(k);
        d = pq_derivative(ctx, d);
    }
    return Poly(std::move(out));
}

Poly falling_expansion_check(const PQContext& ctx, const Rational& a, std::size_t n) {
    std::vector<Rational> sum(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const long kl = static_cast<long>(k);
        const long rest = static_cast<long>(n - k);
        Rational c = ctx.binomial(n, kl) * ctx.q_pow(choose2(kl)) * ctx.p_pow(choose2(rest)) * a.pow(rest);
        sum[k] = k % 2 == 1 ? -c : c;
    }
    // (a (-) x)^n as a product in x: factors (p^k a - q^k x)
    Poly product = Poly::constant(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        const long kl = static_cast<long>(k);
        product = product * Poly{ctx.p_pow(kl) * a, -ctx.q_pow(kl)};
    }
    return Poly(std::move(sum)) - product;
}

}  // namespace pqa
