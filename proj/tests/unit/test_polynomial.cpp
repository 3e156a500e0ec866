#include <gtest/gtest.h>

#include "pqappell/polynomial.hpp"
#include "support.hpp"

using namespace pqa;
using support::R;

namespace {
const PQContext& c21() {
    static const PQContext c(2, 1);
    return c;
}
}  // namespace

TEST(Poly, TrimsAndReportsDegree) {
    EXPECT_FALSE(Poly().degree().has_value());
    EXPECT_FALSE(Poly({0, 0}).degree().has_value());
    EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1u);
    EXPECT_EQ(Poly({1, 2, 0, 0}).size(), 2u);
    EXPECT_EQ(Poly({1, 2}).coeff(5), Rational(0));
}

TEST(Poly, Rendering) {
    EXPECT_EQ(Poly({0, -7, 0, 8}).str(), "8x^3 - 7x");
    EXPECT_EQ(Poly({-1, 0, R("1/2")}).str(), "(1/2)x^2 - 1");
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ(Poly({R("-1/3")}).str(), "-1/3");
    EXPECT_EQ(Poly({-1, 0, R("1/2")}).latex(), "\\frac{1}{2}x^{2} - 1");
}

TEST(Poly, Arithmetic) {
    const Poly a{1, 1}, b{-1, 1};
    EXPECT_EQ(a * b, Poly({-1, 0, 1}));
    EXPECT_EQ(a + b, Poly({0, 2}));
    EXPECT_EQ(a - a, Poly());
    EXPECT_EQ(Rational(3) * a, Poly({3, 3}));
    EXPECT_EQ(-a, Poly({-1, -1}));
    EXPECT_EQ(mul_x(a), Poly({0, 1, 1}));
    EXPECT_EQ(mul_x(Poly()), Poly());
}

TEST(Eval, Examples) {
    EXPECT_EQ(Poly({-1, 0, 1}).eval(1), Rational(0));
    EXPECT_EQ(Poly().eval(R("5/7")), Rational(0));
    EXPECT_EQ(Poly({-1, 0, 2}).eval(R("3/2")), R("7/2"));
}

TEST(Dilate, Examples) {
    const Poly f{3, R("-2/5"), 7};
    EXPECT_EQ(dilate(f, 1), f);
    EXPECT_EQ(dilate(Poly::monomial(1, 2), c21().p()), Poly({0, 0, 4}));
    EXPECT_EQ(dilate(Poly({-1, 0, 2}), R("1/2")), Poly({-1, 0, R("1/2")}));
}

TEST(PQDerivative, Examples) {
    const PQContext c(R("5/3"), R("2/7"));
    EXPECT_EQ(pq_derivative(c, Poly({R("9/2")})), Poly());
    EXPECT_EQ(pq_derivative(c, Poly::monomial(1, 2)), Poly::monomial(c.p() + c.q(), 1));
    EXPECT_EQ(pq_derivative(c21(), Poly::monomial(1, 3)), Poly::monomial(7, 2));
    EXPECT_EQ(pq_derivative_n(c21(), Poly::monomial(1, 3), 2), Poly::monomial(21, 1));
    EXPECT_EQ(pq_derivative_n(c21(), Poly::monomial(1, 3), 0), Poly::monomial(1, 3));
}

TEST(FallingPower, Examples) {
    const Rational a = R("-2/3");
    EXPECT_EQ(falling_power(c21(), a, 1), Poly({-a, 1}));
    EXPECT_EQ(falling_power(c21(), 0, 4), Poly::monomial(64, 4));  // p^{C(4,2)} = 2^6
    EXPECT_EQ(falling_power(c21(), 1, 2), Poly({1, -3, 2}));
    EXPECT_EQ(falling_power(c21(), a, 0), Poly({1}));
}

TEST(RaisingPower, Examples) {
    EXPECT_EQ(raising_power(c21(), R("3/4"), 0), Poly({1}));
    EXPECT_EQ(raising_power(c21(), R("3/4"), 1), Poly({R("3/4"), 1}));
    EXPECT_EQ(raising_power(c21(), 1, 2), Poly({1, 3, 2}));
}

TEST(TaylorReconstruct, Examples) {
    EXPECT_EQ(taylor_reconstruct(c21(), Poly()), Poly());
    EXPECT_EQ(taylor_reconstruct(c21(), Poly::monomial(1, 5)), Poly::monomial(1, 5));
    const Poly f = falling_power(c21(), 1, 3);
    EXPECT_EQ(taylor_reconstruct(c21(), f), f);
}

TEST(FallingExpansionCheck, Examples) {
    EXPECT_TRUE(falling_expansion_check(c21(), 1, 0).is_zero());
    EXPECT_TRUE(falling_expansion_check(c21(), R("4/5"), 1).is_zero());
    EXPECT_TRUE(falling_expansion_check(c21(), 1, 3).is_zero());
}

class PolyProperties : public ::testing::TestWithParam<std::pair<const char*, const char*>> {
protected:
    PQContext ctx{R(GetParam().first), R(GetParam().second)};
};

TEST_P(PolyProperties, AppellKernel) {
    for (const Rational& a : {Rational(0), Rational(1), R("-2/3")})
        for (std::size_t n = 1; n <= 12; ++n)
            EXPECT_EQ(pq_derivative(ctx, falling_power(ctx, a, n)),
                      ctx.number(n) * dilate(falling_power(ctx, a, n - 1), ctx.p()));
}

TEST_P(PolyProperties, ProductRules) {
    support::RandomRationals rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly f = rng.poly(trial % 9), g = rng.poly((trial * 5) % 9);
        const Poly lhs = pq_derivative(ctx, f * g);
        EXPECT_EQ(lhs, dilate(f, ctx.p()) * pq_derivative(ctx, g) + dilate(g, ctx.q()) * pq_derivative(ctx, f));
        EXPECT_EQ(lhs, dilate(g, ctx.p()) * pq_derivative(ctx, f) + dilate(f, ctx.q()) * pq_derivative(ctx, g));
    }
}

TEST_P(PolyProperties, DifferenceQuotient) {
    support::RandomRationals rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly f = rng.poly(trial % 13);
        if (ctx.p() != ctx.q()) {
            EXPECT_EQ((ctx.p() - ctx.q()) * mul_x(pq_derivative(ctx, f)), dilate(f, ctx.p()) - dilate(f, ctx.q()));
            continue;
        }
        // p = q: the quotient degenerates to its limit n p^{n-1} on x^n
        std::vector<Rational> lim;
        for (std::size_t n = 1; n < f.size(); ++n)
            lim.push_back(Rational(static_cast<long>(n)) * ctx.p().pow(static_cast<long>(n) - 1) * f.coeff(n));
        EXPECT_EQ(pq_derivative(ctx, f), Poly(lim));
    }
}

TEST_P(PolyProperties, DerivativeMatchesOracle) {
    support::RandomRationals rng(13);
    const oracle::Ctx o = support::to_ctx(ctx);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly f = rng.poly(trial % 13);
        EXPECT_EQ(pq_derivative(ctx, f), support::to_poly(oracle::D(o, support::to_vec(f))));
    }
}

TEST_P(PolyProperties, TaylorIsIdentity) {
    support::RandomRationals rng(17);
    for (std::size_t d = 0; d <= 12; ++d) {
        const Poly f = rng.poly(d);
        EXPECT_EQ(taylor_reconstruct(ctx, f), f);
    }
}

TEST_P(PolyProperties, FallingExpansion) {
    for (const Rational& a : {Rational(1), R("-2/3"), R("7/4")})
        for (std::size_t n = 0; n <= 12; ++n) EXPECT_TRUE(falling_expansion_check(ctx, a, n).is_zero()) << n;
}

INSTANTIATE_TEST_SUITE_P(Contexts, PolyProperties, ::testing::ValuesIn(support::sample_points()),
                         support::context_name<::testing::TestParamInfo<support::PQParam>>);
