#include <gtest/gtest.h>

#include <stdexcept>

#include "pqappell/series.hpp"
#include "support.hpp"

using namespace pqa;
using support::R;

namespace {
ContextPtr c21() {
    static const ContextPtr c = make_context(2, 1);
    return c;
}

std::vector<Rational> scalars(const Series& s) { return s.scalars(); }
}  // namespace

TEST(Series, ShapeAndAccessors) {
    const Series z = Series::zero(c21(), 3);
    EXPECT_EQ(z.order(), 3u);
    EXPECT_TRUE(z.is_zero());
    const Series one = Series::one(c21(), 2);
    EXPECT_EQ(scalars(one), (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(Series::from_scalars(c21(), {1, 2, 3}).truncate(1), Series::from_scalars(c21(), {1, 2}));
    EXPECT_THROW(Series(c21(), {}), std::invalid_argument);
    EXPECT_THROW(small_exp_in_x(c21(), 1, 3).scalars(), std::invalid_argument);
}

TEST(CauchyProduct, Examples) {
    const Series a = Series::from_scalars(c21(), {1, 1, 0, 0, 0});
    EXPECT_EQ(cauchy_product(a, Series::one(c21(), 4)), a);
    EXPECT_EQ(scalars(cauchy_product(a, a)), (std::vector<Rational>{1, 2, 3, 0, 0}));
    EXPECT_EQ(cauchy_product(small_exp(c21(), 1, 16), big_exp(c21(), -1, 16)), Series::one(c21(), 16));
}

TEST(CauchyProduct, TruncatesToMinimumOrder) {
    const Series a = Series::from_scalars(c21(), {1, 1, 1, 1});
    const Series b = Series::from_scalars(c21(), {1, 1});
    EXPECT_EQ(cauchy_product(a, b).order(), 1u);
    EXPECT_EQ((a + b).order(), 1u);
}

TEST(CauchyProduct, ContextMismatchIsAnError) {
    const Series a = Series::one(c21(), 3);
    const Series b = Series::one(make_context(3, 1), 3);
    EXPECT_THROW(cauchy_product(a, b), std::invalid_argument);
    EXPECT_THROW(a + b, std::invalid_argument);
    // Distinct context objects with equal parameters are interchangeable.
    EXPECT_NO_THROW(cauchy_product(a, Series::one(make_context(2, 1), 3)));
}

TEST(Reciprocal, Examples) {
    EXPECT_EQ(reciprocal(Series::one(c21(), 5)), Series::one(c21(), 5));
    const auto b = scalars(reciprocal(Series::from_scalars(c21(), {1, 1, 0, 0})));
    EXPECT_EQ(b[0], Rational(1));
    EXPECT_EQ(b[1], Rational(-1));
    EXPECT_EQ(b[2], Rational(3));
    EXPECT_EQ(reciprocal(small_exp(c21(), 1, 10)), big_exp(c21(), -1, 10));
    EXPECT_THROW(reciprocal(Series::from_scalars(c21(), {0, 1})), std::domain_error);
}

TEST(Reciprocal, NonConstantLeadingTermIsAnError) {
    std::vector<Poly> c{Poly({1, 1}), Poly({1})};
    EXPECT_THROW(reciprocal(Series(c21(), c)), std::domain_error);
}

TEST(Exponentials, Examples) {
    EXPECT_EQ(small_exp(c21(), 0, 6), Series::one(c21(), 6));
    EXPECT_EQ(scalars(small_exp(c21(), 1, 2))[2], Rational(2));
    EXPECT_EQ(scalars(small_exp(make_context(1, 1), 1, 6)), std::vector<Rational>(7, Rational(1)));
    EXPECT_EQ(big_exp(c21(), 0, 6), Series::one(c21(), 6));
    EXPECT_EQ(scalars(big_exp(make_context(3, R("1/2")), -1, 2))[2], R("1/2"));
    const auto pp = make_context(R("4/3"), R("4/3"));
    EXPECT_EQ(big_exp(pp, R("-5/2"), 8), small_exp(pp, R("-5/2"), 8));
}

TEST(Exponentials, InX) {
    EXPECT_EQ(small_exp_in_x(c21(), 0, 4), Series::one(c21(), 4));
    EXPECT_EQ(small_exp_in_x(c21(), 1, 2).coeff(1), Poly::x());
    EXPECT_EQ(small_exp_in_x(c21(), c21()->p(), 2).coeff(2), Poly::monomial(8, 2));
}

TEST(DerivativeT, Examples) {
    EXPECT_TRUE(derivative_t(Series::one(c21(), 4)).is_zero());
    EXPECT_EQ(derivative_t(Series::one(c21(), 4)).order(), 3u);
    EXPECT_EQ(scalars(derivative_t(Series::from_scalars(c21(), {0, 0, 1, 0}))), (std::vector<Rational>{0, 1, 0}));
    const Rational lam = R("3/5");
    const Series lhs = derivative_t(small_exp(c21(), lam, 9));
    const Series rhs = lam * small_exp(c21(), lam * c21()->p(), 8);
    EXPECT_EQ(lhs, rhs);
}

TEST(DilateT, Examples) {
    const Series a = Series::from_scalars(c21(), {1, 1, 1});
    EXPECT_EQ(dilate_t(a, 1), a);
    EXPECT_EQ(scalars(dilate_t(a, 2)), (std::vector<Rational>{1, 2, 4}));
    EXPECT_EQ(dilate_t(small_exp(c21(), R("2/3"), 7), R("-3/4")), small_exp(c21(), R("-1/2"), 7));
}

TEST(MulT, MatchesPlainShift) {
    const auto ctx = make_context(R("3/2"), R("1/2"));
    const Series a = Series::from_scalars(ctx, {2, R("1/3"), -1, 5});
    const Series b = mul_t(a);
    ASSERT_EQ(b.order(), 4u);
    // plain coefficient of t^{n} in t*A equals plain coefficient of t^{n-1} in A
    for (std::size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(b.coeff(n).coeff(0) / ctx->factorial(n), a.coeff(n - 1).coeff(0) / ctx->factorial(n - 1));
    EXPECT_TRUE(b.coeff(0).is_zero());
}

TEST(NthDerivativeExpCheck, Examples) {
    EXPECT_TRUE(nth_derivative_exp_check(c21(), 1, 0, 8).is_zero());
    EXPECT_TRUE(nth_derivative_exp_check(c21(), 1, 1, 8).is_zero());
    EXPECT_TRUE(nth_derivative_exp_check(make_context(R("3/2"), R("1/2")), 2, 3, 8).is_zero());
}

class SeriesProperties : public ::testing::TestWithParam<std::pair<const char*, const char*>> {
protected:
    ContextPtr ctx = make_context(R(GetParam().first), R(GetParam().second));
};

TEST_P(SeriesProperties, ProductLaws) {
    support::RandomRationals rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = Series::from_scalars(ctx, rng.vec(13));
        const Series b = Series::from_scalars(ctx, rng.vec(13));
        std::vector<Poly> pc;
        for (int i = 0; i <= 12; ++i) pc.push_back(rng.poly(3));
        const Series c(ctx, pc);
        EXPECT_EQ(cauchy_product(a, b), cauchy_product(b, a));
        EXPECT_EQ(cauchy_product(cauchy_product(a, b), c), cauchy_product(a, cauchy_product(b, c)));
        EXPECT_EQ(cauchy_product(Series::one(ctx, 12), c), c);
        EXPECT_EQ(cauchy_product(c, Series::one(ctx, 12)), c);
    }
}

TEST_P(SeriesProperties, ReciprocalIsInvolutive) {
    support::RandomRationals rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = Series::from_scalars(ctx, rng.vec(13, true));
        EXPECT_EQ(reciprocal(reciprocal(a)), a);
        EXPECT_EQ(cauchy_product(a, reciprocal(a)), Series::one(ctx, 12));
    }
}

TEST_P(SeriesProperties, ExponentialInverseLawAndDeltaLinkage) {
    const Series prod = cauchy_product(small_exp(ctx, 1, 16), big_exp(ctx, -1, 16));
    EXPECT_EQ(prod, Series::one(ctx, 16));
    for (std::size_t n = 0; n <= 16; ++n) EXPECT_EQ(prod.coeff(n).coeff(0), alternating_delta_sum(*ctx, n)) << n;
}

TEST_P(SeriesProperties, ProductMatchesPlainOracle) {
    support::RandomRationals rng(31);
    const oracle::Ctx o = support::to_ctx(*ctx);
    const auto av = rng.vec(11), bv = rng.vec(11);
    oracle::Vec pa, pb;
    for (long n = 0; n <= 10; ++n) {
        pa.push_back(av[n].raw() / oracle::factorial(o, n));
        pb.push_back(bv[n].raw() / oracle::factorial(o, n));
    }
    const oracle::Vec expect = oracle::normalized(o, oracle::smul(pa, pb, 10));
    const auto got = scalars(cauchy_product(Series::from_scalars(ctx, av), Series::from_scalars(ctx, bv)));
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(got[n].raw(), expect[n]);
}

TEST_P(SeriesProperties, NthDerivativeOfExponentials) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const Rational& lam : {Rational(1), R("-2/3"), Rational(2)})
            EXPECT_TRUE(nth_derivative_exp_check(ctx, lam, n, 10).is_zero()) << n;
}

INSTANTIATE_TEST_SUITE_P(Contexts, SeriesProperties, ::testing::ValuesIn(support::sample_points()),
                         support::context_name<::testing::TestParamInfo<support::PQParam>>);
