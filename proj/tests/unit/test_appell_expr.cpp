#include <gtest/gtest.h>

#include "cli/appell_expr.hpp"
#include "support.hpp"

using namespace pqa;
using pqa::cli::evaluate_appell_expr;
using pqa::cli::ExprError;
using support::R;

class AppellExpr : public ::testing::Test {
protected:
    ContextPtr ctx = make_context(2, 1);
    AppellSequence eval(const char* e) { return evaluate_appell_expr(e, ctx, 6); }
};

TEST_F(AppellExpr, Names) {
    EXPECT_EQ(eval("bernoulli"), bernoulli_sequence(ctx, 6));
    EXPECT_EQ(eval("identity"), identity_sequence(ctx, 6));
    EXPECT_EQ(eval("I"), identity_sequence(ctx, 6));
    EXPECT_EQ(eval("  genocchi "), genocchi_sequence(ctx, 6));
}

TEST_F(AppellExpr, GroupOperations) {
    const auto b = bernoulli_sequence(ctx, 6), h = hermite_sequence(ctx, 6), e = euler_sequence(ctx, 6);
    EXPECT_EQ(eval("bernoulli * inv(bernoulli)"), identity_sequence(ctx, 6));
    EXPECT_EQ(eval("hermite ^ 0"), identity_sequence(ctx, 6));
    EXPECT_EQ(eval("hermite^-2"), power(h, -2));
    EXPECT_EQ(eval("inv hermite"), inverse(h));
    EXPECT_EQ(eval("bernoulli + euler"), add(b, e));
    EXPECT_EQ(eval("bernoulli * euler + hermite"), add(convolve(b, e), h));
    EXPECT_EQ(eval("bernoulli * (euler + hermite)"), convolve(b, add(e, h)));
}

TEST_F(AppellExpr, Scalars) {
    const auto b = bernoulli_sequence(ctx, 6), e = euler_sequence(ctx, 6);
    EXPECT_EQ(eval("2/3*bernoulli"), scalar_mul(R("2/3"), b));
    EXPECT_EQ(eval("euler*2/3"), scalar_mul(R("2/3"), e));
    EXPECT_EQ(eval("-1*euler"), scalar_mul(-1, e));
    EXPECT_EQ(eval("2/3*bernoulli + euler").coefficients()[1], R("-17/18"));
}

TEST_F(AppellExpr, Errors) {
    for (const char* bad : {"", "gamma", "bernoulli *", "(euler", "euler)", "2/3", "euler ^ x", "euler ^ 1/2",
                            "0.5*euler", "euler euler", "inv()"})
        EXPECT_THROW(eval(bad), ExprError) << bad;
    EXPECT_THROW(eval("inv(genocchi)"), std::domain_error);
    EXPECT_THROW(eval("genocchi ^ -1"), std::domain_error);
    EXPECT_THROW(eval("0*euler"), std::domain_error);
    EXPECT_THROW(eval("euler + -1*euler"), std::domain_error);
}
