#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tmw/numeric/rational_reconstruct.hpp"
#include "tmw/numeric/real_roots.hpp"

using namespace tmw;
using tmw::testing::agrees;

TEST(BigInt, FloorCeilRound) {
    EXPECT_EQ(floor_div(Int(-7), Int(2)), -4);
    EXPECT_EQ(ceil_div(Int(-7), Int(2)), -3);
    EXPECT_EQ(ceil_div(Int(7), Int(2)), 4);
    EXPECT_EQ(round_nearest(make_rat(5, 2)), 3);
    EXPECT_EQ(dist_to_int(make_rat(7, 3)), make_rat(1, 3));
    EXPECT_EQ(vp(Int(2 * 121 * 5), 11), 2);
    EXPECT_TRUE(is_square(Int(36599) * 36599));
    EXPECT_FALSE(is_square(Int(2)));
}

TEST(BigInt, FactorOverSmallPrimes) {
    IntPoly g({255069, 26325, -18990, -870, 65, 1});
    EXPECT_EQ(factor_over(discriminant(g), {2, 3, 5, 11}).str(), "2^32*3^12*5^11*11^6");
}

TEST(FixedReal, Constants) {
    // mpmath, 50 digits
    EXPECT_TRUE(agrees(ln2(60), "0.69314718055994530941723212145817656807550013436026", 48));
    EXPECT_TRUE(agrees(e_const(60), "2.7182818284590452353602874713526624977572470936999", 48));
    EXPECT_TRUE(agrees(sqrt(FixedReal::from_int(2, 60)), "1.4142135623730950488016887242096980785696718753769", 48));
}

TEST(FixedReal, LogExpRoundTrip) {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Rat q = make_rat(Int(static_cast<long>(rng() % 100000 + 1)), Int(static_cast<long>(rng() % 1000 + 1)));
        FixedReal x = FixedReal::from_rational(q, 50);
        FixedReal y = exp(real_log(x, 50));
        EXPECT_TRUE(abs(y.center() - q) < make_rat(1, pow10(40)) * (q + 1));
    }
}

TEST(FixedReal, LogIsAdditive) {
    FixedReal a = FixedReal::from_string("123.456", 60), b = FixedReal::from_string("0.0789", 60);
    FixedReal d = real_log(a * b, 60) - real_log(a, 60) - real_log(b, 60);
    EXPECT_LT(abs(d.center()), make_rat(1, pow10(50)));
}

TEST(RealRoots, QuinticMatchesIndependentSolver) {
    IntPoly g({255069, 26325, -18990, -870, 65, 1});
    auto r = real_roots(g, 45);
    ASSERT_EQ(r.size(), 5u);
    // mpmath polyroots at 400 digits
    const char* want[] = {"-73.27800425285655912914865529015440290618", "-12.69843006066090811974874080672641606269",
                          "-3.29980541040300351332109896313265978925", "4.121657319177185081329142498219497025038",
                          "20.15458240474328568088935256179398173309"};
    for (int i = 0; i < 5; ++i) EXPECT_TRUE(agrees(r[i], want[i], 36)) << i;
}

TEST(RealRoots, RejectsRepeatedRoots) {
    IntPoly sq({1, -2, 1});  // (t - 1)^2
    EXPECT_THROW(real_roots(sq, 20), NotSquarefreeError);
}

TEST(RationalReconstruct, RecoversSmallFractions) {
    for (auto q : {make_rat(355, 113), make_rat(-22, 7), make_rat(1, 14641), make_rat(421900912521, 17)}) {
        auto x = FixedReal::from_rational(q, 60);
        auto r = rational_reconstruct(x, pow10(15));
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r, q);
    }
    EXPECT_FALSE(rational_reconstruct(sqrt(FixedReal::from_int(2, 60)), pow10(10)).has_value());
}
