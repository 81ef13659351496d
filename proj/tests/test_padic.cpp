#include <gtest/gtest.h>

#include <random>

#include "tmw/field/local.hpp"
#include "tmw/padic/newton_polygon.hpp"
#include "tmw/padic/padic_log.hpp"

using namespace tmw;

TEST(PadicScalar, ArithmeticAgainstRationals) {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        Rat a = make_rat(Int(static_cast<long>(rng() % 10000)) - 5000, Int(static_cast<long>(rng() % 500 + 1)));
        Rat b = make_rat(Int(static_cast<long>(rng() % 10000)) - 5000, Int(static_cast<long>(rng() % 500 + 1)));
        if (a == 0 || b == 0) continue;
        auto pa = PadicScalar::from_rat(a, 11, 20), pb = PadicScalar::from_rat(b, 11, 20);
        auto prod = pa * pb, quo = pa / pb;
        EXPECT_EQ(prod.valuation(), vp(a * b, 11));
        EXPECT_TRUE((prod - PadicScalar::from_rat(a * b, 11, 20)).valuation() >= std::min(prod.absprec(), 18L));
        EXPECT_TRUE((quo * pb - pa).valuation() >= pa.valuation() + 10);
    }
}

TEST(PadicLog, KnownValues) {
    // log(12) and log(2) in Q_11 modulo 11^10, from the series evaluated in exact rationals
    auto l12 = padic_log(PadicScalar::from_int(12, 11, 20), 10);
    EXPECT_EQ(l12.residue(10), Int("12599164094"));
    auto l2 = padic_log(PadicScalar::from_int(2, 11, 20), 10);
    EXPECT_EQ(l2.residue(10), Int("2926532807"));
}

TEST(PadicLog, Homomorphism) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        long a = static_cast<long>(rng() % 100000) + 1, b = static_cast<long>(rng() % 100000) + 1;
        if (a % 11 == 0 || b % 11 == 0) continue;
        auto x = PadicScalar::from_int(a, 11, 30), y = PadicScalar::from_int(b, 11, 30);
        auto d = padic_log(x * y, 20) - padic_log(x, 20) - padic_log(y, 20);
        EXPECT_GE(d.valuation(), 20);
    }
}

TEST(PadicLog, RejectsNonUnits) { EXPECT_THROW(padic_log(PadicScalar::from_int(22, 11, 10), 5), DomainError); }

TEST(NewtonPolygon, ShiftedQuinticAtFive) {
    IntPoly g({255069, 26325, -18990, -870, 65, 1});
    auto s = newton_polygon(g.taylor_shift(1), 5);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].slope, make_rat(-2, 5));
    EXPECT_EQ(s[0].length, 5);
}

TEST(NewtonPolygon, Eisenstein) {
    auto s = newton_polygon(IntPoly({7, 7, 0, 1}), 7);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].slope, make_rat(-1, 3));
}

TEST(LocalFactorization, ElevenAdicFactorsMultiplyBack) {
    IntPoly g({255069, 26325, -18990, -870, 65, 1});
    auto lf = lift_factorization(g, 11, 20);
    ASSERT_TRUE(lf.notes.empty());
    ASSERT_EQ(lf.factors.size(), 3u);
    IntPoly prod({1});
    for (auto& f : lf.factors) prod = prod * f.truncated(20);
    Int M = ipow(Int(11), 18);
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(mod(prod.coeff(i) - g.coeff(i), M), 0) << i;
}

