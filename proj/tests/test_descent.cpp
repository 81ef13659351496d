#include <gtest/gtest.h>

#include <random>

#include "tmw/descent/descent.hpp"

using namespace tmw;

TEST(Descent, FormsForFifthPowers) {
    auto p = expand_descent_identity(5);
    EXPECT_EQ(p.z_form, (BinaryForm{3, 65, -290, -2110, 975, 3149}));
    EXPECT_EQ(p.x_form, (BinaryForm{23, -355, -3930, 6010, 30515, -2311}));
}

TEST(Descent, ThueFormAndDiscriminant) {
    IntPoly g = scale_to_thue_form(expand_descent_identity(5));
    EXPECT_EQ(g, IntPoly({255069, 26325, -18990, -870, 65, 1}));
    EXPECT_EQ(discriminant(g), ipow(Int(2), 32) * ipow(Int(3), 12) * ipow(Int(5), 11) * ipow(Int(11), 6));
}

TEST(Descent, ElementIdentityOnRandomPoints) {
    auto p = expand_descent_identity(5);
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Int u = Int(static_cast<long>(rng() % 2001)) - 1000, v = Int(static_cast<long>(rng() % 2001)) - 1000;
        Int mZ = eval_form(p.z_form, u, v), mX = eval_form(p.x_form, u, v);  // -32 Z, -32 X
        // (1 + rho)(X - Z + 2 Z rho) * (-32) = (2 - rho)(u + v rho)^5 * (-32)
        QuadInt lhs = QuadInt{1, 1} * QuadInt{mX - mZ, 2 * mZ};
        QuadInt rhs = QuadInt{2, -1} * QuadInt{u, v}.pow(5);
        EXPECT_EQ(lhs, (QuadInt{-32 * rhs.s, -32 * rhs.t}));
    }
}

TEST(Descent, NormMultiplicativity) {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        Int u = Int(static_cast<long>(rng() % 201)) - 100, v = Int(static_cast<long>(rng() % 201)) - 100;
        EXPECT_EQ((QuadInt{u, v}.pow(5).norm()), ipow(u * u + u * v + 14 * v * v, 5));
    }
}

TEST(Descent, RejectsEvenExponent) { EXPECT_THROW(expand_descent_identity(4), DomainError); }

TEST(VerifySolution, Examples) {
    EXPECT_TRUE(verify_solution(3, 0, 2, 2, 5).ok);
    EXPECT_TRUE(verify_solution(6, 1, 1, 3, 2).ok);
    EXPECT_FALSE(verify_solution(3, 0, 0, 1, 1).ok);
}

TEST(VerifySolution, CoprimalityIsEnforced) {
    // 968^2 + 5^2 11^3 = 99^3 holds, but gcd(968, 99) = 11
    auto r = verify_solution(3, 2, 3, 968, 99);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.reason, "gcd(x, y) != 1");
    EXPECT_EQ(Int(968) * 968 + 25 * ipow(Int(11), 3), ipow(Int(99), 3));
}
