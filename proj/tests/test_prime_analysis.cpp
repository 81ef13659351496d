#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tmw/analysis/eleven_adic.hpp"

using namespace tmw;

namespace {
const FieldPack& F() {
    static FieldPack f = load_field_pack(tmw::testing::data_path("F.json"));
    return f;
}
}  // namespace

TEST(Ramification, TotallyRamifiedAtFive) {
    auto c = certify_totally_ramified(F().field->poly(), 5);
    EXPECT_TRUE(c.totally_ramified);
    EXPECT_EQ(c.shift, 1);
    EXPECT_EQ(bound_z1(5, 11, c.totally_ramified), 27);
}

TEST(Ramification, NotCertifiedAtEleven) { EXPECT_FALSE(certify_totally_ramified(F().field->poly(), 11).totally_ramified); }

TEST(Ramification, BoundNeedsCertificate) { EXPECT_THROW(bound_z1(5, 11, false), DomainError); }

TEST(DifferenceQuartic, AnnihilatesRootDifferences) {
    // th1^2 - 3 th1 + 2 = 0 (roots 1, 2); th2^2 - 9 th2 + 20 = 0 (roots 4, 5)
    auto c = difference_quartic<Rat>(Rat(-3), Rat(2), Rat(-9), Rat(20));
    for (int r1 : {1, 2})
        for (int r2 : {4, 5}) {
            Rat t = r2 - r1;
            EXPECT_EQ(t * t * t * t + c[0] * t * t * t + c[1] * t * t + c[2] * t + c[3], 0);
        }
}

TEST(ElevenAdic, FactorDigits) {
    auto A = analyze_eleven_adic(F(), 27);
    EXPECT_EQ(padic_digits(A.g[0].coeffs[1], 5), (std::vector<long>{3, 3, 8, 9, 5}));
    EXPECT_EQ(padic_digits(A.g[0].coeffs[0], 5), (std::vector<long>{5, 0, 7, 10, 10}));
    EXPECT_EQ(padic_digits(A.g[1].coeffs[1], 5), (std::vector<long>{3, 5, 5, 0, 2}));
    EXPECT_EQ(padic_digits(A.g[1].coeffs[0], 5), (std::vector<long>{5, 0, 0, 1, 7}));
    EXPECT_EQ(padic_digits(-A.g[2].coeffs[0], 5), (std::vector<long>{7, 2, 2, 10, 7}));
    EXPECT_EQ(A.h12[3].valuation(), 2);
    EXPECT_EQ(*A.lemma.pair_ord[0][1], make_rat(1, 2));
    EXPECT_EQ(*A.lemma.pair_ord[0][2], 0);
    EXPECT_EQ(*A.lemma.pair_ord[1][2], 0);
}

TEST(ElevenAdic, PatternsAndFamilies) {
    auto A = analyze_eleven_adic(F(), 27);
    std::vector<std::string> p;
    for (auto& w : A.constraints.patterns) p.push_back(pattern_str(w));
    EXPECT_EQ(p, (std::vector<std::string>{"(0,0,*)", "(0,1,0)", "(1,0,0)", "(1,1,0)"}));
    EXPECT_EQ(A.families.intermediate_rhs.size(), 56u);
    EXPECT_EQ(A.families.alphas.size(), 56u);
    EXPECT_EQ(A.families.intermediate_rhs.front(), -28512);
}

TEST(RemovingLemma, TwoOpenSlotsAreRejected) {
    RemovingLemmaInput in;
    in.e = {1, 1};
    in.intra_ord = {std::nullopt, std::nullopt};
    in.pair_ord.assign(2, std::vector<std::optional<Rat>>(2));
    in.pair_ord[0][1] = Rat(0);
    EXPECT_THROW(removing_lemma_constraints(in), DomainError);
}

TEST(RemovingLemma, CappedSlotWithOneOpenSlot) {
    RemovingLemmaInput in;
    in.e = {1, 1};
    in.intra_ord = {make_rat(1, 2), std::nullopt};
    in.pair_ord.assign(2, std::vector<std::optional<Rat>>(2));
    in.pair_ord[0][1] = Rat(1);
    auto c = removing_lemma_constraints(in);
    ASSERT_TRUE(c.unbounded_slot);
    EXPECT_EQ(*c.unbounded_slot, 1u);
    std::vector<std::string> p;
    for (auto& w : c.patterns) p.push_back(pattern_str(w));
    EXPECT_EQ(p, (std::vector<std::string>{"(0,*)", "(1,*)"}));
}

TEST(ThueRhs, Values) {
    EXPECT_EQ(thue_rhs(0, 1), -28512);
    EXPECT_EQ(thue_rhs(1, 0), -12960);
}
