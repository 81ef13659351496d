#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tmw/bounds/initial_bounds.hpp"

using namespace tmw;
using tmw::testing::agrees;

namespace {
const FieldPack& F() {
    static FieldPack f = load_field_pack(tmw::testing::data_path("F.json"));
    return f;
}
const RealContext& ctx() {
    static RealContext c(F());
    return c;
}
}  // namespace

TEST(Galois, GroupHasOrderTwentyAndActsTransitively) {
    const auto& G = ctx().galois();
    EXPECT_EQ(G.elements.size(), 20u);
    EXPECT_EQ(G.orbit({0, 1, 2}).size(), 20u);
    EXPECT_EQ(G.pair_orbit(0, 1).size(), 20u);
    // each point is fixed by exactly one involution
    const Perm5& s = G.involution_fixing(0);
    EXPECT_EQ(s[0], 0);
    EXPECT_NE(s[1], 1);
}

TEST(Heights, UnitRatiosMatchIndependentComputation) {
    // mpmath: charpoly of the 20 ordered-pair ratios, denominators by continued fractions
    auto u = unit_heights(ctx());
    EXPECT_TRUE(agrees(u.eps[0], "1.63245573760307", 12));
    EXPECT_TRUE(agrees(u.eps[1], "2.05183201696058", 12));
    EXPECT_TRUE(agrees(u.eps[2], "2.26466935366468", 12));
    EXPECT_TRUE(agrees(u.eps[3], "2.15189591606078", 12));
    EXPECT_TRUE(agrees(u.pi113, "2.1592922951756", 12));
    EXPECT_EQ(u.pi113_lc, 14641);
    for (auto& lc : u.eps_lc) EXPECT_EQ(lc, 1);
}

TEST(Heights, RationalNumber) {
    // h(3/7) = log 7
    auto r = height_from_conjugates([](long P) { return std::vector<FixedReal>{FixedReal::from_rational(make_rat(3, 7), P)}; });
    EXPECT_EQ(r.minpoly.lc, 7);
    EXPECT_TRUE(agrees(r.h, "1.945910149055313305105352743443", 25));
}

TEST(Yu, KappaTable) {
    EXPECT_EQ(yu_kappa(11, 2), 0);
    EXPECT_THROW(yu_parameters(6, 20, 2, 1, 1, std::vector<FixedReal>(6, bnum::num(1))), DomainError);
}

TEST(Checkpoint, CombinationIsConsistent) {
    auto s = checkpoint_state();
    auto [K, N] = combine_to_initial_bounds(s);
    EXPECT_TRUE(agrees(K, "1.3217e43", 0));
    EXPECT_TRUE(agrees(N, "9.918312e32", 0));
    EXPECT_EQ(s.constants["K0"].provenance, Provenance::Checkpoint);
}

TEST(Checkpoint, TamperedConstantIsDetected) {
    auto s = checkpoint_state();
    s.set("N0", "9.0e32", Provenance::Checkpoint);
    EXPECT_THROW(combine_to_initial_bounds(s), CheckpointIntegrityError);
}

TEST(Matveev, ConstantsGrowWithHeights) {
    std::vector<FixedReal> h(3, bnum::num(1)), l(3, bnum::num(1));
    auto a = matveev_parameters(h, l, 5, true);
    auto [c7a, c8a] = matveev_c7_c8(a);
    h[0] = bnum::num(10);
    auto b = matveev_parameters(h, l, 5, true);
    auto [c7b, c8b] = matveev_c7_c8(b);
    EXPECT_GT(c7b.center(), c7a.center());
    (void)c8a;
    (void)c8b;
}
