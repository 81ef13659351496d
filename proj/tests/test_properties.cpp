#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tmw/pipeline/run.hpp"

using namespace tmw;

namespace {
const FieldPack& F() {
    static FieldPack f = load_field_pack(tmw::testing::data_path("F.json"));
    return f;
}
const SplittingPack& K() {
    static SplittingPack k = load_splitting_pack(tmw::testing::data_path("K.json"));
    return k;
}
}  // namespace

TEST(Properties, PadicLogHomomorphismInSplittingCompletion) {
    SplittingLocal S = build_splitting_local(F(), K(), "pi112", 30);
    std::mt19937_64 rng(8);
    int checked = 0;
    while (checked < 1000) {
        auto pick = [&] {
            Int a0 = Int(static_cast<long>(rng() % 20001)) - 10000, a1 = Int(static_cast<long>(rng() % 20001)) - 10000;
            return QuadExtElement::from_coords(S.ext, Rat(a0), Rat(a1), 30);
        };
        auto x = pick(), y = pick();
        if (x.ord() != 0 || y.ord() != 0) continue;
        auto d = padic_log(x * y, 20) - padic_log(x, 20) - padic_log(y, 20);
        ASSERT_GE(d.ord_lower_bound(), 20);
        ++checked;
    }
}

TEST(Properties, RootLiftResiduals) {
    SplittingLocal S = build_splitting_local(F(), K(), "pi112", 40);
    RatPoly g = to_rat(F().field->poly());
    for (int i = 1; i <= 5; ++i) EXPECT_GE(eval(g, S.root(i)).ord_lower_bound(), 10);
}

TEST(Properties, PadicInstancesAreUnitsWithHalfIntegralDelta2) {
    PadicContext ctx(F(), K(), 60);
    for (auto& a : alpha_family(27)) {
        auto s = build_padic_instance(ctx, a);
        EXPECT_EQ(s.ord_delta1, 0);
        EXPECT_EQ(s.ord_delta2, make_rat(1, 2)) << a.str();
    }
}

TEST(Properties, ReportIsDeterministicAcrossThreadCounts) {
    RunConfig a;
    a.packs = PackPaths::in_dir(TMW_DATA_DIR);
    a.stages = {"eleven_adic", "modular", "final_search", "delta2_valuations", "theorem_verification"};
    a.y_bound = 200;
    a.threads = 1;
    RunConfig b = a;
    b.threads = 4;
    EXPECT_EQ(run_full(a).to_json().dump(), run_full(b).to_json().dump());
}
