#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tmw/modular/modular.hpp"

using namespace tmw;

TEST(Modular, TraceSetAtThree) {
    auto t = trace_set(3);
    EXPECT_EQ(t, (std::vector<long>{-2, 0, 2}));
}

TEST(Modular, BValuesAndElimination) {
    auto np = load_newform_pack(tmw::testing::data_path("newforms.json"));
    EXPECT_EQ(np.level, 110);
    auto el = eliminate(np.forms, 3, 7, 1000000);
    std::multiset<Int> b;
    for (auto& [l, v] : el.b_values) b.insert(v);
    EXPECT_EQ(b, (std::multiset<Int>{45, 45, -45, -13824}));
    EXPECT_TRUE(el.survivors.empty());
    EXPECT_TRUE(el.inconclusive.empty());
}

TEST(Modular, SmallPrimesSurvive) {
    auto np = load_newform_pack(tmw::testing::data_path("newforms.json"));
    auto el = eliminate(np.forms, 3, 2, 10);
    // 45 = 3^2 5 and 13824 = 2^9 3^3
    EXPECT_EQ(el.survivors, (std::vector<unsigned long>{2, 3, 5}));
}
