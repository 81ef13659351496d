#include <gtest/gtest.h>

#include <random>
#include <filesystem>
#include <fstream>
#include <set>

#include "test_support.hpp"
#include "tmw/pipeline/run.hpp"

using namespace tmw;

namespace {
const IntPoly g({255069, 26325, -18990, -870, 65, 1});
}

TEST(ThueSearch, TrivialAndEvaluatedTargets) {
    Int c23 = homogeneous_eval(g, 2, 3);
    auto h = bounded_thue_search(g, {Int(1), c23}, 10);
    std::set<std::tuple<std::string, std::string, std::string>> got;
    for (auto& x : h) got.insert({to_dec(x.x), to_dec(x.y), to_dec(x.c)});
    EXPECT_TRUE(got.count({"1", "0", "1"}));
    EXPECT_TRUE(got.count({"2", "3", to_dec(c23)}));
}

TEST(ThueSearch, AgreesWithNaiveDoubleLoop) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + t % 4;
        std::vector<Int> c(n + 1);
        for (auto& x : c) x = Int(static_cast<long>(rng() % 21)) - 10;
        if (c[n] == 0) c[n] = 3;
        IntPoly f(c);
        std::vector<Int> rhs{0, 1, -1};
        for (int k = 0; k < 4; ++k) rhs.push_back(homogeneous_eval(f, static_cast<long>(rng() % 101) - 50, static_cast<long>(rng() % 101) - 50));
        std::sort(rhs.begin(), rhs.end());
        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
        std::set<std::tuple<long, long, std::string>> fast, naive;
        for (auto& x : bounded_thue_search(f, rhs, 50, 2))
            if (abs(x.x) <= 50) fast.insert({x.x.get_si(), x.y.get_si(), to_dec(x.c)});
        for (long x = -50; x <= 50; ++x)
            for (long y = -50; y <= 50; ++y) {
                Int v = homogeneous_eval(f, x, y);
                if (std::binary_search(rhs.begin(), rhs.end(), v)) naive.insert({x, y, to_dec(v)});
            }
        EXPECT_EQ(fast, naive) << "form " << t;
    }
}

TEST(ThueSearch, FinalFamilyHasNoSmallSolutions) {
    auto fam = final_rhs_family(27, 21);
    EXPECT_EQ(fam.rhs.size(), 616u);
    EXPECT_EQ(fam.final_count, 560u);
    EXPECT_TRUE(bounded_thue_search(g, fam.rhs, 1000).empty());
}

TEST(Theorem, ListedSolutionsAndWindow) {
    auto v = verify_theorem();
    ASSERT_EQ(v.listed.size(), 10u);
    for (auto& r : v.listed) {
        if (r.tuple.x == 968) EXPECT_FALSE(r.ok);  // gcd(968, 99) = 11
        else EXPECT_TRUE(r.ok) << r.tuple.str();
    }
    EXPECT_TRUE(v.unlisted.empty());
    EXPECT_EQ(v.window_hits.size(), 9u);
    for (auto& t : v.window_hits) EXPECT_NE(t.n, 4);
}

TEST(Verdict, Policy) {
    std::vector<StageRecord> ok(2);
    for (auto& s : ok) s.status = "pass";
    auto trusted = declared_trusted_set();
    EXPECT_EQ(compute_verdict(ok, trusted, kDefaultYBound), "complete-at-desk-scale");
    EXPECT_EQ(compute_verdict(ok, trusted, 10), "search-bound-insufficient");
    auto fewer = trusted;
    fewer.pop_back();
    EXPECT_NE(compute_verdict(ok, fewer, kDefaultYBound), "complete-at-desk-scale");
    ok[1].status = "fail";
    ok[1].name = "reduction_chain";
    EXPECT_EQ(compute_verdict(ok, trusted, kDefaultYBound).rfind("incomplete: reduction_chain", 0), 0u);
}

TEST(RunFull, CorruptedPackHaltsAtFieldData) {
    std::string dir = ::testing::TempDir() + "tmw_corrupt";
    std::filesystem::create_directories(dir);
    for (auto n : {"L.json", "K.json", "newforms.json"})
        std::filesystem::copy_file(tmw::testing::data_path(n), dir + "/" + n, std::filesystem::copy_options::overwrite_existing);
    json j = pack_io::load_file(tmw::testing::data_path("F.json"));
    j["elements"]["eps1"]["coords"][0][0] = "15";
    std::ofstream(dir + "/F.json") << j.dump();
    RunConfig cfg;
    cfg.packs = PackPaths::in_dir(dir);
    auto rep = run_full(cfg);
    ASSERT_FALSE(rep.stages.empty());
    EXPECT_EQ(rep.stages[0].name, "field_data");
    EXPECT_EQ(rep.stages[0].status, "fail");
    EXPECT_NE(rep.stages[0].code.find("eps1"), std::string::npos);
    for (std::size_t i = 1; i < rep.stages.size(); ++i) EXPECT_EQ(rep.stages[i].status, "skipped");
    EXPECT_EQ(rep.verdict.rfind("incomplete: field_data", 0), 0u);
}

TEST(RunFull, EarlyStagesAndReportShape) {
    RunConfig cfg;
    cfg.packs = PackPaths::in_dir(TMW_DATA_DIR);
    cfg.stages = {"eleven_adic", "modular", "final_search"};
    cfg.y_bound = 50;
    auto rep = run_full(cfg);
    auto j = rep.to_json();
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    std::vector<std::string> names;
    for (auto& s : rep.stages) {
        names.push_back(s.name);
        EXPECT_EQ(s.status, "pass") << s.name << " " << s.code;
    }
    EXPECT_EQ(names, (std::vector<std::string>{"field_data", "modular", "descent", "five_adic", "eleven_adic", "final_search"}));
    EXPECT_EQ(j["stages"][2]["data"]["discriminant"], "197442697827660595200000000000");
    EXPECT_EQ(j["stages"][3]["data"]["z1_bound"], 27);
    EXPECT_EQ(rep.verdict, "partial-run: selected stages passed");
}
