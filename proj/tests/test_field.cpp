#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "test_support.hpp"
#include "tmw/field/embeddings.hpp"
#include "tmw/field/local.hpp"
#include "tmw/field/validate.hpp"

using namespace tmw;
using tmw::testing::data_path;

namespace {
const FieldPack& F() {
    static FieldPack f = load_field_pack(data_path("F.json"));
    return f;
}
}  // namespace

TEST(FieldPack, ValidatesCompletely) {
    auto r = validate_pack(F());
    for (auto& c : r.claims) EXPECT_TRUE(c.pass) << c.claim << " " << c.detail;
    EXPECT_GT(r.claims.size(), 10u);
}

TEST(QuadPack, Validates) {
    auto L = load_quad_pack(data_path("L.json"));
    auto r = validate_quad_pack(L);
    for (auto& c : r.claims) EXPECT_TRUE(c.pass) << c.claim << " " << c.detail;
}

TEST(SplittingPack, Validates) {
    auto K = load_splitting_pack(data_path("K.json"));
    auto r = validate_splitting_pack(K, F());
    for (auto& c : r.claims) EXPECT_TRUE(c.pass) << c.claim << " " << c.detail;
}

TEST(FieldPack, CorruptedUnitIsNamed) {
    json j = pack_io::load_file(data_path("F.json"));
    j["elements"]["eps1"]["coords"][0][0] = "15";
    auto r = validate_pack(parse_field_pack(j));
    EXPECT_FALSE(r.all_pass());
    bool named = false;
    for (auto& f : r.failures()) named = named || f.find("eps1") != std::string::npos;
    EXPECT_TRUE(named);
}

TEST(FieldPack, MissingKeyIsFormatError) {
    json j = pack_io::load_file(data_path("F.json"));
    j.erase("elements");
    EXPECT_THROW(parse_field_pack(j), PackFormatError);
}

TEST(Embeddings, NormOfPi113IsProductOfConjugates) {
    RealEmbeddings E(F().field, 60);
    FixedReal prod = FixedReal::from_int(1, 60);
    for (int i = 1; i <= 5; ++i) prod = prod * E.conjugate(F().get("pi113"), i);
    Rat n = F().get("pi113").norm();
    EXPECT_LT(abs(prod.center() - n), make_rat(1, pow10(30)));
    EXPECT_EQ(abs(n), 11);
}

TEST(LocalPrimes, ElevenSplitsAsTwoRamifiedAndOneUnramified) {
    auto P = local_primes(F().field->poly(), 11, 20);
    ASSERT_EQ(P.size(), 3u);
    std::multiset<int> es;
    for (auto& p : P) es.insert(p.e);
    EXPECT_EQ(es, (std::multiset<int>{1, 2, 2}));
    for (auto name : {"pi111", "pi112", "pi113"}) {
        auto i = match_prime(F().get(name), P, name);
        EXPECT_EQ(ideal_valuation(F().get(name), P[i]), 1) << name;
    }
}

TEST(SplittingLocal, RootsSatisfyG) {
    auto K = load_splitting_pack(data_path("K.json"));
    auto S = build_splitting_local(F(), K, "pi112", 30);
    RatPoly g = to_rat(F().field->poly());
    for (int i = 1; i <= 5; ++i) EXPECT_GE(eval(g, S.root(i)).ord_lower_bound(), 10) << i;
    // theta_5 is the Q_11-rational root, 7 + 2*11 + 2*11^2 + ...
    EXPECT_TRUE(S.root(5).x1().is_zero());
    EXPECT_EQ(mod(S.root(5).x0().residue(3), Int(1331)), 7 + 2 * 11 + 2 * 121);
}
