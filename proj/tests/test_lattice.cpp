#include <gtest/gtest.h>

#include <random>

#include "tmw/lattice/lll.hpp"
#include "tmw/lattice/reduction.hpp"

using namespace tmw;

namespace {
IntegerLattice random_lattice(std::mt19937_64& rng, int n, long range) {
    IntegerLattice L;
    for (;;) {
        L.basis.assign(n, IntVec(n));
        for (auto& b : L.basis)
            for (auto& x : b) x = Int(static_cast<long>(rng() % (2 * range + 1))) - range;
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = Rat(L.basis[i][j]);
        if (det_int(m) != 0) return L;
    }
}
}  // namespace

TEST(LLL, PostConditionsOnRandomLattices) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 5;
        auto L = random_lattice(rng, n, t < 20 ? 50 : 1000000);
        auto r = lll_reduce(L);
        EXPECT_TRUE(r.check.ok()) << r.check.detail;
        EXPECT_TRUE(verify_lll(L, r.reduced, r.transform).ok());
    }
}

TEST(LLL, DeterminantIsPreserved) {
    std::mt19937_64 rng(1);
    auto L = random_lattice(rng, 4, 100);
    auto r = lll_reduce(L);
    auto det = [](const IntegerLattice& l) {
        std::vector<std::vector<Rat>> m(l.dim(), std::vector<Rat>(l.dim()));
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t j = 0; j < l.dim(); ++j) m[i][j] = Rat(l.basis[i][j]);
        return abs(det_int(m));
    };
    EXPECT_EQ(det(L), det(r.reduced));
}

TEST(LLL, FindsShortVectorInKnapsackLattice) {
    // columns (1,0,a), (0,1,b), (0,0,M): short vector (x, y, ax+by mod M)
    IntegerLattice L{{{1, 0, 1000003}, {0, 1, 2000006}, {0, 0, 1000000007}}};
    auto r = lll_reduce(L);
    EXPECT_LE(dot(r.reduced.basis[0], r.reduced.basis[0]), 5);  // (2, -1, 0)
}

TEST(LLL, DetectsBrokenBasis) {
    IntegerLattice L{{{1, 0}, {0, 1}}};
    IntegerLattice bad{{{1, 0}, {0, 2}}};
    std::vector<IntVec> U{{1, 0}, {0, 1}};
    EXPECT_FALSE(verify_lll(L, bad, U).ok());
    IntegerLattice unreduced{{{1, 0}, {5, 1}}};
    EXPECT_FALSE(verify_lll(unreduced, unreduced, U).size_reduced);
}

TEST(LatticeBound, AgreesWithBruteForceDistance) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto L = random_lattice(rng, 2, 30);
        auto r = lll_reduce(L);
        IntVec y{Int(static_cast<long>(rng() % 200)) - 100, Int(static_cast<long>(rng() % 200)) - 100};
        auto lb = lattice_lower_bound(r.reduced, y);
        Int best = -1;
        for (long a = -300; a <= 300; ++a)
            for (long b = -300; b <= 300; ++b) {
                Int dx = a * r.reduced.basis[0][0] + b * r.reduced.basis[1][0] - y[0];
                Int dy = a * r.reduced.basis[0][1] + b * r.reduced.basis[1][1] - y[1];
                Int d = dx * dx + dy * dy;
                if (best < 0 || d < best) best = d;
            }
        if (lb.lattice_point) EXPECT_EQ(best, 0);
        else EXPECT_LE(lb.ell_sq, Rat(best));
    }
}

TEST(Reduction, DerivedParameters) {
    Int K = 13217 * pow10(39), N = 9918312 * pow10(26);
    Int W = ceil_div(K, N);
    long m = derive_m(100, K, W);
    EXPECT_GE(ipow(Int(11), m) * W, 100 * ipow(K, 5));
    EXPECT_LT(ipow(Int(11), m - 1) * W, 100 * ipow(K, 5));
    Int C = derive_C(100, K, W);
    EXPECT_GE(C * W, 100 * ipow(K, 5));
}

TEST(Reduction, ChainStopsWhenNothingImproves) {
    ReductionSchedules s;
    int calls = 0;
    auto chain = iterate_reduction(
        Int(100), Int(50), s,
        [&](const Int& K, const Int& N, const std::vector<PadicScheduleEntry>&) {
            ++calls;
            ReductionStepResult r;
            r.mode = "padic";
            r.K_in = K;
            r.N_in = N;
            r.new_bound = N > 20 ? Int(20) : N;
            r.success = true;
            return r;
        },
        [&](const Int& K, const Int& N, const std::vector<RealScheduleEntry>&) {
            ++calls;
            ReductionStepResult r;
            r.mode = "real";
            r.K_in = K;
            r.N_in = N;
            r.new_bound = K > 30 ? Int(30) : K;
            r.success = true;
            return r;
        });
    EXPECT_TRUE(chain.converged);
    EXPECT_EQ(chain.K, 30);
    EXPECT_EQ(chain.N, 20);
    EXPECT_EQ(calls, 4);
}
