#pragma once

#include <vector>

#include "tmw/bounds/baker.hpp"
#include "tmw/bounds/sunit.hpp"
#include "tmw/util/parallel.hpp"

namespace tmw {

struct UnitHeights {
    FixedReal pi113;
    Int pi113_lc;
    std::array<FixedReal, 4> eps;
    std::array<Int, 4> eps_lc;
};

inline UnitHeights unit_heights(const RealContext& ctx) {
    UnitHeights u;
    auto p = ratio_height(ctx, "pi113");
    u.pi113 = p.h;
    u.pi113_lc = p.minpoly.lc;
    for (int i = 0; i < 4; ++i) {
        auto h = ratio_height(ctx, unit_names()[i]);
        u.eps[i] = h.h;
        u.eps_lc[i] = h.minpoly.lc;
    }
    return u;
}

struct YuRow {
    AlphaChoice alpha;
    FixedReal h_delta1;
    Int lc_delta1;
    YuParameters params;
};

struct YuTable {
    std::vector<YuRow> rows;
    std::size_t argmax = 0;
    FixedReal c10_max;
    FixedReal c13, c14;
};

// c'_10 for every delta_1 of the p-adic instance (i0, j, k) = (5, 1, 3).
inline YuTable yu_table(const RealContext& ctx, const UnitHeights& u, const std::vector<AlphaChoice>& alphas, unsigned threads) {
    YuTable t;
    t.rows.resize(alphas.size());
    Triple model = padic_triple_real_model(ctx.galois());
    parallel_for(alphas.size(), threads, [&](std::size_t i) {
        auto h = delta1_height(ctx, alphas[i], model);
        std::vector<FixedReal> hl{h.h, u.pi113};
        for (auto& e : u.eps) hl.push_back(e);
        YuRow r;
        r.alpha = alphas[i];
        r.h_delta1 = h.h;
        r.lc_delta1 = h.minpoly.lc;
        r.params = yu_parameters(6, 20, 11, 2, 1, hl);
        yu_c10(r.params);
        t.rows[i] = r;
    });
    std::vector<FixedReal> all;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        all.push_back(t.rows[i].params.c10);
        if (t.rows[i].params.c10.center() > t.rows[t.argmax].params.c10.center()) t.argmax = i;
    }
    t.c10_max = t.rows[t.argmax].params.c10;
    std::tie(t.c13, t.c14) = padic_exponent_bound(all);
    return t;
}

struct MatveevRow {
    Triple triple{};  // 1-based
    AlphaChoice alpha;
    MatveevParameters params;
};

struct MatveevTable {
    std::vector<MatveevRow> rows;                 // per (triple, alpha)
    std::vector<std::size_t> argmax_per_triple;   // index into rows
    std::size_t argmax = 0;
    FixedReal c7_max, c8_max;
    // theta cross-ratio heights alone, A sorted ascending
    std::vector<std::pair<FixedReal, FixedReal>> alpha_free;
};

inline MatveevTable matveev_table(const RealContext& ctx, const UnitHeights& u, const std::vector<AlphaChoice>& alphas, unsigned threads,
                                  long log_prec = 60) {
    MatveevTable T;
    const auto& triples = real_triples_one_based();
    T.rows.resize(triples.size() * alphas.size());
    parallel_for(T.rows.size(), threads, [&](std::size_t idx) {
        const Triple& t1 = triples[idx / alphas.size()];
        const AlphaChoice& a = alphas[idx % alphas.size()];
        Triple t = to_zero_based(t1);
        auto hd = delta1_height(ctx, a, t);
        RealLogs L = real_logs(ctx, a, t1, log_prec);
        std::vector<FixedReal> hs{u.pi113}, ls{L.lambda.abs()};
        for (int i = 0; i < 4; ++i) {
            hs.push_back(u.eps[i]);
            ls.push_back(L.mu[i].abs());
        }
        hs.push_back(hd.h);
        ls.push_back(L.rho.abs());
        MatveevRow r;
        r.triple = t1;
        r.alpha = a;
        r.params = matveev_parameters(hs, ls, 20, true);
        matveev_c7_c8(r.params);
        T.rows[idx] = r;
    });
    T.argmax_per_triple.assign(triples.size(), 0);
    for (std::size_t ti = 0; ti < triples.size(); ++ti) {
        std::size_t best = ti * alphas.size();
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            std::size_t idx = ti * alphas.size() + a;
            if (T.rows[idx].params.c7.center() > T.rows[best].params.c7.center()) best = idx;
        }
        T.argmax_per_triple[ti] = best;
    }
    // c8 is reported for the row attaining the largest c7
    std::size_t top = 0;
    for (std::size_t i = 0; i < T.rows.size(); ++i)
        if (T.rows[i].params.c7.center() > T.rows[top].params.c7.center()) top = i;
    T.argmax = top;
    T.c7_max = T.rows[top].params.c7;
    T.c8_max = T.rows[top].params.c8;
    for (auto& t1 : triples) {
        Triple t = to_zero_based(t1);
        auto hd = theta_ratio_height(ctx, t);
        auto th = ctx.roots(log_prec);
        FixedReal lth = real_log(((th[t[0]] - th[t[1]]) / (th[t[0]] - th[t[2]])).abs(), log_prec).abs();
        RealLogs L = real_logs(ctx, AlphaChoice{0, 0}, t1, log_prec);
        std::vector<FixedReal> hs{hd.h, u.pi113}, ls{lth, L.lambda.abs()};
        for (int i = 0; i < 4; ++i) {
            hs.push_back(u.eps[i]);
            ls.push_back(L.mu[i].abs());
        }
        MatveevParameters m = matveev_parameters(hs, ls, 20, true);
        std::sort(m.A.begin(), m.A.end(), [](const FixedReal& a, const FixedReal& b) { return a.center() < b.center(); });
        T.alpha_free.push_back(matveev_c7_c8(m));
    }
    return T;
}

}  // namespace tmw
