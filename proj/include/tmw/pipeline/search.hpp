#pragma once

#include <algorithm>
#include <cmath>
#include <mutex>
#include <tuple>
#include <vector>

#include "tmw/analysis/prime_analysis.hpp"
#include "tmw/descent/descent.hpp"
#include "tmw/util/parallel.hpp"

namespace tmw {

struct ThueHit {
    Int x, y, c;
    friend bool operator<(const ThueHit& a, const ThueHit& b) { return std::tie(a.c, a.y, a.x) < std::tie(b.c, b.y, b.x); }
    friend bool operator==(const ThueHit& a, const ThueHit& b) { return a.x == b.x && a.y == b.y && a.c == b.c; }
};

namespace search_detail {

using LD = long double;
using LDPoly = std::vector<LD>;  // low-first

// nearest-ish long double, keeping 63 significant bits
inline LD to_ld(const Int& z) {
    long bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
    if (bits <= 62) return static_cast<LD>(z.get_si());
    Int q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), z.get_mpz_t(), bits - 62);
    return std::ldexp(static_cast<LD>(q.get_si()), static_cast<int>(bits - 62));
}

inline LD eval(const LDPoly& p, LD x) {
    LD r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline LDPoly deriv(const LDPoly& p) {
    LDPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<LD>(i));
    return d;
}

inline void trim(LDPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Fujiwara: every root of p - c has modulus at most 2 max |a_i / a_n|^(1/(n-i)).
inline LD root_bound(const LDPoly& p, LD c = 0) {
    std::size_t n = p.size() - 1;
    LD m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        LD a = std::fabs((i == 0 ? p[0] - c : p[i]) / p[n]);
        if (a > 0) m = std::max(m, std::pow(a, 1.0L / static_cast<LD>(n - i)));
    }
    return 2 * m + 1;
}

// Root of p - c in [a, b] given a sign change: Newton steps kept inside the bracket, falling
// back to bisection, until the bracket or the step is below 1/8.
inline LD bisect(const LDPoly& p, LD a, LD b, LD c = 0) {
    LDPoly dp = deriv(p);
    LD fa = eval(p, a) - c;
    LD x = a + (b - a) / 2;
    for (int it = 0; it < 400 && b - a > 0.125L; ++it) {
        LD fx = eval(p, x) - c;
        if (fx == 0) return x;
        if ((fx < 0) == (fa < 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        LD d = eval(dp, x);
        LD xn = d != 0 ? x - fx / d : a + (b - a) / 2;
        if (!(xn > a && xn < b)) xn = a + (b - a) / 2;
        if (std::fabs(xn - x) < 0.125L) return xn;
        x = xn;
    }
    return x;
}

// Approximate real roots of p - c, ascending; `crit` are the approximate critical points of p.
inline std::vector<LD> roots_with(const LDPoly& p, const std::vector<LD>& crit, LD c, LD B) {
    std::vector<LD> pts{-B};
    for (LD x : crit)
        if (x > -B && x < B) pts.push_back(x);
    pts.push_back(B);
    std::vector<LD> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        LD fa = eval(p, pts[i]) - c, fb = eval(p, pts[i + 1]) - c;
        if (fa == 0) out.push_back(pts[i]);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) out.push_back(bisect(p, pts[i], pts[i + 1], c));
    }
    if (eval(p, pts.back()) - c == 0) out.push_back(pts.back());
    return out;
}

inline std::vector<LD> real_roots_ld(const LDPoly& p0) {
    LDPoly p = p0;
    trim(p);
    if (p.size() <= 1) return {};
    if (p.size() == 2) return {-p[0] / p[1]};
    auto crit = real_roots_ld(deriv(p));
    std::sort(crit.begin(), crit.end());
    return roots_with(p, crit, 0, root_bound(p));
}

}  // namespace search_detail

// All (x, y, c) with F(x, y) = c, |y| <= y_bound, c in rhs. F is given by its dehomogenized
// low-first coefficients and must have a nonzero x^n coefficient. Floating-point root
// locations only select candidates; every hit is confirmed in exact arithmetic.
inline std::vector<ThueHit> bounded_thue_search(const IntPoly& f, const std::vector<Int>& rhs, long y_bound, unsigned threads = 1) {
    using namespace search_detail;
    if (y_bound < 0) throw DomainError("y_bound must be non-negative");
    int n = f.degree();
    if (n < 1 || f.coeff(n) == 0) throw DomainError("form must have a nonzero leading coefficient");
    std::vector<LD> cs;
    for (auto& c : rhs) cs.push_back(to_ld(c));
    std::vector<ThueHit> hits;
    std::mutex mu;
    std::size_t ny = static_cast<std::size_t>(2 * y_bound + 1);
    parallel_for(ny, threads, [&](std::size_t iy) {
        long y = static_cast<long>(iy) - y_bound;
        Int Y(y);
        // p(x) = F(x, y) as a polynomial in x
        LDPoly p(n + 1);
        std::vector<Int> pe(n + 1);
        for (int i = 0; i <= n; ++i) {
            pe[i] = f.coeff(i) * ipow(Y, static_cast<unsigned long>(n - i));
            p[i] = to_ld(pe[i]);
        }
        LDPoly scale_p(n + 1);
        for (int i = 0; i <= n; ++i) scale_p[i] = std::fabs(p[i]);
        auto crit = real_roots_ld(deriv(p));
        std::sort(crit.begin(), crit.end());
        LDPoly upper = p;
        upper[0] = 0;
        LD B_upper = root_bound(upper);
        std::vector<ThueHit> local;
        std::vector<long long> cand;
        for (std::size_t ci = 0; ci < rhs.size(); ++ci) {
            LD c = cs[ci];
            LD B = std::max(B_upper, 2 * std::pow(std::fabs((p[0] - c) / p[n]), 1.0L / n) + 1);
            auto r = roots_with(p, crit, c, B);
            r.insert(r.end(), crit.begin(), crit.end());
            cand.clear();
            for (LD x : r) {
                if (!(std::fabs(x) < 9.0e18L)) continue;
                long long x0 = static_cast<long long>(std::floor(x));
                for (long long d = -2; d <= 3; ++d) cand.push_back(x0 + d);
            }
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (long long x : cand) {
                LD xl = static_cast<LD>(x);
                LD v = eval(p, xl) - c;
                LD mag = eval(scale_p, std::fabs(xl)) + std::fabs(c) + 1;
                if (std::fabs(v) > mag * 1e-12L) continue;
                Int X(static_cast<long>(x));
                Int val = 0;
                for (int i = n; i >= 0; --i) val = val * X + pe[i];
                if (val == rhs[ci]) local.push_back({X, Y, rhs[ci]});
            }
        }
        if (!local.empty()) {
            std::lock_guard<std::mutex> lk(mu);
            hits.insert(hits.end(), local.begin(), local.end());
        }
    });
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

struct FinalFamily {
    std::vector<Int> rhs;
    std::vector<std::string> labels;
    std::size_t final_count = 0, intermediate_count = 0;
};

// -2^5 3^4 5^z1 11^z2 with 0 <= z1 <= z1_bound and z2 in {0} u [3, z2_bound], followed by
// the intermediate family z2 in {1, 2}.
inline FinalFamily final_rhs_family(long z1_bound, long z2_bound) {
    FinalFamily F;
    auto add = [&](long z1, long z2) {
        F.rhs.push_back(thue_rhs(z1, z2));
        F.labels.push_back("z1=" + std::to_string(z1) + ",z2=" + std::to_string(z2));
    };
    for (long z1 = 0; z1 <= z1_bound; ++z1) {
        add(z1, 0);
        for (long z2 = 3; z2 <= z2_bound; ++z2) add(z1, z2);
    }
    F.final_count = F.rhs.size();
    for (long z1 = 0; z1 <= z1_bound; ++z1)
        for (long z2 : {1L, 2L}) add(z1, z2);
    F.intermediate_count = F.rhs.size() - F.final_count;
    return F;
}

}  // namespace tmw
