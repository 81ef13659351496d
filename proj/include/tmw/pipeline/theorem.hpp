#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "tmw/descent/descent.hpp"

namespace tmw {

struct TheoremTuple {
    long n, a, b;
    Int x, y;
    std::string str() const {
        return "n=" + std::to_string(n) + " (a,b,x,y)=(" + std::to_string(a) + "," + std::to_string(b) + "," + to_dec(x) + "," + to_dec(y) + ")";
    }
    friend bool operator==(const TheoremTuple& p, const TheoremTuple& q) {
        return p.n == q.n && p.a == q.a && p.b == q.b && p.x == q.x && p.y == q.y;
    }
};

inline const std::vector<TheoremTuple>& listed_solutions() {
    static const std::vector<TheoremTuple> s{
        {3, 0, 1, 4, 3},     {3, 0, 1, 58, 15},   {3, 0, 2, 2, 5},         {3, 0, 3, 9324, 443}, {3, 1, 1, 3, 4},
        {3, 1, 1, 419, 56},  {3, 2, 3, 968, 99},  {3, 3, 1, 37, 14},       {3, 5, 5, 36599, 1226},
        {6, 1, 1, 3, 2},
    };
    return s;
}

struct TheoremCheckRow {
    TheoremTuple tuple;
    bool ok = false;
    std::string detail;
};

struct TheoremVerification {
    std::vector<TheoremCheckRow> listed;
    std::vector<TheoremTuple> window_hits;   // everything found in the window
    std::vector<TheoremTuple> unlisted;      // window hits not in the list
    std::vector<long> exponents{3, 4, 6};
    long y_max = 1300, ab_max = 6;
    bool all_listed_ok() const {
        return std::all_of(listed.begin(), listed.end(), [](const TheoremCheckRow& r) { return r.ok; });
    }
    bool ok() const { return all_listed_ok() && unlisted.empty(); }
};

// Checks each listed tuple, then scans x^2 + 5^a 11^b = y^n over the window.
inline TheoremVerification verify_theorem(long y_max = 1300, long ab_max = 6, std::vector<long> exponents = {3, 4, 6}) {
    TheoremVerification v;
    v.y_max = y_max;
    v.ab_max = ab_max;
    v.exponents = exponents;
    for (auto& t : listed_solutions()) {
        auto c = verify_solution(t.n, t.a, t.b, t.x, t.y);
        v.listed.push_back({t, c.ok, c.reason});
    }
    std::vector<Int> p5(ab_max + 1), p11(ab_max + 1);
    for (long i = 0; i <= ab_max; ++i) {
        p5[i] = ipow(Int(5), static_cast<unsigned long>(i));
        p11[i] = ipow(Int(11), static_cast<unsigned long>(i));
    }
    for (long n : exponents)
        for (long y = 1; y <= y_max; ++y) {
            Int yn = ipow(Int(y), static_cast<unsigned long>(n));
            for (long a = 0; a <= ab_max; ++a)
                for (long b = 0; b <= ab_max; ++b) {
                    Int x2 = yn - p5[a] * p11[b];
                    if (x2 < 1 || !is_square(x2)) continue;
                    Int x = isqrt(x2);
                    if (gcd(x, Int(y)) != 1) continue;
                    TheoremTuple t{n, a, b, x, Int(y)};
                    v.window_hits.push_back(t);
                    if (std::find(listed_solutions().begin(), listed_solutions().end(), t) == listed_solutions().end())
                        v.unlisted.push_back(t);
                }
        }
    return v;
}

}  // namespace tmw
