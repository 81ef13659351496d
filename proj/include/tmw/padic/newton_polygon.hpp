#pragma once

#include <vector>

#include "tmw/numeric/polynomial.hpp"

namespace tmw {

struct NewtonSegment {
    Rat slope;
    long length;
};

// Lower convex hull of (i, ord_p(c_i)), segments by increasing slope.
inline std::vector<NewtonSegment> newton_polygon(const IntPoly& f, unsigned long p) {
    if (f.is_zero()) throw DomainError("newton polygon of the zero polynomial");
    if (f.coeff(0) == 0) throw DomainError("newton polygon needs a nonzero constant term");
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= f.degree(); ++i)
        if (f.coeff(i) != 0) pts.emplace_back(i, vp(f.coeff(i), p));
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b if it lies on or above segment a -> pt
            long cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long dx = hull[i].first - hull[i - 1].first;
        long dy = hull[i].second - hull[i - 1].second;
        out.push_back({make_rat(Int(dy), Int(dx)), dx});
    }
    return out;
}

}  // namespace tmw
