#pragma once

#include <optional>

#include "tmw/numeric/fixed_real.hpp"

namespace tmw {

// Smallest-denominator continued-fraction convergent p/q of x with q <= bound
// lying within (err + 2) ulps of the mantissa.
inline std::optional<Rat> rational_reconstruct(const FixedReal& x, const Int& denominator_bound) {
    if (denominator_bound < 1) throw DomainError("denominator bound must be >= 1");
    Rat c = x.center();
    Rat tol = make_rat(x.error_ulps() + 2, pow10(x.precision()));
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    Int num = c.get_num(), den = c.get_den();
    while (den != 0) {
        Int a = floor_div(num, den);
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > denominator_bound) break;
        Rat cand = make_rat(h2, k2);
        if (abs(c - cand) < tol) return cand;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Int r = num - a * den;
        num = den;
        den = r;
    }
    return std::nullopt;
}

}  // namespace tmw
