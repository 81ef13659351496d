#pragma once

#include <functional>
#include <vector>

#include "tmw/numeric/rational_reconstruct.hpp"

namespace tmw {

// (1/degree) (log|lc| + sum log max(1, |conj|)), rounded up by the error radius.
inline FixedReal log_height(const std::vector<FixedReal>& conjugates, const Int& leading_coefficient, int degree) {
    if (degree < 1 || static_cast<int>(conjugates.size()) != degree)
        throw DomainError("log_height needs all " + std::to_string(degree) + " conjugates, got " + std::to_string(conjugates.size()));
    if (leading_coefficient == 0) throw DomainError("log_height: zero leading coefficient");
    long prec = conjugates.front().precision();
    FixedReal s = real_log(FixedReal::from_int(abs(leading_coefficient), prec), prec);
    FixedReal one = FixedReal::from_int(1, prec);
    for (auto& c : conjugates) {
        FixedReal a = c.abs();
        if (a.upper() > 1) s = s + real_log(max(a, one), prec);
    }
    s = s / degree;
    return FixedReal(s.mantissa() + s.error_ulps(), s.precision(), s.error_ulps());
}

// prod (x - c_i), low-first.
inline std::vector<FixedReal> charpoly_from_conjugates(const std::vector<FixedReal>& conj) {
    long prec = conj.front().precision();
    std::vector<FixedReal> poly{FixedReal::from_int(1, prec)};
    for (auto& c : conj) {
        std::vector<FixedReal> next(poly.size() + 1, FixedReal::from_int(0, prec));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * c;
        }
        poly = std::move(next);
    }
    return poly;
}

struct MinPolyResult {
    std::vector<Rat> monic;  // low-first, leading 1
    Int lc;                  // lcm of the denominators
    long precision = 0;      // working precision of the accepted run
    long denominator_digits = 0;
};

struct HeightResult {
    FixedReal h;
    MinPolyResult minpoly;
};

namespace detail {

inline long log10_radius(const FixedReal& x) {
    if (x.error_ulps() == 0) return -x.precision();
    return dec_digits(x.error_ulps()) - x.precision();
}

inline void require_distinct(const std::vector<FixedReal>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if ((c[i] - c[j]).sign() == 0) throw PrecisionError("conjugates are not separated; degree may be smaller than expected");
}

inline std::optional<MinPolyResult> reconstruct_at(const std::vector<FixedReal>& conj, long den_digits) {
    auto cp = charpoly_from_conjugates(conj);
    MinPolyResult r;
    r.lc = 1;
    r.denominator_digits = den_digits;
    r.precision = conj.front().precision();
    Int bound = pow10(den_digits);
    for (auto& c : cp) {
        if (log10_radius(c) > -(2 * den_digits + 4)) return std::nullopt;
        auto q = rational_reconstruct(c, bound);
        if (!q) return std::nullopt;
        r.monic.push_back(*q);
        r.lc = lcm(r.lc, q->get_den());
    }
    if (r.monic.back() != 1) return std::nullopt;
    return r;
}

}  // namespace detail

// The degree-n polynomial with the given conjugates as roots, coefficients recovered by
// rational reconstruction. Each accepted result is confirmed by a second run at a higher
// precision with a larger denominator bound, which must reproduce it exactly.
inline MinPolyResult minimal_polynomial(const std::function<std::vector<FixedReal>(long)>& conjugates, long start_precision = 120,
                                        long den_digits = 30, int max_rounds = 8) {
    long P = start_precision;
    long D = den_digits;
    for (int round = 0; round < max_rounds; ++round) {
        auto conj = conjugates(P);
        detail::require_distinct(conj);
        auto cp = charpoly_from_conjugates(conj);
        long worst = -P;
        for (auto& c : cp) worst = std::max(worst, detail::log10_radius(c));
        long need = 2 * D + 4;
        if (worst > -need) {
            P += worst + need + 20;
            continue;
        }
        auto first = detail::reconstruct_at(conj, D);
        if (!first) {
            D += 20;
            P += 60;
            continue;
        }
        long P2 = P + 60, D2 = D + 20;
        auto conj2 = conjugates(P2);
        auto second = detail::reconstruct_at(conj2, D2);
        if (second && second->monic == first->monic) {
            first->precision = P;
            return *first;
        }
        D += 20;
        P += 80;
    }
    throw PrecisionError("minimal polynomial reconstruction did not stabilise");
}

inline HeightResult height_from_conjugates(const std::function<std::vector<FixedReal>(long)>& conjugates, long out_precision = 40,
                                           long start_precision = 120) {
    HeightResult r;
    r.minpoly = minimal_polynomial(conjugates, start_precision);
    auto conj = conjugates(std::max(out_precision + 20, r.minpoly.precision));
    std::vector<FixedReal> c;
    for (auto& x : conj) c.push_back(x);
    r.h = log_height(c, r.minpoly.lc, static_cast<int>(c.size())).with_precision(out_precision + 10);
    return r;
}

}  // namespace tmw
