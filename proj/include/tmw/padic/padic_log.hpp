#pragma once

#include <cmath>

#include "tmw/padic/quad_ext.hpp"

namespace tmw {

inline PadicScalar with_prec(const PadicScalar& x, long n) { return x.with_absprec(n); }
inline QuadExtElement with_prec(const QuadExtElement& x, long n) { return x.with_absprec(n); }

namespace detail {

inline Rat ord_of(const PadicScalar& x) {
    if (x.is_zero()) throw PrecisionError("element indistinguishable from zero");
    return Rat(x.valuation());
}
inline Rat ord_lb(const PadicScalar& x) { return Rat(x.valuation()); }
inline Rat ord_of(const QuadExtElement& x) { return x.ord(); }
inline Rat ord_lb(const QuadExtElement& x) { return x.ord_lower_bound(); }

inline PadicScalar one_like(const PadicScalar& x, long n) { return PadicScalar::from_int(1, x.prime(), n); }
inline QuadExtElement one_like(const QuadExtElement& x, long n) { return QuadExtElement::from_rat(x.ext(), 1, n); }

inline PadicScalar scale(const PadicScalar& x, const Rat& q, long n) { return x * PadicScalar::from_rat(q, x.prime(), n); }
inline QuadExtElement scale(const QuadExtElement& x, const Rat& q, long n) {
    return x * PadicScalar::from_rat(q, x.ext()->prime(), n);
}

inline unsigned long prime_of(const PadicScalar& x) { return x.prime(); }
inline unsigned long prime_of(const QuadExtElement& x) { return x.ext()->prime(); }
inline int residue_degree(const PadicScalar&) { return 1; }
inline int residue_degree(const QuadExtElement& x) { return x.ext()->f(); }

template <class E>
E power(const E& x, unsigned long n, long prec) {
    E r = one_like(x, prec), b = x;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

}  // namespace detail

// p-adic logarithm of a unit: v = u^(q-1), further p-th powers until
// ord(v - 1) > 1/(p-1), the series for log(1 + x), then division by the exponent.
template <class E>
E padic_log(const E& u, long target) {
    using namespace detail;
    if (ord_of(u) != 0) throw DomainError("padic_log needs a unit (ord 0)");
    unsigned long p = prime_of(u);
    long guard = 12;
    long W = target + guard;
    unsigned long q = 1;
    for (int i = 0; i < residue_degree(u); ++i) q *= p;
    E v = power(u, q - 1, W);
    Int exponent(static_cast<long>(q - 1));
    Rat thresh = make_rat(1, Int(static_cast<long>(p - 1)));
    E x = v - one_like(v, W);
    while (!(ord_lb(x) > thresh)) {
        v = power(v, p, W);
        exponent *= Int(static_cast<long>(p));
        x = v - one_like(v, W);
    }
    Rat ox = ord_lb(x);
    if (ox >= W) return scale(x, 0, target);
    // terms x^k / k have ord >= k ox - log_p k; stop once that exceeds W for good
    double oxd = ox.get_d();
    double lp = std::log(static_cast<double>(p));
    long kmax = 1;
    while (true) {
        bool done = true;
        for (long k = kmax; k < kmax + 64; ++k)
            if (k * oxd - std::log(static_cast<double>(k)) / lp <= W + 1) done = false;
        if (done) break;
        kmax += 64;
    }
    long extra = static_cast<long>(std::log(static_cast<double>(kmax)) / lp) + 2;
    long Wx = W + extra;
    E s = scale(x, 0, Wx);
    E xp = one_like(x, Wx);
    for (long k = 1; k < kmax; ++k) {
        xp = xp * x;
        Rat c = make_rat(Int((k % 2) ? 1 : -1), Int(k));
        s = s + scale(xp, c, Wx);
    }
    E r = scale(s, make_rat(1, exponent), Wx);
    return with_prec(r, target);
}


}  // namespace tmw
