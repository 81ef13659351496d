#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "tmw/numeric/bigint.hpp"

namespace tmw {

// value = mantissa * 10^-P, true value within err * 10^-P of it.
// Slack per operation: add/sub 0 ulps beyond the inputs, mul and div 1 ulp
// for rounding plus the propagated input error, elementary functions 2 ulps.
class FixedReal {
public:
    FixedReal() = default;
    FixedReal(Int mantissa, long prec, Int err = 0) : m_(std::move(mantissa)), err_(std::move(err)), prec_(prec) {}

    static FixedReal from_int(const Int& v, long prec) { return FixedReal(v * pow10(prec), prec, 0); }

    static FixedReal from_rational(const Rat& q, long prec) {
        Int num = q.get_num() * pow10(prec);
        Int den = q.get_den();
        Int r = round_div(num, den);
        return FixedReal(r, prec, (r * den == num) ? Int(0) : Int(1));
    }

    // Parses "-12.345", "1.3217e43"; exact decimal input is exact if it fits.
    static FixedReal from_string(const std::string& s, long prec) {
        std::string t = s;
        long exp10 = 0;
        auto epos = t.find_first_of("eE");
        if (epos != std::string::npos) {
            exp10 = std::stol(t.substr(epos + 1));
            t = t.substr(0, epos);
        }
        bool neg = false;
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
            neg = t[0] == '-';
            t.erase(0, 1);
        }
        auto dot = t.find('.');
        std::string digits = t;
        long frac = 0;
        if (dot != std::string::npos) {
            digits = t.substr(0, dot) + t.substr(dot + 1);
            frac = static_cast<long>(t.size() - dot - 1);
        }
        if (digits.empty()) throw DomainError("bad decimal: " + s);
        Int n = parse_int(digits);
        if (neg) n = -n;
        long shift = exp10 - frac;
        Rat q = shift >= 0 ? Rat(n * pow10(shift)) : make_rat(n, pow10(-shift));
        return from_rational(q, prec);
    }

    long precision() const { return prec_; }
    const Int& mantissa() const { return m_; }
    const Int& error_ulps() const { return err_; }

    Rat center() const { return make_rat(m_, pow10(prec_)); }
    Rat lower() const { return make_rat(m_ - err_, pow10(prec_)); }
    Rat upper() const { return make_rat(m_ + err_, pow10(prec_)); }
    Rat radius() const { return make_rat(err_, pow10(prec_)); }

    bool certainly_positive() const { return m_ - err_ > 0; }
    bool certainly_negative() const { return m_ + err_ < 0; }
    // +1 / -1 when certified, 0 when the interval contains zero.
    int sign() const { return certainly_positive() ? 1 : (certainly_negative() ? -1 : 0); }

    FixedReal with_precision(long p) const {
        if (p == prec_) return *this;
        if (p > prec_) {
            Int s = pow10(p - prec_);
            return FixedReal(m_ * s, p, err_ * s);
        }
        Int s = pow10(prec_ - p);
        Int r = round_div(m_, s);
        Int e = ceil_div(err_, s) + ((r * s == m_) ? 0 : 1);
        return FixedReal(r, p, e);
    }

    FixedReal operator-() const { return FixedReal(-m_, prec_, err_); }

    friend FixedReal operator+(const FixedReal& a, const FixedReal& b) {
        long p = std::min(a.prec_, b.prec_);
        FixedReal x = a.with_precision(p), y = b.with_precision(p);
        return FixedReal(x.m_ + y.m_, p, x.err_ + y.err_);
    }
    friend FixedReal operator-(const FixedReal& a, const FixedReal& b) { return a + (-b); }

    friend FixedReal operator*(const FixedReal& a, const FixedReal& b) {
        long p = std::min(a.prec_, b.prec_);
        FixedReal x = a.with_precision(p), y = b.with_precision(p);
        Int s = pow10(p);
        Int prod = x.m_ * y.m_;
        Int r = round_div(prod, s);
        // |xy - x'y'| <= |x|ey + |y|ex + ex ey
        Int e = tmw::abs(x.m_) * y.err_ + tmw::abs(y.m_) * x.err_ + x.err_ * y.err_;
        Int eu = ceil_div(e, s) + 1;
        return FixedReal(r, p, eu);
    }

    friend FixedReal operator/(const FixedReal& a, const FixedReal& b) {
        long p = std::min(a.prec_, b.prec_);
        FixedReal x = a.with_precision(p), y = b.with_precision(p);
        Int dlo = tmw::abs(y.m_) - y.err_;
        if (dlo <= 0) throw PrecisionError("division by a value not separated from zero");
        Int s = pow10(p);
        Int r = round_div(x.m_ * s, y.m_);
        // |x/y - x'/y'| <= (ex |y| + |x| ey) / (|y| (|y| - ey))
        Int num = (x.err_ * tmw::abs(y.m_) + tmw::abs(x.m_) * y.err_) * s;
        Int den = tmw::abs(y.m_) * dlo;
        Int eu = ceil_div(num, den) + 1;
        return FixedReal(r, p, eu);
    }

    FixedReal& operator+=(const FixedReal& o) { return *this = *this + o; }
    FixedReal& operator-=(const FixedReal& o) { return *this = *this - o; }
    FixedReal& operator*=(const FixedReal& o) { return *this = *this * o; }
    FixedReal& operator/=(const FixedReal& o) { return *this = *this / o; }

    friend FixedReal operator*(const FixedReal& a, long k) { return FixedReal(a.m_ * k, a.prec_, a.err_ * std::abs(k)); }
    friend FixedReal operator/(const FixedReal& a, long k) {
        if (k == 0) throw DomainError("division by zero");
        Int r = round_div(a.m_, Int(k));
        return FixedReal(r, a.prec_, ceil_div(a.err_, Int(std::abs(k))) + 1);
    }

    FixedReal abs() const { return m_ < 0 ? -*this : *this; }

    // Certified floor: throws when the interval straddles an integer.
    Int certified_floor() const {
        Int lo = tmw::floor(lower()), hi = tmw::floor(upper());
        if (lo != hi) throw PrecisionError("floor not determined at current precision");
        return lo;
    }

    double to_double() const { return center().get_d(); }

    // Fixed notation with `digits` fractional digits (truncated toward zero).
    std::string to_fixed(int digits) const {
        FixedReal r = with_precision(digits);
        std::string s = tmw::abs(r.m_).get_str(10);
        if (static_cast<int>(s.size()) <= digits) s = std::string(digits - s.size() + 1, '0') + s;
        std::string out = (r.m_ < 0 ? "-" : "") + s.substr(0, s.size() - digits);
        if (digits > 0) out += "." + s.substr(s.size() - digits);
        return out;
    }

    // Scientific notation with `sig` significant digits.
    std::string to_sci(int sig) const {
        if (m_ == 0) return "0";
        std::string s = tmw::abs(m_).get_str(10);
        long e = static_cast<long>(s.size()) - 1 - prec_;
        Int lead = round_div(tmw::abs(m_), pow10(std::max<long>(0, static_cast<long>(s.size()) - sig)));
        std::string d = lead.get_str(10);
        if (static_cast<int>(d.size()) > sig) {
            d = d.substr(0, sig);
            ++e;
        }
        std::string out = (m_ < 0 ? "-" : "") + d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        return out + "e" + std::to_string(e);
    }

private:
    Int m_ = 0;
    Int err_ = 0;
    long prec_ = 0;
};

namespace detail {

// atanh(1/k) * 10^W truncated, error <= terms ulps.
inline Int atanh_inv_scaled(long k, long W) {
    Int S = pow10(W);
    Int k2 = Int(k) * k;
    Int pw = S / k;  // (1/k)^(2j+1) scaled
    Int sum = 0;
    for (long j = 0; pw != 0; ++j) {
        sum += pw / (2 * j + 1);
        pw /= k2;
    }
    return sum;
}

inline Int ln2_scaled(long W) { return 2 * atanh_inv_scaled(3, W); }

}  // namespace detail

inline FixedReal ln2(long prec) {
    long W = prec + 10;
    Int v = detail::ln2_scaled(W);
    return FixedReal(v, W, Int(W)).with_precision(prec);
}

// ln x with |result - ln x| < 10^-prec when x carries enough precision.
inline FixedReal real_log(const FixedReal& x, long prec) {
    if (!x.certainly_positive()) throw DomainError("real_log: non-positive input");
    long W = prec + 12;
    Rat c = x.center();
    // c = 2^k * y with y in [1, 2)
    long k = static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    Rat y = c;
    if (k >= 0) y /= Rat(ipow(Int(2), k));
    else y *= Rat(ipow(Int(2), -k));
    while (y >= 2) { y /= 2; ++k; }
    while (y < 1) { y *= 2; --k; }
    Int S = pow10(W);
    Rat zq = (y - 1) / (y + 1);
    Int z = round_nearest(zq * Rat(S));
    Int z2 = z * z / S;
    Int pw = z, sum = 0;
    long terms = 0;
    for (long j = 0; pw != 0; ++j, ++terms) {
        sum += pw / (2 * j + 1);
        pw = pw * z2 / S;
    }
    Int lny = 2 * sum;
    Int lnc = lny + Int(k) * detail::ln2_scaled(W);
    Int werr = 4 * (terms + 2) + std::labs(k) * (W + 2) * 2 + 4;
    FixedReal r(lnc, W, werr);
    // propagate the input radius: |ln(c+d) - ln c| <= d / (c - d)
    FixedReal out = r.with_precision(prec);
    if (x.error_ulps() != 0) {
        Rat prop = x.radius() / x.lower();
        Int pe = ceil(prop * Rat(pow10(prec))) + 1;
        out = FixedReal(out.mantissa(), prec, out.error_ulps() + pe);
    }
    return out;
}

inline FixedReal log(const FixedReal& x) { return real_log(x, x.precision()); }

inline FixedReal sqrt(const FixedReal& x) {
    if (x.certainly_negative()) throw DomainError("sqrt of negative");
    long p = x.precision();
    Int a = x.mantissa() < 0 ? Int(0) : x.mantissa();
    Int r = isqrt(a * pow10(p));
    // input error: |sqrt(c+d)-sqrt(c)| <= sqrt(d) always, d/(2 sqrt(c-d)) when c > d
    Int e = 1;
    if (x.error_ulps() != 0) {
        Int lo = a - x.error_ulps();
        if (lo > 0) {
            Int slo = isqrt(lo * pow10(p));
            e += ceil_div(x.error_ulps() * pow10(p), 2 * std::max(slo, Int(1))) + 1;
        } else {
            e += isqrt(x.error_ulps() * pow10(p)) + 1;
        }
    }
    return FixedReal(r, p, e);
}

inline FixedReal exp(const FixedReal& x) {
    long p = x.precision();
    double xd = x.to_double();
    long mag = static_cast<long>(std::max(0.0, xd / 2.302585)) + 2;
    long s = 8;
    long W = p + mag + s + 15;
    Int S = pow10(W);
    FixedReal xw = x.with_precision(W);
    Int r = round_div(xw.mantissa(), Int(1) << s);
    Int term = S, sum = S;
    long terms = 0;
    for (long n = 1; term != 0; ++n, ++terms) {
        term = term * r / S / n;
        sum += term;
    }
    Int errw = terms + 4;
    for (long i = 0; i < s; ++i) {
        errw = 2 * errw * (abs(sum) / S + 1) + 2;
        sum = sum * sum / S;
    }
    FixedReal res(sum, W, errw);
    if (x.error_ulps() != 0) {
        // exp(c+d) - exp(c) <= exp(c) (e^d - 1) <= exp(c) * 2d for d < 1
        Rat prop = Rat(2) * res.upper() * x.radius();
        res = FixedReal(res.mantissa(), W, res.error_ulps() + ceil(prop * Rat(S)) + 1);
    }
    return res.with_precision(p);
}

inline FixedReal e_const(long prec) { return exp(FixedReal::from_int(1, prec + 5)).with_precision(prec); }

inline FixedReal pow_int(const FixedReal& x, long n) {
    FixedReal r = FixedReal::from_int(1, x.precision());
    FixedReal b = x;
    bool neg = n < 0;
    unsigned long k = static_cast<unsigned long>(neg ? -n : n);
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return neg ? FixedReal::from_int(1, x.precision()) / r : r;
}

inline FixedReal max(const FixedReal& a, const FixedReal& b) { return a.center() >= b.center() ? a : b; }
inline FixedReal min(const FixedReal& a, const FixedReal& b) { return a.center() <= b.center() ? a : b; }

}  // namespace tmw
