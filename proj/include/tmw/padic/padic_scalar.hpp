#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "tmw/numeric/bigint.hpp"

namespace tmw {

// p^val * unit + O(p^absprec). The tracked zero has no valuation, only absprec.
class PadicScalar {
public:
    PadicScalar() = default;

    static PadicScalar zero(unsigned long p, long absprec) {
        PadicScalar z;
        z.p_ = p;
        z.zero_ = true;
        z.abs_ = absprec;
        return z;
    }

    static PadicScalar from_rat(const Rat& q, unsigned long p, long absprec) {
        if (q == 0) return zero(p, absprec);
        long v = vp(q, p);
        if (v >= absprec) return zero(p, absprec);
        Int num = strip(Int(q.get_num()), p), den = strip(Int(q.get_den()), p);
        PadicScalar r;
        r.p_ = p;
        r.zero_ = false;
        r.val_ = v;
        r.abs_ = absprec;
        Int M = ipow(Int(p), absprec - v);
        r.unit_ = mod(num * invmod(den, M), M);
        return r;
    }

    static PadicScalar from_int(const Int& x, unsigned long p, long absprec) { return from_rat(Rat(x), p, absprec); }

    unsigned long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long absprec() const { return abs_; }
    long relprec() const { return zero_ ? 0 : abs_ - val_; }
    const Int& unit() const { return unit_; }

    // Valuation; the tracked zero reports its absolute precision.
    long valuation() const { return zero_ ? abs_ : val_; }

    // Exact rational representative unit * p^val.
    Rat to_rat() const {
        if (zero_) return Rat(0);
        if (val_ >= 0) return Rat(unit_ * ipow(Int(p_), val_));
        return make_rat(unit_, ipow(Int(p_), -val_));
    }

    // Integer representative in [0, p^k) for an element of nonnegative valuation.
    Int residue(long k) const {
        Int M = ipow(Int(p_), k);
        if (zero_) return 0;
        if (val_ < 0) throw DomainError("residue of a non-integral p-adic number");
        return mod(unit_ * ipow(Int(p_), val_), M);
    }

    PadicScalar with_absprec(long n) const {
        if (n >= abs_) return *this;
        if (zero_) return zero(p_, n);
        if (val_ >= n) return zero(p_, n);
        PadicScalar r = *this;
        r.abs_ = n;
        r.unit_ = mod(unit_, ipow(Int(p_), n - val_));
        return r;
    }

    PadicScalar operator-() const {
        if (zero_) return *this;
        PadicScalar r = *this;
        r.unit_ = mod(-unit_, ipow(Int(p_), abs_ - val_));
        return r;
    }

    friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
        check_same(a, b);
        long n = std::min(a.abs_, b.abs_);
        if (a.zero_) return b.with_absprec(n);
        if (b.zero_) return a.with_absprec(n);
        long v = std::min(a.val_, b.val_);
        if (v >= n) return zero(a.p_, n);
        Int P(a.p_);
        Int s = a.unit_ * ipow(P, a.val_ - v) + b.unit_ * ipow(P, b.val_ - v);
        return normalize(a.p_, s, v, n);
    }
    friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

    friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
        check_same(a, b);
        if (a.zero_ && b.zero_) return zero(a.p_, a.abs_ + b.abs_);
        if (a.zero_) return zero(a.p_, a.abs_ + b.val_);
        if (b.zero_) return zero(a.p_, b.abs_ + a.val_);
        long rel = std::min(a.relprec(), b.relprec());
        PadicScalar r;
        r.p_ = a.p_;
        r.zero_ = false;
        r.val_ = a.val_ + b.val_;
        r.abs_ = r.val_ + rel;
        r.unit_ = mod(a.unit_ * b.unit_, ipow(Int(a.p_), rel));
        return r;
    }

    PadicScalar inverse() const {
        if (zero_) throw PrecisionError("inverse of a p-adic number indistinguishable from zero");
        PadicScalar r = *this;
        long rel = relprec();
        r.val_ = -val_;
        r.abs_ = r.val_ + rel;
        r.unit_ = invmod(unit_, ipow(Int(p_), rel));
        return r;
    }

    friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) { return a * b.inverse(); }

    PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
    PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
    PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }

    // Equality up to the smaller absolute precision.
    bool congruent(const PadicScalar& o) const { return (*this - o).is_zero(); }

    // "a0 + a1*p + ... + O(p^N)" for integral elements.
    std::string digits(long n) const {
        Int r = residue(n);
        std::string s;
        Int P(p_);
        for (long i = 0; i < n; ++i) {
            Int d = r % P;
            r /= P;
            if (!s.empty()) s += " + ";
            s += to_dec(d);
            if (i == 1) s += "*" + std::to_string(p_);
            else if (i > 1) s += "*" + std::to_string(p_) + "^" + std::to_string(i);
        }
        return s + " + O(" + std::to_string(p_) + "^" + std::to_string(n) + ")";
    }

    std::vector<long> digit_vector(long n) const {
        Int r = residue(n);
        std::vector<long> out;
        for (long i = 0; i < n; ++i) {
            out.push_back(static_cast<long>(Int(r % Int(p_)).get_si()));
            r /= Int(p_);
        }
        return out;
    }

private:
    static void check_same(const PadicScalar& a, const PadicScalar& b) {
        if (a.p_ != b.p_) throw DomainError("p-adic operands over different primes");
    }

    // s * p^v with absolute precision n.
    static PadicScalar normalize(unsigned long p, const Int& s, long v, long n) {
        if (s == 0) return zero(p, n);
        long extra = vp(s, p);
        if (v + extra >= n) return zero(p, n);
        PadicScalar r;
        r.p_ = p;
        r.zero_ = false;
        r.val_ = v + extra;
        r.abs_ = n;
        r.unit_ = mod(strip(s, p), ipow(Int(p), n - r.val_));
        return r;
    }

    unsigned long p_ = 2;
    bool zero_ = true;
    long val_ = 0;
    long abs_ = 0;
    Int unit_ = 0;
};

}  // namespace tmw
