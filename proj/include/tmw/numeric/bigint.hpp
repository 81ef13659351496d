#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmw {

using Int = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive denominator
// after every operation, which is exactly the BigRational invariant.
using Rat = mpq_class;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int ipow(unsigned long b, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

inline Int pow10(long e) {
    if (e < 0) throw DomainError("pow10: negative exponent");
    return ipow(10ul, static_cast<unsigned long>(e));
}

inline Int parse_int(const std::string& s) {
    Int r;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || r.set_str(t, 10) != 0) throw DomainError("not a decimal integer: '" + s + "'");
    return r;
}

inline std::string to_dec(const Int& x) { return x.get_str(10); }

inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw DomainError("zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat parse_rat(const std::string& num, const std::string& den) {
    return make_rat(parse_int(num), parse_int(den));
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

// Nearest integer, ties away from zero.
inline Int round_nearest(const Rat& q) {
    Rat h = q + Rat(1, 2);
    if (q >= 0) return floor(h);
    return -floor(Rat(-q) + Rat(1, 2));
}

inline Int round_div(const Int& a, const Int& b) { return round_nearest(make_rat(a, b)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Distance to the nearest integer.
inline Rat dist_to_int(const Rat& q) {
    Rat f = q - Rat(floor(q));
    Rat g = Rat(1) - f;
    return f < g ? f : g;
}

inline Int isqrt(const Int& a) {
    if (a < 0) throw DomainError("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) {
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// p-adic valuation of a nonzero integer.
inline long vp(const Int& x, unsigned long p) {
    if (x == 0) throw DomainError("valuation of zero");
    Int t = x;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t()));
}

inline long vp(const Rat& x, unsigned long p) {
    if (x == 0) throw DomainError("valuation of zero");
    return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

inline Int strip(const Int& x, unsigned long p) {
    Int t;
    mpz_remove(t.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t());
    return t;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("not invertible modulo " + to_dec(m));
    return r;
}

// Number of decimal digits of |x| (1 for zero).
inline long dec_digits(const Int& x) {
    if (x == 0) return 1;
    return static_cast<long>(abs(x).get_str(10).size());
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned long> primes_upto(unsigned long n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return to_dec(q.get_num());
    return to_dec(q.get_num()) + "/" + to_dec(q.get_den());
}

}  // namespace tmw
