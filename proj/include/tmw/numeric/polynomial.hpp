#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmw/numeric/bigint.hpp"

namespace tmw {

// Coefficients lowest degree first; zero polynomial has no coefficients.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }

    static Poly monomial(const T& a, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U r = U(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + U(c_[i]);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(unsigned n) const {
        Poly r({T(1)}), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    // p(x + a)
    Poly taylor_shift(const T& a) const {
        std::vector<T> c = c_;
        std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
        return Poly(std::move(c));
    }

    // p(a x)
    Poly scale_arg(const T& a) const {
        std::vector<T> c = c_;
        T pw = T(1);
        for (auto& x : c) {
            x *= pw;
            pw *= a;
        }
        return Poly(std::move(c));
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            std::string cs = c_[i].get_str();
            if (!s.empty()) s += (cs[0] == '-') ? " - " : " + ";
            else if (cs[0] == '-') s += "-";
            if (cs[0] == '-') cs.erase(0, 1);
            if (i == 0 || cs != "1") s += cs;
            if (i > 0) s += (i == 0 || cs != "1" ? "*" : "") + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c;
    for (auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

// Clears denominators and content; sign made positive on the leading coefficient.
inline IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int den = 1;
    for (auto& x : p.coeffs()) den = lcm(den, Int(x.get_den()));
    std::vector<Int> c;
    Int g = 0;
    for (auto& x : p.coeffs()) {
        Int v = Int(x.get_num()) * (den / Int(x.get_den()));
        c.push_back(v);
        g = gcd(g, v);
    }
    if (p.lead() < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    Rat lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Rat f = r[i] / lb;
        q[i - db] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return (Rat(1) / p.lead()) * p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline IntPoly gcd(const IntPoly& a, const IntPoly& b) { return primitive_part(gcd(to_rat(a), to_rat(b))); }

// Resultant over Q by the Euclidean algorithm.
inline Rat resultant(RatPoly a, RatPoly b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat res = 1;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rat l = b.lead();
            Rat r = 1;
            for (int i = 0; i < da; ++i) r *= l;
            return res * r;
        }
        RatPoly r = rem(a, b);
        if (r.is_zero()) return Rat(0);
        int dr = r.degree();
        // res(a,b) = (-1)^(da db) lc(b)^(da-dr) res(b, r)
        if ((da * db) % 2 == 1) res = -res;
        Rat l = b.lead();
        for (int i = 0; i < da - dr; ++i) res *= l;
        a = std::move(b);
        b = std::move(r);
    }
}

inline Int resultant(const IntPoly& a, const IntPoly& b) {
    Rat r = resultant(to_rat(a), to_rat(b));
    return Int(r.get_num());
}

inline Int discriminant(const IntPoly& p) {
    int n = p.degree();
    Int r = resultant(p, p.derivative());
    Int s = ((n * (n - 1) / 2) % 2) ? Int(-1) : Int(1);
    return s * r / p.lead();
}

// Multiplication of a and b modulo a monic-or-not modulus m, over Q.
inline RatPoly mulmod(const RatPoly& a, const RatPoly& b, const RatPoly& m) { return rem(a * b, m); }

// Factorization of a nonzero integer over a list of primes; returns leftover cofactor.
struct SmallFactorization {
    std::vector<std::pair<unsigned long, long>> powers;
    Int cofactor;
    std::string str() const {
        std::string s;
        for (auto& [p, e] : powers) {
            if (!s.empty()) s += "*";
            s += std::to_string(p) + "^" + std::to_string(e);
        }
        if (abs(cofactor) != 1 || s.empty()) s += (s.empty() ? "" : "*") + to_dec(cofactor);
        else if (cofactor < 0) s = "-" + s;
        return s;
    }
};

inline SmallFactorization factor_over(const Int& x, const std::vector<unsigned long>& primes) {
    SmallFactorization f;
    Int r = x;
    for (unsigned long p : primes) {
        long e = 0;
        while (r != 0 && r % p == 0) {
            r /= p;
            ++e;
        }
        if (e) f.powers.emplace_back(p, e);
    }
    f.cofactor = r;
    return f;
}

}  // namespace tmw
