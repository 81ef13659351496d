#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tmw/numeric/fixed_real.hpp"
#include "tmw/numeric/polynomial.hpp"
#include "tmw/padic/quad_ext.hpp"

namespace tmw {

// Q[t]/(f) for a monic irreducible integer polynomial f.
class NumberField {
public:
    NumberField(std::string name, IntPoly f, std::string var = "t")
        : name_(std::move(name)), var_(std::move(var)), f_(std::move(f)), fr_(to_rat(f_)) {
        if (f_.degree() < 1 || f_.lead() != 1) throw DomainError("defining polynomial of " + name_ + " must be monic");
    }

    const std::string& name() const { return name_; }
    const std::string& var() const { return var_; }
    const IntPoly& poly() const { return f_; }
    const RatPoly& rat_poly() const { return fr_; }
    int degree() const { return f_.degree(); }

private:
    std::string name_, var_;
    IntPoly f_;
    RatPoly fr_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

namespace detail {

// s with s a = 1 mod m over Q.
inline RatPoly invmod_poly(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = m, r1 = rem(a, m), s0, s1({Rat(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw DomainError("element is not invertible (shares a factor with the modulus)");
    return rem(Rat(1 / r0.lead()) * s0, m);
}

}  // namespace detail

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr k, RatPoly c) : k_(std::move(k)), c_(rem(c, k_->rat_poly())) {}

    static FieldElement from_rat(FieldPtr k, const Rat& q) { return FieldElement(std::move(k), RatPoly({q})); }
    static FieldElement generator(FieldPtr k) { return FieldElement(std::move(k), RatPoly({Rat(0), Rat(1)})); }

    const FieldPtr& field() const { return k_; }
    const RatPoly& coords() const { return c_; }
    Rat coord(std::size_t i) const { return c_.coeff(i); }
    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return c_.degree() <= 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.k_, a.c_ + b.c_}; }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.k_, a.c_ - b.c_}; }
    FieldElement operator-() const { return {k_, -c_}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.k_, a.c_ * b.c_}; }
    friend FieldElement operator*(const Rat& s, const FieldElement& a) { return {a.k_, s * a.c_}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

    FieldElement inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return {k_, detail::invmod_poly(c_, k_->rat_poly())};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    FieldElement pow(long n) const {
        FieldElement b = n < 0 ? inverse() : *this;
        unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        FieldElement r = from_rat(k_, 1);
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // res(f, x(t)) = product of the conjugates, f monic.
    Rat norm() const {
        if (is_zero()) return 0;
        return resultant(k_->rat_poly(), c_);
    }

    // Characteristic polynomial of multiplication by x, via res_t(f(t), X - x(t)).
    RatPoly charpoly() const;

    std::string str() const { return c_.str(k_->var()); }

private:
    FieldPtr k_;
    RatPoly c_;
};

inline RatPoly FieldElement::charpoly() const {
    // Newton identities from the power traces.
    int n = k_->degree();
    std::vector<Rat> p(n + 1, Rat(0));
    // trace of t^j through the companion recurrence
    std::vector<Rat> tr_pow(2 * n + 1, Rat(0));
    const IntPoly& f = k_->poly();
    tr_pow[0] = n;
    std::vector<Rat> e(n + 1, Rat(0));
    for (int i = 1; i <= n; ++i) e[i] = (i % 2 ? Rat(-1) : Rat(1)) * Rat(f.coeff(n - i));
    for (int k = 1; k <= 2 * n; ++k) {
        // power sums of the roots of f
        Rat s = 0;
        for (int i = 1; i <= std::min(k - 1, n); ++i) s += (i % 2 ? Rat(1) : Rat(-1)) * e[i] * tr_pow[k - i];
        if (k <= n) s += (k % 2 ? Rat(1) : Rat(-1)) * Rat(k) * e[k];
        tr_pow[k] = s;
    }
    auto trace = [&](const RatPoly& c) {
        Rat s = 0;
        for (int j = 0; j <= c.degree(); ++j) s += c.coeff(j) * tr_pow[j];
        return s;
    };
    FieldElement xp = from_rat(k_, 1);
    for (int k = 1; k <= n; ++k) {
        xp = xp * *this;
        p[k] = trace(xp.c_);
    }
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    // c[n-k] are signed elementary symmetric functions
    std::vector<Rat> es(n + 1, Rat(0));
    es[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int i = 1; i <= k; ++i) s += (i % 2 ? Rat(1) : Rat(-1)) * es[k - i] * p[i];
        es[k] = s / Rat(k);
    }
    for (int k = 1; k <= n; ++k) c[n - k] = (k % 2 ? Rat(-1) : Rat(1)) * es[k];
    return RatPoly(std::move(c));
}

inline FieldElement element_from_coords(const FieldPtr& k, const std::vector<Rat>& low_first) {
    return FieldElement(k, RatPoly(low_first));
}

// x evaluated at a real embedding point (a root of the defining polynomial).
inline FixedReal eval_at(const FieldElement& x, const FixedReal& root) {
    long prec = root.precision();
    FixedReal r = FixedReal::from_int(0, prec);
    const auto& c = x.coords().coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * root + FixedReal::from_rational(c[i], prec);
    return r;
}

inline QuadExtElement eval_at(const FieldElement& x, const QuadExtElement& root) { return eval(x.coords(), root); }

}  // namespace tmw
