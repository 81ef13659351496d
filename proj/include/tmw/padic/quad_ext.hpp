#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tmw/numeric/polynomial.hpp"
#include "tmw/padic/padic_scalar.hpp"

namespace tmw {

// Q_p[w] / (w^2 + g1 w + g0) with g1, g0 integral.
class QuadExtension {
public:
    QuadExtension(PadicScalar g1, PadicScalar g0) : g1_(std::move(g1)), g0_(std::move(g0)) {
        p_ = g1_.prime();
        // disc = g1^2 - 4 g0; e = 2 exactly when its valuation is odd (p odd)
        PadicScalar four = PadicScalar::from_int(4, p_, g0_.absprec());
        PadicScalar disc = g1_ * g1_ - four * g0_;
        if (disc.is_zero()) throw PrecisionError("extension discriminant indistinguishable from zero");
        if (p_ == 2) throw DomainError("quadratic extensions over Q_2 are not supported");
        if (disc.valuation() % 2 != 0) {
            e_ = 2;
            f_ = 1;
        } else {
            Int u = disc.unit() % Int(p_);
            bool square = mpz_legendre(u.get_mpz_t(), Int(p_).get_mpz_t()) == 1;
            if (square) throw DomainError("modulus splits over Q_p; not a field extension");
            e_ = 1;
            f_ = 2;
        }
        // residue of w: root of the modulus mod p (a double root when e = 2)
        Int P(p_);
        Int a = g1_.residue(1), b = g0_.residue(1);
        for (unsigned long r = 0; r < p_; ++r) {
            Int v = mod(Int(r) * r + a * r + b, P);
            if (v == 0) {
                residue_root_ = static_cast<long>(r);
                break;
            }
        }
    }

    unsigned long prime() const { return p_; }
    int e() const { return e_; }
    int f() const { return f_; }
    const PadicScalar& g1() const { return g1_; }
    const PadicScalar& g0() const { return g0_; }
    long precision() const { return std::min(g1_.absprec(), g0_.absprec()); }
    // For e = 2, w - r is a uniformizer where r is the double residue root.
    std::optional<long> residue_root() const { return residue_root_; }

    std::string str() const {
        return "t^2 + (" + rat_str(g1_.to_rat()) + ")*t + (" + rat_str(g0_.to_rat()) + ") over Q_" + std::to_string(p_) +
               ", e=" + std::to_string(e_) + ", f=" + std::to_string(f_);
    }

private:
    unsigned long p_;
    PadicScalar g1_, g0_;
    int e_ = 0, f_ = 0;
    std::optional<long> residue_root_;
};

using ExtPtr = std::shared_ptr<const QuadExtension>;

class QuadExtElement {
public:
    QuadExtElement() = default;
    QuadExtElement(ExtPtr ext, PadicScalar x0, PadicScalar x1) : ext_(std::move(ext)), x0_(std::move(x0)), x1_(std::move(x1)) {}

    static QuadExtElement from_rat(ExtPtr ext, const Rat& q, long absprec) {
        unsigned long p = ext->prime();
        return QuadExtElement(ext, PadicScalar::from_rat(q, p, absprec), PadicScalar::zero(p, absprec));
    }
    static QuadExtElement from_coords(ExtPtr ext, const Rat& a0, const Rat& a1, long absprec) {
        unsigned long p = ext->prime();
        return QuadExtElement(ext, PadicScalar::from_rat(a0, p, absprec), PadicScalar::from_rat(a1, p, absprec));
    }
    static QuadExtElement generator(ExtPtr ext, long absprec) { return from_coords(ext, 0, 1, absprec); }

    const ExtPtr& ext() const { return ext_; }
    const PadicScalar& x0() const { return x0_; }
    const PadicScalar& x1() const { return x1_; }
    long absprec() const { return std::min(x0_.absprec(), x1_.absprec()); }

    QuadExtElement with_absprec(long n) const { return QuadExtElement(ext_, x0_.with_absprec(n), x1_.with_absprec(n)); }

    friend QuadExtElement operator+(const QuadExtElement& a, const QuadExtElement& b) {
        return QuadExtElement(a.ext_, a.x0_ + b.x0_, a.x1_ + b.x1_);
    }
    friend QuadExtElement operator-(const QuadExtElement& a, const QuadExtElement& b) {
        return QuadExtElement(a.ext_, a.x0_ - b.x0_, a.x1_ - b.x1_);
    }
    QuadExtElement operator-() const { return QuadExtElement(ext_, -x0_, -x1_); }

    friend QuadExtElement operator*(const QuadExtElement& a, const QuadExtElement& b) {
        // w^2 = -g1 w - g0
        PadicScalar c0 = a.x0_ * b.x0_;
        PadicScalar c1 = a.x0_ * b.x1_ + a.x1_ * b.x0_;
        PadicScalar c2 = a.x1_ * b.x1_;
        return QuadExtElement(a.ext_, c0 - a.ext_->g0() * c2, c1 - a.ext_->g1() * c2);
    }

    friend QuadExtElement operator*(const QuadExtElement& a, const PadicScalar& s) {
        return QuadExtElement(a.ext_, a.x0_ * s, a.x1_ * s);
    }

    // Galois conjugate: w -> -g1 - w.
    QuadExtElement conjugate() const { return QuadExtElement(ext_, x0_ - ext_->g1() * x1_, -x1_); }

    // Constant term of the characteristic polynomial.
    PadicScalar norm() const { return x0_ * x0_ - ext_->g1() * x0_ * x1_ + ext_->g0() * x1_ * x1_; }
    PadicScalar trace() const {
        PadicScalar two = PadicScalar::from_int(2, ext_->prime(), absprec() + 2);
        return two * x0_ - ext_->g1() * x1_;
    }

    bool is_zero() const { return norm().is_zero(); }

    // ord_p(x) = ord_p(N(x)) / 2
    Rat ord() const {
        PadicScalar n = norm();
        if (n.is_zero()) throw PrecisionError("element indistinguishable from zero at tracked precision");
        return make_rat(Int(n.valuation()), Int(2));
    }

    // Lower bound on ord valid also for elements indistinguishable from zero.
    Rat ord_lower_bound() const {
        PadicScalar n = norm();
        return make_rat(Int(n.valuation()), Int(2));
    }

    QuadExtElement inverse() const {
        PadicScalar n = norm();
        if (n.is_zero()) throw PrecisionError("inverse of an element indistinguishable from zero");
        PadicScalar ni = n.inverse();
        QuadExtElement c = conjugate();
        return QuadExtElement(ext_, c.x0_ * ni, c.x1_ * ni);
    }

    friend QuadExtElement operator/(const QuadExtElement& a, const QuadExtElement& b) { return a * b.inverse(); }

    QuadExtElement pow(unsigned long n) const {
        QuadExtElement r = from_rat(ext_, 1, absprec() + 64);
        QuadExtElement b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }

    // Coordinates truncated to integers in [0, p^k).
    std::pair<Int, Int> residues(long k) const { return {x0_.residue(k), x1_.residue(k)}; }

    std::string str(long k) const {
        auto [a, b] = residues(k);
        return "(" + to_dec(b) + ")*w + (" + to_dec(a) + ") + O(" + std::to_string(ext_->prime()) + "^" + std::to_string(k) + ")";
    }

private:
    ExtPtr ext_;
    PadicScalar x0_, x1_;
};

// Horner evaluation of a rational polynomial at an extension element.
inline QuadExtElement eval(const RatPoly& f, const QuadExtElement& x) {
    long n = x.absprec();
    QuadExtElement r = QuadExtElement::from_rat(x.ext(), 0, n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * x + QuadExtElement::from_rat(x.ext(), f.coeffs()[i], n);
    return r;
}

inline QuadExtElement eval(const IntPoly& f, const QuadExtElement& x) { return eval(to_rat(f), x); }

inline PadicScalar eval(const RatPoly& f, const PadicScalar& x) {
    long n = x.absprec();
    PadicScalar r = PadicScalar::zero(x.prime(), n);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * x + PadicScalar::from_rat(f.coeffs()[i], x.prime(), n);
    return r;
}

}  // namespace tmw
