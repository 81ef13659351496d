#pragma once

#include <algorithm>
#include <vector>

#include "tmw/numeric/fixed_real.hpp"
#include "tmw/numeric/polynomial.hpp"

namespace tmw {

class NotSquarefreeError : public DomainError {
public:
    NotSquarefreeError(const std::string& witness)
        : DomainError("polynomial is not squarefree; repeated factor " + witness), witness_(witness) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

namespace detail {

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> s{p, p.derivative()};
    while (!s.back().is_zero() && s.back().degree() > 0) {
        RatPoly r = rem(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

inline int sign_changes_at(const std::vector<RatPoly>& s, const Rat& x) {
    int changes = 0, last = 0;
    for (auto& q : s) {
        Rat v = q.eval(x);
        int sg = (v > 0) - (v < 0);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

inline int sgn(const Rat& v) { return (v > 0) - (v < 0); }

}  // namespace detail

// Cauchy bound on the absolute value of the real roots.
inline Rat root_bound(const IntPoly& p) {
    Rat m = 0;
    Rat l = abs(Rat(p.lead()));
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = abs(Rat(p.coeff(i))) / l;
        if (v > m) m = v;
    }
    return m + 1;
}

// Isolating intervals [a, b] with one root each, ascending; endpoints are not roots.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    if (p.degree() < 1) return {};
    RatPoly pr = to_rat(p);
    RatPoly g = gcd(pr, pr.derivative());
    if (g.degree() > 0) throw NotSquarefreeError(primitive_part(g).str());
    auto chain = detail::sturm_chain(pr);
    Rat B = root_bound(p);
    std::vector<std::pair<Rat, Rat>> out;
    std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        int n = detail::sign_changes_at(chain, a) - detail::sign_changes_at(chain, b);
        if (n == 0) continue;
        if (n == 1 && pr.eval(a) != 0 && pr.eval(b) != 0) {
            out.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        if (pr.eval(mid) == 0) {
            // nudge so no endpoint is a root
            Rat w = (b - a) / 1024;
            out.emplace_back(mid - w, mid + w);
            stack.emplace_back(a, mid - w);
            stack.emplace_back(mid + w, b);
            continue;
        }
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

// Refines one isolated root to `prec` digits: bisection to ~30 bits, Newton in
// fixed point, then a sign check at mantissa +- err certifies the enclosure.
inline FixedReal refine_root(const IntPoly& p, Rat a, Rat b, long prec) {
    RatPoly pr = to_rat(p);
    int sa = detail::sgn(pr.eval(a));
    for (int it = 0; it < 60 && (b - a) > Rat(1, 1 << 30); ++it) {
        Rat m = (a + b) / 2;
        int sm = detail::sgn(pr.eval(m));
        if (sm == 0) return FixedReal::from_rational(m, prec);
        if (sm == sa) a = m;
        else b = m;
    }
    long W = prec + 10;
    Int S = pow10(W);
    Int x = round_nearest(((a + b) / 2) * Rat(S));
    IntPoly dp = p.derivative();
    auto eval_scaled = [&](const IntPoly& q, const Int& xs) {
        Int r = 0;
        for (std::size_t i = q.coeffs().size(); i-- > 0;) r = r * xs / S + q.coeffs()[i] * S;
        return r;
    };
    for (int it = 0; it < 200; ++it) {
        Int fx = eval_scaled(p, x), dfx = eval_scaled(dp, x);
        if (dfx == 0) break;
        Int step = fx * S / dfx;
        x -= step;
        if (abs(step) <= 1) break;
    }
    Int m = x;
    Int e = 2;
    Int scale = pow10(W);
    for (int tries = 0; tries < 200; ++tries) {
        Rat l = make_rat(m - e, scale), h = make_rat(m + e, scale);
        int sl = detail::sgn(pr.eval(l)), sh = detail::sgn(pr.eval(h));
        if (sl != 0 && sh != 0 && sl != sh && l >= a && h <= b) {
            return FixedReal(m, W, e).with_precision(prec);
        }
        e *= 4;
        if (make_rat(e, scale) > (b - a)) {
            // Newton failed to land; fall back to exact bisection.
            Rat aa = a, bb = b;
            int s = detail::sgn(pr.eval(aa));
            Rat tol = make_rat(1, scale);
            while (bb - aa > tol) {
                Rat mm = (aa + bb) / 2;
                int smm = detail::sgn(pr.eval(mm));
                if (smm == 0) return FixedReal::from_rational(mm, prec);
                if (smm == s) aa = mm;
                else bb = mm;
            }
            Rat c = (aa + bb) / 2;
            return FixedReal(round_nearest(c * Rat(scale)), W, 2).with_precision(prec);
        }
    }
    throw PrecisionError("root refinement did not certify");
}

inline std::vector<FixedReal> real_roots(const IntPoly& p, long prec) {
    std::vector<FixedReal> out;
    for (auto& [a, b] : isolate_real_roots(p)) out.push_back(refine_root(p, a, b, prec));
    return out;
}

}  // namespace tmw
