#pragma once

#include <string>
#include <vector>

#include "tmw/padic/hensel.hpp"
#include "tmw/padic/quad_ext.hpp"

namespace tmw {

class IrregularRootError : public DomainError {
public:
    using DomainError::DomainError;
};

struct LiftOptions {
    long guard = 10;
    // Seeds are enumerated modulo P^seed_depth (p^(seed_depth-1) lifts per residue).
    int seed_depth = 4;
    int max_newton_steps = 64;
};

// Uniformizer of the extension: w - r for e = 2, p otherwise.
inline QuadExtElement uniformizer(const ExtPtr& ext, long absprec) {
    if (ext->e() == 2) return QuadExtElement::from_coords(ext, Rat(-*ext->residue_root()), 1, absprec);
    return QuadExtElement::from_rat(ext, Rat(static_cast<long>(ext->prime())), absprec);
}

// Residue-field representatives a (f = 1) or a + b w (f = 2).
inline std::vector<QuadExtElement> residue_reps(const ExtPtr& ext, long absprec) {
    std::vector<QuadExtElement> out;
    long p = static_cast<long>(ext->prime());
    for (long a = 0; a < p; ++a) {
        if (ext->f() == 1) out.push_back(QuadExtElement::from_rat(ext, a, absprec));
        else
            for (long b = 0; b < p; ++b) out.push_back(QuadExtElement::from_coords(ext, a, b, absprec));
    }
    return out;
}

inline bool newton_criterion(const RatPoly& f, const RatPoly& df, const QuadExtElement& x) {
    QuadExtElement fx = eval(f, x), dfx = eval(df, x);
    if (dfx.is_zero()) return false;
    Rat of = fx.ord_lower_bound();
    return of > 2 * dfx.ord();
}

// Newton iteration from a seed that satisfies the convergence criterion.
inline QuadExtElement newton_lift(const RatPoly& f, const QuadExtElement& seed, long target, const LiftOptions& opt = {}) {
    RatPoly df = f.derivative();
    long W = target + opt.guard;
    QuadExtElement x = seed.with_absprec(W);
    if (x.absprec() < W) {
        x = QuadExtElement::from_coords(seed.ext(), seed.x0().to_rat(), seed.x1().to_rat(), W);
    }
    Rat prev = -1;
    for (int it = 0; it < opt.max_newton_steps; ++it) {
        QuadExtElement fx = eval(f, x);
        Rat of = fx.ord_lower_bound();
        if (of >= target) return x;
        QuadExtElement dfx = eval(df, x);
        Rat od = dfx.ord();
        if (!(of > 2 * od)) throw IrregularRootError("Newton criterion lost during lifting");
        if (prev >= 0 && !(of > prev)) throw IrregularRootError("lifting stalled at ord " + rat_str(of));
        prev = of;
        x = x - fx / dfx;
        x = QuadExtElement::from_coords(x.ext(), x.x0().to_rat(), x.x1().to_rat(), W);
    }
    throw IrregularRootError("Newton lifting did not reach the target precision");
}

// Seeds modulo P^depth refining a residue seed.
inline std::vector<QuadExtElement> refined_seeds(const QuadExtElement& base, int depth, long absprec) {
    const ExtPtr& ext = base.ext();
    QuadExtElement pi = uniformizer(ext, absprec);
    std::vector<QuadExtElement> reps = residue_reps(ext, absprec);
    std::vector<QuadExtElement> cur{base.with_absprec(absprec)};
    QuadExtElement pk = pi;
    for (int k = 1; k < depth; ++k) {
        std::vector<QuadExtElement> next;
        for (auto& s : cur)
            for (auto& c : reps) next.push_back(s + c * pk);
        cur.swap(next);
        pk = pk * pi;
    }
    return cur;
}

// Root of f in the extension from a seed; refines non-regular seeds modulo P^depth.
inline QuadExtElement lift_root(const RatPoly& f, const QuadExtElement& seed, long target, const LiftOptions& opt = {}) {
    RatPoly df = f.derivative();
    long W = target + opt.guard;
    if (newton_criterion(f, df, seed)) return newton_lift(f, seed, target, opt);
    for (auto& s : refined_seeds(seed, opt.seed_depth, W))
        if (newton_criterion(f, df, s)) return newton_lift(f, s, target, opt);
    throw IrregularRootError("no seed modulo P^" + std::to_string(opt.seed_depth) +
                             " satisfies the Newton criterion; wrong extension?");
}

inline bool same_root(const QuadExtElement& a, const QuadExtElement& b, long k) {
    return (a - b).ord_lower_bound() >= Rat(k);
}

// All roots of f in the extension reachable from seeds modulo P^depth.
inline std::vector<QuadExtElement> roots_in_extension(const RatPoly& f, const ExtPtr& ext, long target,
                                                     const LiftOptions& opt = {}) {
    RatPoly df = f.derivative();
    long W = target + opt.guard;
    std::vector<QuadExtElement> found;
    for (auto& r : residue_reps(ext, W)) {
        if (eval(f, r).ord_lower_bound() <= 0) continue;
        for (auto& s : refined_seeds(r, opt.seed_depth, W)) {
            if (!newton_criterion(f, df, s)) continue;
            QuadExtElement x = newton_lift(f, s, target, opt);
            bool dup = false;
            for (auto& y : found)
                if (same_root(x, y, target / 2)) dup = true;
            if (!dup) found.push_back(x);
        }
    }
    return found;
}

// Candidate quadratic extensions for an odd prime: the two ramified ones and the unramified one.
inline std::vector<ExtPtr> standard_quadratic_extensions(unsigned long p, long absprec) {
    long u = 2;
    while (mpz_legendre(Int(u).get_mpz_t(), Int(p).get_mpz_t()) != -1) ++u;
    std::vector<ExtPtr> out;
    long P = static_cast<long>(p);
    for (long g0 : {-P, -P * u, -u})
        out.push_back(std::make_shared<QuadExtension>(PadicScalar::zero(p, absprec), PadicScalar::from_int(g0, p, absprec)));
    return out;
}

struct LocalFactorization {
    std::vector<PadicFactor> factors;
    // residue blocks that could not be split further
    std::vector<std::string> notes;
};

// Block Hensel lifting followed by splitting each repeated-residue block via its
// roots in a quadratic extension, pairing each root with its Galois conjugate.
inline LocalFactorization lift_factorization(const IntPoly& f, unsigned long p, long N, const LiftOptions& opt = {}) {
    LocalFactorization out;
    long W = N + opt.guard;
    std::vector<IntPoly> blocks = lift_blocks(f, p, W);
    for (auto& blk : blocks) {
        IntPoly red = zp::reduce(blk, Int(p));
        bool repeated = red.degree() >= 2 && residue_roots(red, p).size() == 1 && residue_roots(red, p)[0].second >= 2;
        if (!repeated) {
            out.factors.push_back(to_factor(blk, p, N));
            continue;
        }
        // quadratic and linear factors gathered across the candidate extensions
        std::vector<PadicFactor> fs;
        int deg = 0;
        auto known = [&](const PadicFactor& c) {
            for (auto& x : fs) {
                if (x.degree() != c.degree()) continue;
                bool eq = true;
                for (int k = 0; k <= c.degree(); ++k)
                    if (!x.coeffs[k].congruent(c.coeffs[k])) eq = false;
                if (eq) return true;
            }
            return false;
        };
        for (auto& ext : standard_quadratic_extensions(p, W + 10)) {
            if (deg == blk.degree()) break;
            LiftOptions o = opt;
            if (ext->f() == 2) o.seed_depth = std::min(o.seed_depth, 2);
            std::vector<QuadExtElement> roots;
            try {
                roots = roots_in_extension(to_rat(blk), ext, W, o);
            } catch (const IrregularRootError&) {
                continue;
            }
            for (auto& r : roots) {
                PadicFactor c;
                if (r.x1().is_zero())
                    c.coeffs = {(-r.x0()).with_absprec(N), PadicScalar::from_int(1, p, N)};
                else
                    c.coeffs = {r.norm().with_absprec(N), (-r.trace()).with_absprec(N), PadicScalar::from_int(1, p, N)};
                if (!known(c)) {
                    fs.push_back(c);
                    deg += c.degree();
                }
            }
        }
        bool split = deg == blk.degree();
        if (split)
            for (auto& x : fs) out.factors.push_back(x);
        if (!split) {
            out.notes.push_back("block " + blk.str() + " left unsplit");
            out.factors.push_back(to_factor(blk, p, N));
        }
    }
    return out;
}

}  // namespace tmw
