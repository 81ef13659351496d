#pragma once

#include <array>
#include <string>
#include <vector>

#include "tmw/numeric/polynomial.hpp"
#include "tmw/padic/padic_scalar.hpp"

namespace tmw {

class LiftingStalledError : public DomainError {
public:
    using DomainError::DomainError;
};

namespace zp {

inline IntPoly reduce(const IntPoly& f, const Int& M) {
    std::vector<Int> c;
    for (auto& x : f.coeffs()) c.push_back(mod(x, M));
    return IntPoly(std::move(c));
}

// Division by b whose leading coefficient is a unit mod M.
inline std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b, const Int& M) {
    IntPoly bb = reduce(b, M);
    if (bb.is_zero()) throw DomainError("division by zero polynomial mod M");
    Int li = invmod(bb.lead(), M);
    std::vector<Int> r = reduce(a, M).coeffs();
    int db = bb.degree();
    if (static_cast<int>(r.size()) - 1 < db) return {IntPoly(), IntPoly(r)};
    std::vector<Int> q(r.size() - db, Int(0));
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        Int f = mod(r[i] * li, M);
        q[i - db] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - f * bb.coeff(j), M);
    }
    r.resize(db);
    return {IntPoly(std::move(q)), reduce(IntPoly(std::move(r)), M)};
}

// s a + t b = 1 mod p for coprime a, b over F_p.
inline std::pair<IntPoly, IntPoly> xgcd(const IntPoly& a, const IntPoly& b, unsigned long p) {
    Int P(p);
    IntPoly r0 = reduce(a, P), r1 = reduce(b, P);
    IntPoly s0({Int(1)}), s1, t0, t1({Int(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1, P);
        IntPoly s2 = reduce(s0 - q * s1, P), t2 = reduce(t0 - q * t1, P);
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw LiftingStalledError("residual factors are not coprime; gcd witness " + r0.str());
    Int inv = invmod(r0.lead(), P);
    return {reduce(Int(inv) * s0, P), reduce(Int(inv) * t0, P)};
}

}  // namespace zp

// Lifts f = A B mod p (A monic, coprime residues) to f = A B mod p^N.
inline std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, IntPoly A, IntPoly B, unsigned long p, long N) {
    Int P(p);
    auto [s, t] = zp::xgcd(A, B, p);
    Int pk = P;
    for (long k = 1; k < N; ++k) {
        Int pk1 = pk * P;
        IntPoly diff = zp::reduce(f - A * B, pk1);
        std::vector<Int> e;
        for (auto& c : diff.coeffs()) {
            if (c % pk != 0) throw LiftingStalledError("hensel invariant broken");
            e.push_back(c / pk);
        }
        IntPoly E = zp::reduce(IntPoly(e), P);
        IntPoly dA = zp::divmod(E * t, A, P).second;
        // E = (E s + q B) A + (E t mod A) B with q = (E t) div A
        IntPoly q = zp::divmod(E * t, A, P).first;
        IntPoly dB = zp::reduce(E * s + q * B, P);
        A = zp::reduce(A + pk * dA, pk1);
        B = zp::reduce(B + pk * dB, pk1);
        pk = pk1;
    }
    return {A, B};
}

// Roots of f mod p with multiplicities.
inline std::vector<std::pair<long, int>> residue_roots(const IntPoly& f, unsigned long p) {
    Int P(p);
    std::vector<std::pair<long, int>> out;
    IntPoly g = zp::reduce(f, P);
    for (unsigned long r = 0; r < p; ++r) {
        int m = 0;
        IntPoly lin({mod(Int(-static_cast<long>(r)), P), Int(1)});
        while (!g.is_zero() && g.degree() > 0) {
            auto [q, rem] = zp::divmod(g, lin, P);
            if (!rem.is_zero()) break;
            g = q;
            ++m;
        }
        if (m) out.emplace_back(static_cast<long>(r), m);
    }
    return out;
}

// Monic factor over Q_p with coefficients to absolute precision N, lowest first.
struct PadicFactor {
    std::vector<PadicScalar> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    IntPoly truncated(long n) const {
        std::vector<Int> c;
        for (auto& x : coeffs) c.push_back(x.residue(n));
        return IntPoly(std::move(c));
    }
};

inline PadicFactor to_factor(const IntPoly& f, unsigned long p, long N) {
    PadicFactor out;
    for (int i = 0; i <= f.degree(); ++i) out.coeffs.push_back(PadicScalar::from_int(f.coeff(i), p, N));
    return out;
}

// Block factorization: one block (t - r)^m per residue root plus the root-free cofactor.
inline std::vector<IntPoly> lift_blocks(const IntPoly& f, unsigned long p, long N) {
    if (f.lead() % Int(p) == 0) throw DomainError("leading coefficient divisible by p");
    Int P(p);
    Int M = ipow(P, N);
    IntPoly monic_f = zp::reduce(invmod(f.lead(), M) * f, M);
    std::vector<IntPoly> seeds;
    IntPoly rest = zp::reduce(monic_f, P);
    for (auto& [r, m] : residue_roots(f, p)) {
        IntPoly lin({mod(Int(-r), P), Int(1)});
        IntPoly blk = zp::reduce(lin.pow(m), P);
        seeds.push_back(blk);
        rest = zp::divmod(rest, blk, P).first;
    }
    if (rest.degree() > 0) seeds.push_back(rest);
    std::vector<IntPoly> out;
    IntPoly cur = monic_f;
    for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
        IntPoly others({Int(1)});
        for (std::size_t j = i + 1; j < seeds.size(); ++j) others = zp::reduce(others * seeds[j], P);
        auto [A, B] = hensel_lift(cur, seeds[i], others, p, N);
        out.push_back(A);
        cur = B;
    }
    out.push_back(zp::reduce(cur, M));
    return out;
}

// Newton lift of a monic quadratic factor t^2 + a t + b of f from a seed known
// mod p^k, through the remainder map (a, b) -> f mod (t^2 + a t + b).
inline std::pair<PadicScalar, PadicScalar> lift_quadratic_factor(const IntPoly& f, const Int& a0, const Int& b0,
                                                                 unsigned long p, long N, int max_iter = 40) {
    Int P(p);
    long W = N + 40;
    Int M = ipow(P, W);
    Int a = mod(a0, M), b = mod(b0, M);
    auto rem_and_jac = [&](const Int& a, const Int& b) {
        std::vector<Int> c = f.coeffs(), da(c.size(), Int(0)), db(c.size(), Int(0));
        for (std::size_t k = c.size() - 1; k >= 2; --k) {
            Int ck = c[k], dak = da[k], dbk = db[k];
            c[k] = 0;
            c[k - 1] = mod(c[k - 1] - a * ck, M);
            da[k - 1] = mod(da[k - 1] - ck - a * dak, M);
            db[k - 1] = mod(db[k - 1] - a * dbk, M);
            c[k - 2] = mod(c[k - 2] - b * ck, M);
            da[k - 2] = mod(da[k - 2] - b * dak, M);
            db[k - 2] = mod(db[k - 2] - ck - b * dbk, M);
        }
        return std::array<Int, 6>{c[0], c[1], da[0], da[1], db[0], db[1]};
    };
    long prev = -1;
    for (int it = 0; it < max_iter; ++it) {
        auto v = rem_and_jac(a, b);
        long o0 = v[0] == 0 ? W : vp(v[0], p), o1 = v[1] == 0 ? W : vp(v[1], p);
        // the residual must gain precision at every step
        if (prev >= 0 && std::min(o0, o1) <= prev) throw LiftingStalledError("quadratic factor lift is not converging");
        prev = std::min(o0, o1);
        if (std::min(o0, o1) >= N + 20) {
            return {PadicScalar::from_int(a, p, N), PadicScalar::from_int(b, p, N)};
        }
        PadicScalar r0 = PadicScalar::from_int(v[0], p, W), r1 = PadicScalar::from_int(v[1], p, W);
        PadicScalar ja0 = PadicScalar::from_int(v[2], p, W), ja1 = PadicScalar::from_int(v[3], p, W);
        PadicScalar jb0 = PadicScalar::from_int(v[4], p, W), jb1 = PadicScalar::from_int(v[5], p, W);
        PadicScalar det = ja0 * jb1 - jb0 * ja1;
        if (det.is_zero() || det.valuation() >= std::min(o0, o1))
            throw LiftingStalledError("quadratic factor seed does not satisfy the Newton criterion");
        PadicScalar da = (r0 * jb1 - jb0 * r1) / det;
        PadicScalar db = (ja0 * r1 - ja1 * r0) / det;
        a = mod(a - Int(da.to_rat().get_num()) * invmod(Int(da.to_rat().get_den()), M), M);
        b = mod(b - Int(db.to_rat().get_num()) * invmod(Int(db.to_rat().get_den()), M), M);
    }
    throw LiftingStalledError("quadratic factor lift did not converge");
}

}  // namespace tmw
