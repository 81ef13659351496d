#pragma once

#include <array>
#include <string>
#include <vector>

#include "tmw/field/data_pack.hpp"
#include "tmw/padic/lift_root.hpp"

namespace tmw {

class DataIntegrityError : public DomainError {
public:
    using DomainError::DomainError;
};

// A prime above p given by a root of a local factor of the defining polynomial.
// Scalar primes carry a root in Q_p; quadratic ones a generator of Q_p[t]/(factor).
// Unique primes (the only prime above p, f = 1) are valued through the norm.
struct LocalPrime {
    enum class Kind { Scalar, Quadratic, Unique };
    std::string name;
    unsigned long p = 0;
    int e = 1, f = 1;
    Kind kind = Kind::Scalar;
    PadicScalar scalar_root;
    ExtPtr ext;
    std::optional<QuadExtElement> root;
    PadicFactor factor;
};

// ord_p of x at the prime's completion.
inline Rat local_ord(const RatPoly& x, const LocalPrime& P) {
    switch (P.kind) {
        case LocalPrime::Kind::Scalar: {
            PadicScalar v = eval(x, P.scalar_root);
            if (v.is_zero()) throw PrecisionError("value indistinguishable from zero at " + P.name);
            return Rat(v.valuation());
        }
        case LocalPrime::Kind::Quadratic: return eval(x, *P.root).ord();
        case LocalPrime::Kind::Unique: break;
    }
    throw DomainError("local_ord needs an embedding; use ideal_valuation for unique primes");
}

// nu_P(x) = e * ord_p(x at P).
inline Rat ideal_valuation(const FieldElement& x, const LocalPrime& P) {
    if (x.is_zero()) throw DomainError("valuation of zero");
    if (P.kind == LocalPrime::Kind::Unique) return make_rat(Int(vp(x.norm(), P.p)), Int(P.f));
    return Rat(P.e) * local_ord(x.coords(), P);
}

inline LocalPrime unique_prime(std::string name, unsigned long p, int e, int f) {
    LocalPrime P;
    P.name = std::move(name);
    P.p = p;
    P.e = e;
    P.f = f;
    P.kind = LocalPrime::Kind::Unique;
    return P;
}

inline ExtPtr make_extension(const PadicScalar& g1, const PadicScalar& g0) { return std::make_shared<QuadExtension>(g1, g0); }

// One LocalPrime per irreducible factor of f over Q_p at precision N.
inline std::vector<LocalPrime> local_primes(const IntPoly& f, unsigned long p, long N) {
    std::vector<LocalPrime> out;
    LocalFactorization lf = lift_factorization(f, p, N);
    if (!lf.notes.empty()) throw DataIntegrityError("local factorization incomplete: " + lf.notes.front());
    int idx = 0;
    for (auto& fac : lf.factors) {
        LocalPrime P;
        P.name = "P" + std::to_string(++idx);
        P.p = p;
        P.factor = fac;
        if (fac.degree() == 1) {
            P.kind = LocalPrime::Kind::Scalar;
            P.scalar_root = -fac.coeffs[0];
        } else if (fac.degree() == 2) {
            P.kind = LocalPrime::Kind::Quadratic;
            P.ext = make_extension(fac.coeffs[1], fac.coeffs[0]);
            P.e = P.ext->e();
            P.f = P.ext->f();
            P.root = QuadExtElement::generator(P.ext, N);
        } else {
            throw DomainError("local factor of degree " + std::to_string(fac.degree()) + " is not supported");
        }
        out.push_back(std::move(P));
    }
    return out;
}

// The unique prime among `primes` where x has positive valuation.
inline std::size_t match_prime(const FieldElement& x, const std::vector<LocalPrime>& primes, const std::string& label) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (local_ord(x.coords(), primes[i]) > 0) hits.push_back(i);
    if (hits.size() != 1)
        throw DataIntegrityError(label + " has positive valuation at " + std::to_string(hits.size()) +
                                 " local factors; correspondence is ambiguous");
    return hits.front();
}

// The completion K_P and the five roots theta_1..theta_5 of g in it.
struct SplittingLocal {
    ExtPtr ext;
    long precision = 0;
    PadicScalar gamma1, gamma0;
    std::array<QuadExtElement, 5> theta;  // theta[i-1] = theta_i(omega_P)
    QuadExtElement theta5_from_pack;      // theta_5(omega) evaluated at omega_P
    std::string g2_name, g1_name;         // F-side prime names for the quadratic pairs
    const QuadExtElement& root(int i) const { return theta.at(i - 1); }
};

// Builds K_P from the selected table row (lifted to precision N) and labels the
// roots of g: theta_5 in Q_p, the pair of the factor matched to `pair13_prime`
// as theta_1, theta_3, the other pair as theta_2, theta_4.
inline SplittingLocal build_splitting_local(const FieldPack& F, const SplittingPack& K, const std::string& pair13_prime,
                                            long N) {
    SplittingLocal S;
    S.precision = N;
    unsigned long p = K.prime;
    const auto& row = K.row(K.selected);
    auto [a, b] = lift_quadratic_factor(K.field->poly(), row.gamma1, row.gamma0, p, N + 20);
    S.gamma1 = a;
    S.gamma0 = b;
    S.ext = make_extension(a, b);
    if (S.ext->e() != row.e || S.ext->f() != row.f) throw DataIntegrityError("K_P has (e, f) different from the table row");
    std::vector<QuadExtElement> roots = roots_in_extension(to_rat(F.field->poly()), S.ext, N);
    if (roots.size() != 5) throw DataIntegrityError("expected 5 roots of g in K_P, found " + std::to_string(roots.size()));

    QuadExtElement omega = QuadExtElement::generator(S.ext, N + 20);
    S.theta5_from_pack = eval(K.theta5, omega);

    std::vector<QuadExtElement> rational, ramified;
    for (auto& r : roots) (r.x1().is_zero() ? rational : ramified).push_back(r);
    if (rational.size() != 1 || ramified.size() != 4) throw DataIntegrityError("unexpected root pattern of g in K_P");
    S.theta[4] = rational[0];

    const FieldElement& pi = F.get(pair13_prime);
    std::vector<QuadExtElement> pA, pB;
    for (auto& r : ramified) (eval(pi.coords(), r).ord() > 0 ? pA : pB).push_back(r);
    if (pA.size() != 2 || pB.size() != 2) throw DataIntegrityError(pair13_prime + " does not single out one pair of roots");
    auto order = [&](std::vector<QuadExtElement>& v) {
        if ((v[0] - v[1].conjugate()).ord_lower_bound() < Rat(N / 2)) throw DataIntegrityError("paired roots are not Galois conjugate");
        if (v[0].x1().residue(K.table_precision) > v[1].x1().residue(K.table_precision)) std::swap(v[0], v[1]);
    };
    order(pA);
    order(pB);
    S.theta[0] = pA[0];
    S.theta[2] = pA[1];
    S.theta[1] = pB[0];
    S.theta[3] = pB[1];
    return S;
}

// Local prime of K for a table row: Q_p[t]/(t^2 + gamma1 t + gamma0), root omega.
inline LocalPrime table_prime(const SplittingPack& K, int index, long N) {
    const auto& row = K.row(index);
    auto [a, b] = lift_quadratic_factor(K.field->poly(), row.gamma1, row.gamma0, K.prime, N + 10);
    LocalPrime P;
    P.name = "P" + std::to_string(index);
    P.p = K.prime;
    P.kind = LocalPrime::Kind::Quadratic;
    P.ext = make_extension(a, b);
    P.e = P.ext->e();
    P.f = P.ext->f();
    P.root = QuadExtElement::generator(P.ext, N);
    P.factor.coeffs = {b, a, PadicScalar::from_int(1, K.prime, N)};
    return P;
}

}  // namespace tmw
