#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tmw/analysis/prime_analysis.hpp"
#include "tmw/field/local.hpp"
#include "tmw/padic/newton_polygon.hpp"

namespace tmw {

// ord_p of the roots of a monic polynomial with p-adic coefficients, provided its Newton
// polygon has a single slope; nullopt otherwise.
inline std::optional<Rat> uniform_root_ord(const std::vector<PadicScalar>& coeffs) {
    long n = coeffs.front().absprec();
    for (auto& c : coeffs) n = std::min(n, c.absprec());
    std::vector<Int> r;
    for (auto& c : coeffs) r.push_back(c.is_zero() ? Int(0) : c.residue(n));
    IntPoly f(std::move(r));
    if (f.coeff(0) == 0) return std::nullopt;
    auto segs = newton_polygon(f, coeffs.front().prime());
    for (auto& s : segs)
        if (s.slope != segs.front().slope) return std::nullopt;
    return -segs.front().slope;
}

struct ElevenAdicAnalysis {
    std::array<PadicFactor, 3> g;           // local factors matched to pi_111, pi_112, pi_113
    std::array<std::string, 3> local_name;  // factor names in the local factorization
    std::pair<PadicScalar, PadicScalar> h13, h23;
    std::array<PadicScalar, 4> h12;
    std::array<PadicScalar, 2> disc;        // discriminants of g1, g2
    RemovingLemmaInput lemma;
    ExponentConstraints constraints;
    RhsFamilies families;
};

// Factors g over Q_11, pairs the factors with pi_111, pi_112, pi_113 and feeds the
// pairwise root distances to the removing lemma.
inline ElevenAdicAnalysis analyze_eleven_adic(const FieldPack& F, long z1_bound, long N = 20) {
    ElevenAdicAnalysis A;
    const unsigned long p = 11;
    auto P = local_primes(F.field->poly(), p, N);
    const char* names[3] = {"pi111", "pi112", "pi113"};
    std::array<std::size_t, 3> idx{};
    for (int i = 0; i < 3; ++i) {
        idx[i] = match_prime(F.get(names[i]), P, names[i]);
        A.g[i] = P[idx[i]].factor;
        A.local_name[i] = P[idx[i]].name;
    }
    if (A.g[0].degree() != 2 || A.g[1].degree() != 2 || A.g[2].degree() != 1)
        throw DataIntegrityError("11-adic factor degrees are not (2, 2, 1)");
    PadicScalar th3 = -A.g[2].coeffs[0];
    A.h13 = shifted_quadratic(A.g[0].coeffs[1], A.g[0].coeffs[0], th3);
    A.h23 = shifted_quadratic(A.g[1].coeffs[1], A.g[1].coeffs[0], th3);
    A.h12 = difference_quartic(A.g[0].coeffs[1], A.g[0].coeffs[0], A.g[1].coeffs[1], A.g[1].coeffs[0]);
    PadicScalar four = PadicScalar::from_int(4, p, N);
    for (int i = 0; i < 2; ++i) A.disc[i] = A.g[i].coeffs[1] * A.g[i].coeffs[1] - four * A.g[i].coeffs[0];

    auto one = PadicScalar::from_int(1, p, N);
    auto ord_or_throw = [](const std::optional<Rat>& o, const std::string& what) {
        if (!o) throw DataIntegrityError("roots of " + what + " do not share one valuation");
        return *o;
    };
    RemovingLemmaInput& in = A.lemma;
    for (int i = 0; i < 3; ++i) in.e.push_back(P[idx[i]].e);
    for (int i = 0; i < 2; ++i) in.intra_ord.push_back(Rat(A.disc[i].valuation()) / 2);
    in.intra_ord.push_back(std::nullopt);
    in.pair_ord.assign(3, std::vector<std::optional<Rat>>(3));
    in.pair_ord[0][1] = ord_or_throw(uniform_root_ord({A.h12[3], A.h12[2], A.h12[1], A.h12[0], one}), "h12");
    in.pair_ord[0][2] = ord_or_throw(uniform_root_ord({A.h13.second, A.h13.first, one}), "h13");
    in.pair_ord[1][2] = ord_or_throw(uniform_root_ord({A.h23.second, A.h23.first, one}), "h23");
    A.constraints = removing_lemma_constraints(in);

    std::vector<long> z2;
    for (auto& w : A.constraints.patterns) {
        long s = 0;
        bool bounded = true;
        for (auto& c : w) {
            if (!c) bounded = false;
            else s += *c;
        }
        if (bounded && s > 0 && std::find(z2.begin(), z2.end(), s) == z2.end()) z2.push_back(s);
    }
    std::sort(z2.begin(), z2.end());
    A.families = rhs_families(z1_bound, z2);
    return A;
}

// First n base-p digits of a p-adic integer.
inline std::vector<long> padic_digits(const PadicScalar& x, long n) {
    Int r = x.residue(n);
    std::vector<long> d;
    for (long i = 0; i < n; ++i) {
        d.push_back(mod(r, Int(static_cast<long>(x.prime()))).get_si());
        r /= static_cast<long>(x.prime());
    }
    return d;
}

}  // namespace tmw
