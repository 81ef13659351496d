#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmw/padic/hensel.hpp"
#include "tmw/padic/newton_polygon.hpp"

namespace tmw {

// g(t + r) has a single Newton segment with slope denominator deg g: g is
// irreducible over Q_p and totally ramified.
struct RamificationCertificate {
    bool totally_ramified = false;
    long shift = 0;
    std::vector<NewtonSegment> segments;
    std::string detail;
};

inline RamificationCertificate certify_totally_ramified(const IntPoly& g, unsigned long p) {
    RamificationCertificate c;
    auto rr = residue_roots(g, p);
    int n = g.degree();
    if (rr.size() != 1 || rr[0].second != n) {
        c.detail = "g mod p is not a single n-th power of a linear factor";
        return c;
    }
    c.shift = rr[0].first;
    c.segments = newton_polygon(g.taylor_shift(Int(c.shift)), p);
    c.totally_ramified = c.segments.size() == 1 && c.segments[0].length == n && c.segments[0].slope.get_den() == n;
    c.detail = c.totally_ramified ? "single segment, slope " + rat_str(c.segments[0].slope) : "Newton polygon does not certify";
    return c;
}

// z_1 <= floor(e ord_p(D) / 2), valid once g is known to be irreducible over Q_p (m = 1).
inline long bound_z1(long e, long ord_p_disc, bool irreducibility_certified) {
    if (!irreducibility_certified) throw DomainError("bound_z1 needs an irreducibility certificate for g over Q_p");
    if (e < 0 || ord_p_disc < 0) throw DomainError("bound_z1 needs nonnegative arguments");
    return (e * ord_p_disc) / 2;
}

// t^4 + c3 t^3 + c2 t^2 + c1 t + c0 annihilating th2 - th1 when th_i^2 + a_i th_i + b_i = 0.
template <class T>
std::array<T, 4> difference_quartic(const T& a1, const T& b1, const T& a2, const T& b2) {
    T two = a1 * 0 + 2;
    T three = a1 * 0 + 3;
    T c3 = two * (a2 - a1);
    T c2 = a2 * a2 + a1 * a1 - three * a1 * a2 + two * b2 + two * b1;
    T c1 = a1 * a1 * a2 - a2 * a2 * a1 - two * b2 * a1 - two * a1 * b1 + two * a2 * b2 + two * b1 * a2;
    T c0 = b2 * b2 + b1 * b1 + b2 * a1 * a1 + b1 * a2 * a2 - b2 * a1 * a2 - b1 * a1 * a2 - two * b2 * b1;
    return {c3, c2, c1, c0};
}

inline std::array<PadicScalar, 4> difference_quartic(const PadicScalar& a1, const PadicScalar& b1, const PadicScalar& a2,
                                                     const PadicScalar& b2) {
    unsigned long p = a1.prime();
    long n = std::min({a1.absprec(), b1.absprec(), a2.absprec(), b2.absprec()});
    PadicScalar two = PadicScalar::from_int(2, p, n), three = PadicScalar::from_int(3, p, n);
    PadicScalar c3 = two * (a2 - a1);
    PadicScalar c2 = a2 * a2 + a1 * a1 - three * a1 * a2 + two * b2 + two * b1;
    PadicScalar c1 = a1 * a1 * a2 - a2 * a2 * a1 - two * b2 * a1 - two * a1 * b1 + two * a2 * b2 + two * b1 * a2;
    PadicScalar c0 = b2 * b2 + b1 * b1 + b2 * a1 * a1 + b1 * a2 * a2 - b2 * a1 * a2 - b1 * a1 * a2 - two * b2 * b1;
    return {c3, c2, c1, c0};
}

// h(t) = q(t + r) for a monic quadratic q = t^2 + a t + b: (2r + a, r^2 + a r + b).
inline std::pair<PadicScalar, PadicScalar> shifted_quadratic(const PadicScalar& a, const PadicScalar& b, const PadicScalar& r) {
    PadicScalar two = PadicScalar::from_int(2, a.prime(), a.absprec());
    return {two * r + a, r * r + a * r + b};
}

// Inputs of the Prime Ideal Removing Lemma for primes P_1..P_k above p.
struct RemovingLemmaInput {
    std::vector<int> e;                              // ramification indices
    std::vector<std::optional<Rat>> intra_ord;       // ord(th_i^(1) - th_i^(2)); empty for degree-1 factors
    // ord(th_i - th_j) for i < j; nullopt means the difference vanished (identical factors)
    std::vector<std::vector<std::optional<Rat>>> pair_ord;
};

// One component per prime: a fixed exponent or nullopt for an unbounded slot.
using WPattern = std::vector<std::optional<long>>;

struct ExponentConstraints {
    std::vector<WPattern> patterns;
    std::vector<std::string> derivation;
    std::optional<std::size_t> unbounded_slot;
};

inline std::string pattern_str(const WPattern& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i] ? std::to_string(*w[i]) : "*";
    }
    return s + ")";
}

inline ExponentConstraints removing_lemma_constraints(const RemovingLemmaInput& in) {
    ExponentConstraints out;
    std::size_t k = in.e.size();
    if (in.intra_ord.size() != k || in.pair_ord.size() != k) throw DomainError("removing lemma input has inconsistent sizes");
    // min(w_i, w_j) <= m_ij
    std::vector<std::vector<long>> m(k, std::vector<long>(k, -1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto& o = in.pair_ord[i][j];
            std::string name = "ord(th" + std::to_string(i + 1) + " - th" + std::to_string(j + 1) + ")";
            if (!o) throw DomainError(name + " is infinite (identical local factors); the lemma does not apply");
            if (*o < 0) throw DomainError(name + " is negative; roots must be integral");
            Rat v = Rat(std::max(in.e[i], in.e[j])) * *o;
            if (!is_integer(v)) throw DomainError("max(e_i, e_j) " + name + " = " + rat_str(v) + " is not an integer");
            m[i][j] = m[j][i] = v.get_num().get_si();
            out.derivation.push_back("max(e) * " + name + " = " + rat_str(v) + ": min(w" + std::to_string(i + 1) + ", w" +
                                     std::to_string(j + 1) + ") <= " + rat_str(v));
        }
    // caps from statement (ii): w_i > m_ij forces w_i <= e_i ord(th_i^(1) - th_i^(2))
    std::vector<std::optional<long>> cap(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!in.intra_ord[i]) continue;
        Rat bound = Rat(in.e[i]) * *in.intra_ord[i];
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i || m[i][j] < 1) continue;
            if (bound <= Rat(m[i][j])) {
                cap[i] = cap[i] ? std::min(*cap[i], m[i][j]) : m[i][j];
                out.derivation.push_back("w" + std::to_string(i + 1) + " > " + std::to_string(m[i][j]) + " would force w" +
                                         std::to_string(i + 1) + " <= " + rat_str(bound) + ": w" + std::to_string(i + 1) +
                                         " <= " + std::to_string(m[i][j]));
            }
        }
    }
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < k; ++i)
        if (!cap[i]) open.push_back(i);
    if (open.size() > 1) throw DomainError("more than one exponent is left unbounded; the lemma gives no finite pattern list");
    if (!open.empty()) out.unbounded_slot = open.front();

    // enumerate bounded slots; the open slot is 0 or "large" (represented as m_max + 1)
    long large = 0;
    for (auto& row : m)
        for (long v : row) large = std::max(large, v);
    large += 1;
    std::vector<std::vector<long>> cands;
    std::vector<long> w(k, 0);
    auto ok = [&](const std::vector<long>& x) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (std::min(x[i], x[j]) > m[i][j]) return false;
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            if (ok(w)) cands.push_back(w);
            return;
        }
        std::vector<long> vals;
        if (cap[i])
            for (long v = 0; v <= *cap[i]; ++v) vals.push_back(v);
        else
            vals = {0, large};
        for (long v : vals) {
            w[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    // a pattern with the open slot large absorbs its twin with the slot 0
    for (auto& c : cands) {
        WPattern p;
        bool has_large = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (out.unbounded_slot && i == *out.unbounded_slot && c[i] == large) {
                p.push_back(std::nullopt);
                has_large = true;
            } else {
                p.push_back(c[i]);
            }
        }
        if (!has_large && out.unbounded_slot) {
            std::vector<long> twin = c;
            twin[*out.unbounded_slot] = large;
            if (ok(twin)) continue;
        }
        out.patterns.push_back(p);
    }
    std::sort(out.patterns.begin(), out.patterns.end(), [](const WPattern& a, const WPattern& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            long x = a[i] ? *a[i] : -1, y = b[i] ? *b[i] : -1;
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

struct AlphaChoice {
    int kind = 0;  // 0: pi_2^5 pi_31^4 pi_5^z1, 1: pi_2^5 pi_32 pi_5^z1
    long z1 = 0;
    std::string str() const {
        return std::string("pi2^5*") + (kind == 0 ? "pi31^4" : "pi32") + "*pi5^" + std::to_string(z1);
    }
};

struct RhsFamilies {
    std::vector<Int> intermediate_rhs;
    std::vector<std::pair<long, long>> intermediate_exponents;  // (z1, z2)
    std::vector<AlphaChoice> alphas;
};

inline Int thue_rhs(long z1, long z2) {
    return Int(-32 * 81) * ipow(Int(5), static_cast<unsigned long>(z1)) * ipow(Int(11), static_cast<unsigned long>(z2));
}

// z2 = w1 + w2 in {1, 2} for the bounded patterns; alpha over both ideal factorizations.
inline RhsFamilies rhs_families(long z1_bound, const std::vector<long>& z2_values = {1, 2}) {
    RhsFamilies r;
    for (long z1 = 0; z1 <= z1_bound; ++z1)
        for (long z2 : z2_values) {
            r.intermediate_rhs.push_back(thue_rhs(z1, z2));
            r.intermediate_exponents.emplace_back(z1, z2);
        }
    for (int kind = 0; kind < 2; ++kind)
        for (long z1 = 0; z1 <= z1_bound; ++z1) r.alphas.push_back({kind, z1});
    return r;
}

}  // namespace tmw
