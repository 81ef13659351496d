#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "tmw/numeric/fixed_real.hpp"

namespace tmw {

using Perm5 = std::array<int, 5>;
using Triple = std::array<int, 3>;

// The Galois group of a quintic with group of order 20, as permutations of the
// 0-based root labels: sigma sends theta_i to theta_{sigma[i]}.
struct GaloisAction {
    std::vector<Perm5> elements;
    FixedReal resolvent;  // the invariant used for identification
    Rat resolvent_gap;    // distance of the runner-up invariant to its nearest integer

    // The unique involution fixing a.
    const Perm5& involution_fixing(int a) const {
        for (auto& s : elements)
            if (s[a] == a && s != identity() && std::all_of(s.begin(), s.end(), [&](int i) { return s[s[i]] == i; })) return s;
        throw DomainError("no involution fixes the given root");
    }

    std::vector<Triple> orbit(const Triple& t) const {
        std::set<Triple> out;
        for (auto& s : elements) out.insert({s[t[0]], s[t[1]], s[t[2]]});
        return {out.begin(), out.end()};
    }

    // Conjugate labels of x_k / x_j: the orbit of (j, k) is every ordered pair.
    std::vector<std::pair<int, int>> pair_orbit(int j, int k) const {
        std::set<std::pair<int, int>> out;
        for (auto& s : elements) out.insert({s[j], s[k]});
        return {out.begin(), out.end()};
    }

    static Perm5 identity() { return {0, 1, 2, 3, 4}; }
};

namespace detail {

inline std::vector<Perm5> affine_group_mod5() {
    std::vector<Perm5> g;
    for (int a = 1; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            Perm5 s;
            for (int x = 0; x < 5; ++x) s[x] = (a * x + b) % 5;
            g.push_back(s);
        }
    return g;
}

inline Rat dist_to_int(const FixedReal& x) {
    Rat c = x.center();
    Int r = round_div(c.get_num(), c.get_den());
    return abs(c - Rat(r));
}

}  // namespace detail

// Among the six conjugates of AGL(1,5) in S_5, the Galois group is the one whose
// invariant sum_{s} x_{s0} x_{s1}^2 x_{s2}^3 x_{s3}^4 is an integer.
inline GaloisAction identify_galois_group(const std::vector<FixedReal>& roots) {
    if (roots.size() != 5) throw DomainError("identify_galois_group needs five roots");
    std::vector<Perm5> base = detail::affine_group_mod5();
    std::set<std::vector<Perm5>> groups;
    Perm5 tau = GaloisAction::identity();
    do {
        std::vector<Perm5> g;
        for (auto& s : base) {
            Perm5 c;
            for (int x = 0; x < 5; ++x) c[tau[x]] = tau[s[x]];
            g.push_back(c);
        }
        std::sort(g.begin(), g.end());
        groups.insert(g);
    } while (std::next_permutation(tau.begin(), tau.end()));

    struct Cand {
        std::vector<Perm5> g;
        FixedReal inv;
        Rat dist;
    };
    std::vector<Cand> cands;
    for (auto& g : groups) {
        FixedReal sum = FixedReal::from_int(0, roots[0].precision());
        for (auto& s : g) {
            FixedReal m = roots[s[0]];
            for (int e = 2; e <= 4; ++e) m = m * pow_int(roots[s[e - 1]], e);
            sum = sum + m;
        }
        cands.push_back({g, sum, detail::dist_to_int(sum)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.dist < b.dist; });
    const Cand& best = cands.front();
    Rat tol = best.inv.radius() * 4 + make_rat(1, pow10(roots[0].precision() / 2));
    if (best.dist > tol) throw PrecisionError("no conjugate of AGL(1,5) gives an integral invariant");
    if (cands.size() > 1 && cands[1].dist <= tol) throw PrecisionError("Galois group identification is ambiguous");
    GaloisAction G;
    G.elements = best.g;
    G.resolvent = best.inv;
    G.resolvent_gap = cands.size() > 1 ? cands[1].dist : Rat(1);
    return G;
}

}  // namespace tmw
