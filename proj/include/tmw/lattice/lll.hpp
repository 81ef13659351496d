#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tmw/numeric/bigint.hpp"

namespace tmw {

using IntVec = std::vector<Int>;

// Basis given as columns.
struct IntegerLattice {
    std::vector<IntVec> basis;
    std::size_t dim() const { return basis.size(); }
};

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> bstar_sq;
};

inline GramSchmidt gram_schmidt(const std::vector<IntVec>& b) {
    std::size_t n = b.size();
    GramSchmidt g;
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    g.bstar_sq.assign(n, Rat(0));
    std::vector<std::vector<Rat>> bs(n);
    for (std::size_t i = 0; i < n; ++i) {
        bs[i].assign(b[i].begin(), b[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            Rat d = 0;
            for (std::size_t k = 0; k < b[i].size(); ++k) d += Rat(b[i][k]) * bs[j][k];
            g.mu[i][j] = d / g.bstar_sq[j];
            for (std::size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= g.mu[i][j] * bs[j][k];
        }
        Rat s = 0;
        for (auto& x : bs[i]) s += x * x;
        if (s == 0) throw DomainError("lattice basis is linearly dependent");
        g.bstar_sq[i] = s;
        g.mu[i][i] = 1;
    }
    return g;
}

struct LLLCheck {
    bool size_reduced = true;
    bool lovasz = true;
    bool same_lattice = true;
    std::string detail;
    bool ok() const { return size_reduced && lovasz && same_lattice; }
};

struct LLLResult {
    IntegerLattice reduced;
    std::vector<IntVec> transform;  // reduced[i] = sum_j transform[i][j] * input[j]
    LLLCheck check;
};

inline Int det_int(std::vector<std::vector<Rat>> a) {
    std::size_t n = a.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d.get_num();
}

// Post-hoc verification in exact arithmetic: |mu_ij| <= 1/2, Lovasz with delta, and
// reduced = U input with |det U| = 1.
inline LLLCheck verify_lll(const IntegerLattice& input, const IntegerLattice& reduced, const std::vector<IntVec>& U,
                           const Rat& delta = make_rat(3, 4)) {
    LLLCheck c;
    auto g = gram_schmidt(reduced.basis);
    std::size_t n = reduced.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (abs(g.mu[i][j]) > make_rat(1, 2)) {
                c.size_reduced = false;
                c.detail = "mu[" + std::to_string(i) + "][" + std::to_string(j) + "] exceeds 1/2";
            }
    for (std::size_t k = 1; k < n; ++k)
        if (g.bstar_sq[k] < (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bstar_sq[k - 1]) {
            c.lovasz = false;
            c.detail = "Lovasz condition fails at " + std::to_string(k);
        }
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i][j] = Rat(U[i][j]);
    Int d = det_int(u);
    if (d != 1 && d != -1) {
        c.same_lattice = false;
        c.detail = "transform is not unimodular";
    }
    for (std::size_t i = 0; i < n && c.same_lattice; ++i) {
        IntVec v(input.basis[0].size(), Int(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += U[i][j] * input.basis[j][k];
        if (v != reduced.basis[i]) {
            c.same_lattice = false;
            c.detail = "transform does not reproduce the reduced basis";
        }
    }
    return c;
}

// Exact LLL (delta = 3/4 by default) with rational Gram-Schmidt data updated in place.
inline LLLResult lll_reduce(const IntegerLattice& lat, const Rat& delta = make_rat(3, 4)) {
    std::size_t n = lat.dim();
    if (n == 0) throw DomainError("empty lattice");
    std::vector<IntVec> b = lat.basis;
    std::vector<IntVec> U(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    GramSchmidt g = gram_schmidt(b);
    auto& mu = g.mu;
    auto& B = g.bstar_sq;

    auto reduce = [&](std::size_t k, std::size_t l) {
        if (abs(mu[k][l]) <= make_rat(1, 2)) return;
        Int q = round_nearest(mu[k][l]);
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
        for (std::size_t t = 0; t < n; ++t) U[k][t] -= q * U[l][t];
        for (std::size_t j = 0; j < l; ++j) mu[k][j] -= Rat(q) * mu[l][j];
        mu[k][l] -= Rat(q);
    };

    std::size_t k = 1;
    while (k < n) {
        reduce(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            Rat m = mu[k][k - 1];
            Rat Bn = B[k] + m * m * B[k - 1];
            Rat mnew = m * B[k - 1] / Bn;
            Rat Bk = B[k - 1] * B[k] / Bn;
            std::swap(b[k], b[k - 1]);
            std::swap(U[k], U[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            B[k - 1] = Bn;
            B[k] = Bk;
            mu[k][k - 1] = mnew;
            for (std::size_t i = k + 1; i < n; ++i) {
                Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mnew * mu[i][k];
            }
            if (k > 1) --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
            ++k;
        }
    }
    LLLResult r;
    r.reduced.basis = b;
    r.transform = U;
    r.check = verify_lll(lat, r.reduced, U, delta);
    if (!r.check.ok()) throw DomainError("LLL post-check failed: " + r.check.detail);
    return r;
}

// Solves sum_j s_j b_j = y over Q.
inline std::vector<Rat> solve_in_basis(const IntegerLattice& L, const IntVec& y) {
    std::size_t n = L.dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(L.basis[j][i]);
        a[i][n] = Rat(y[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw DomainError("singular lattice basis");
        std::swap(a[p], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rat> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = a[i][n] / a[i][i];
    return s;
}

struct LatticeBound {
    Rat ell_sq;              // certified lower bound for l(L, y)^2
    Int c1_sq;               // |c_1|^2
    Rat dist;                // distance of s_j0 to the nearest integer
    long j0 = -1;            // -1 for the zero target
    bool lattice_point = false;  // the target lies in the lattice
};

// l(L, y) >= 2^{-(n-1)/2} |c_1| for y = 0, and 2^{-(n-1)/2} dist(s_j0, Z) |c_1| otherwise,
// j0 the largest index with s_j0 not an integer. Returned squared, exactly.
inline LatticeBound lattice_lower_bound(const IntegerLattice& reduced, const IntVec& target) {
    LatticeBound r;
    std::size_t n = reduced.dim();
    r.c1_sq = dot(reduced.basis[0], reduced.basis[0]);
    Rat scale = make_rat(1, ipow(Int(2), n - 1));
    bool zero = std::all_of(target.begin(), target.end(), [](const Int& v) { return v == 0; });
    if (zero) {
        r.dist = 1;
        r.ell_sq = scale * Rat(r.c1_sq);
        return r;
    }
    auto s = solve_in_basis(reduced, target);
    for (std::size_t j = n; j-- > 0;)
        if (!is_integer(s[j])) {
            r.j0 = static_cast<long>(j);
            break;
        }
    if (r.j0 < 0) {
        r.lattice_point = true;
        r.dist = 0;
        r.ell_sq = 0;
        return r;
    }
    r.dist = dist_to_int(s[r.j0]);
    r.ell_sq = scale * r.dist * r.dist * Rat(r.c1_sq);
    return r;
}

}  // namespace tmw
