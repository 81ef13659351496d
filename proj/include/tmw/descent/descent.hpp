#pragma once

#include <string>
#include <vector>

#include "tmw/numeric/polynomial.hpp"

namespace tmw {

// s + t rho in Z[rho], rho^2 = rho - 14.
struct QuadInt {
    Int s = 0, t = 0;

    friend QuadInt operator+(const QuadInt& a, const QuadInt& b) { return {a.s + b.s, a.t + b.t}; }
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b) { return {a.s - b.s, a.t - b.t}; }
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b) {
        Int u = a.t * b.t;
        return {a.s * b.s - 14 * u, a.s * b.t + a.t * b.s + u};
    }
    friend bool operator==(const QuadInt& a, const QuadInt& b) { return a.s == b.s && a.t == b.t; }

    QuadInt pow(unsigned n) const {
        QuadInt r{1, 0}, b = *this;
        while (n) {
            if (n & 1) r = r * b;
            n >>= 1;
            if (n) b = b * b;
        }
        return r;
    }
    Int norm() const { return s * s + s * t + 14 * t * t; }
};

// Binary forms of degree n, coefficient of u^(n-i) v^i at index i.
using BinaryForm = std::vector<Int>;

inline Int eval_form(const BinaryForm& f, const Int& u, const Int& v) {
    Int r = 0;
    int n = static_cast<int>(f.size()) - 1;
    for (int i = 0; i <= n; ++i) r += f[i] * ipow(u, n - i) * ipow(v, i);
    return r;
}

struct BinaryFormPair {
    int n = 0;
    BinaryForm z_form;  // value -32 Z
    BinaryForm x_form;  // value -32 X
};

// (1 + rho)(X - Z + 2 Z rho) = (2 - rho)(u + v rho)^n. The left side is X (1 + rho) + Z (-29 + 3 rho);
// equating rational and rho parts against A(u,v) + B(u,v) rho and solving for X, Z gives the forms.
inline BinaryFormPair expand_descent_identity(int n) {
    if (n < 1 || n % 2 == 0) throw DomainError("descent identity needs odd n");
    const QuadInt lead{2, -1}, one_rho{1, 1}, zdir{-1, 2};
    QuadInt cx = one_rho, cz = one_rho * zdir;
    // (u + v rho)^n = sum binom(n,i) u^(n-i) v^i rho^i
    std::vector<Int> A(n + 1), B(n + 1);
    QuadInt rho_i{1, 0};
    Int binom = 1;
    for (int i = 0; i <= n; ++i) {
        QuadInt term = lead * rho_i;
        A[i] = binom * term.s;
        B[i] = binom * term.t;
        rho_i = rho_i * QuadInt{0, 1};
        binom = binom * (n - i) / (i + 1);
    }
    // [cx.s cz.s; cx.t cz.t] (X, Z) = (A, B)
    Int det = cx.s * cz.t - cz.s * cx.t;
    BinaryFormPair out;
    out.n = n;
    for (int i = 0; i <= n; ++i) {
        Int xnum = A[i] * cz.t - cz.s * B[i];
        Int znum = cx.s * B[i] - A[i] * cx.t;
        // det = 32; the forms are -32 Z and -32 X
        if ((znum * 32) % det != 0 || (xnum * 32) % det != 0) throw DomainError("descent forms are not integral");
        out.z_form.push_back(-znum * 32 / det);
        out.x_form.push_back(-xnum * 32 / det);
    }
    return out;
}

// Monic dehomogenization of lead^(n-1) Z-form(x/lead, y): coefficient c_i lead^(i-1).
inline IntPoly scale_to_thue_form(const BinaryFormPair& pair, const Int& expected_lead = 3) {
    const BinaryForm& z = pair.z_form;
    Int l = z.at(0);
    if (l != expected_lead) throw DomainError("Z-form leading coefficient " + to_dec(l) + " differs from " + to_dec(expected_lead));
    int n = pair.n;
    std::vector<Int> c(n + 1);
    c[n] = 1;
    for (int i = 1; i <= n; ++i) c[n - i] = z[i] * ipow(l, i - 1);
    return IntPoly(std::move(c));
}

// Homogeneous form value F(x, y) = y^n f(x / y) for a low-first polynomial f.
inline Int homogeneous_eval(const IntPoly& f, const Int& x, const Int& y) {
    int n = f.degree();
    Int r = 0;
    for (int i = 0; i <= n; ++i) r += f.coeff(i) * ipow(x, i) * ipow(y, n - i);
    return r;
}

struct SolutionCheck {
    bool ok = false;
    std::string reason;
};

inline SolutionCheck verify_solution(long n, long a, long b, const Int& x, const Int& y) {
    if (n < 3 || a < 0 || b < 0) return {false, "arguments out of range"};
    if (x < 1 || y < 1) return {false, "x and y must be positive"};
    if (gcd(x, y) != 1) return {false, "gcd(x, y) != 1"};
    Int lhs = x * x + ipow(Int(5), static_cast<unsigned long>(a)) * ipow(Int(11), static_cast<unsigned long>(b));
    Int rhs = ipow(y, static_cast<unsigned long>(n));
    if (lhs != rhs) return {false, to_dec(lhs) + " != " + to_dec(rhs)};
    return {true, to_dec(x) + "^2 + 5^" + std::to_string(a) + " 11^" + std::to_string(b) + " = " + to_dec(y) + "^" + std::to_string(n)};
}

}  // namespace tmw
