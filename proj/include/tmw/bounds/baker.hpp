#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmw/numeric/fixed_real.hpp"

namespace tmw {

// Numeric helpers at a fixed working precision ------------------------------

namespace bnum {

constexpr long kPrec = 60;

inline FixedReal num(long v) { return FixedReal::from_int(v, kPrec); }
inline FixedReal num(const Rat& q) { return FixedReal::from_rational(q, kPrec); }
inline FixedReal ln(const FixedReal& x) { return real_log(x, kPrec); }
inline FixedReal powr(const FixedReal& x, const FixedReal& y) { return exp(y * ln(x)); }
inline FixedReal e() { return e_const(kPrec); }
inline FixedReal fact(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return FixedReal::from_int(r, kPrec);
}
// upper end of the enclosure
inline FixedReal up(const FixedReal& x) { return FixedReal(x.mantissa() + x.error_ulps(), x.precision(), 0); }
inline FixedReal down(const FixedReal& x) { return FixedReal(x.mantissa() - x.error_ulps(), x.precision(), 0); }

}  // namespace bnum

// Yu ------------------------------------------------------------------------

struct YuParameters {
    int n = 0;
    int D = 0, d = 0;
    unsigned long p = 0;
    int e_P = 1, f_P = 1, f = 1;
    Rat tau;
    long kappa = 0;
    int Q = 1;
    std::array<Rat, 6> k{};  // kappa_1 .. kappa_6
    std::vector<FixedReal> heights;
    std::string case_row;
    // filled by yu_c10
    FixedReal c2, c3a, c3b, c10;
};

// Smallest integer k with p^k >= 2 e / (p - 1), i.e. ceil(log(2e/(p-1)) / log p).
inline long yu_kappa(unsigned long p, int e) {
    Rat r = make_rat(Int(2 * e), Int(static_cast<long>(p - 1)));
    long k = 0;
    auto pk = [&](long kk) { return kk >= 0 ? Rat(ipow(Int(p), kk)) : make_rat(1, ipow(Int(p), -kk)); };
    while (pk(k) < r) ++k;
    while (pk(k - 1) >= r) --k;
    return k;
}

// Case selection. Roots of unity flags are consulted only in the branches that need them.
inline YuParameters yu_parameters(int n, int D, unsigned long p, int e_P, int f_P, std::vector<FixedReal> heights,
                                  std::optional<bool> cube_root_of_unity_in_K = std::nullopt,
                                  std::optional<bool> fourth_root_of_unity_in_K = std::nullopt) {
    if (n < 2) throw DomainError("Yu's theorem needs n >= 2");
    if (static_cast<int>(heights.size()) != n) throw DomainError("Yu's theorem needs one height per algebraic number");
    if (!is_prime(p)) throw DomainError("p must be prime");
    YuParameters y;
    y.n = n;
    y.D = D;
    y.p = p;
    y.e_P = e_P;
    y.f_P = f_P;
    y.heights = std::move(heights);
    Int pf = ipow(Int(p), f_P);
    auto need = [](const std::optional<bool>& b, const char* what) {
        if (!b) throw DomainError(std::string("case selection needs to know whether ") + what + " lies in K");
        return *b;
    };
    if (p == 2) {
        bool in = need(cube_root_of_unity_in_K, "a primitive cube root of unity");
        y.d = in ? D : 2 * D;
        y.f = in ? f_P : std::max(2, f_P);
    } else if (mod(pf, 4) == 3) {
        y.d = D;
        y.f = f_P;
    } else {
        bool in = need(fourth_root_of_unity_in_K, "a primitive fourth root of unity");
        y.d = in ? D : 2 * D;
        y.f = (in || p % 4 == 1) ? f_P : std::max(2, f_P);
    }
    y.tau = make_rat(Int(static_cast<long>(p - 1)), Int(static_cast<long>(p - 2)));
    y.kappa = yu_kappa(p, e_P);
    Int pff = ipow(Int(p), y.f);
    y.Q = p == 2 ? 3 : (mod(pff, 4) == 1 ? 4 : 1);
    auto set = [&](const char* row, Rat a, Rat b, Rat c, Rat dd, Rat e, Rat f) {
        y.k = {a, b, c, dd, e, f};
        y.case_row = row;
    };
    const Rat t = y.tau;
    if (p == 2) set("p=2", 160, 32, 40, 276, 16, 8);
    else if (p == 3 && y.d >= 2) set("p=3, d>=2", 759, 16, 20, 1074, 8, 4);
    else if (p == 3) set("p=3, d=1", 537, 16, 20, 532, 8, 4);
    else if (e_P == 1 && p % 4 == 1) set("p>=5, e=1, p=1 mod 4", 1473, 8 * t, 10, 394 * t, 8, 4);
    else if (e_P == 1 && y.d >= 2) set("p>=5, e=1, p=3 mod 4, d>=2", 1282, 8 * t, 10, 366 * t, 8, 4);
    else if (e_P == 1) set("p>=5, e=1, p=3 mod 4, d=1", 1288, 8 * t, 10, 396 * t, 8, 4);
    else if (p == 5) set("p=5, e>=2", 319, 16, 20, 402, 8, 4);
    else if (p % 4 == 1) set("p>=7, e>=2, p=1 mod 4", 1502, 16, 20, 1372, 8, 4);
    else set("p>=7, e>=2, p=3 mod 4", 2190, 16, 20, 1890, 8, 4);
    return y;
}

inline FixedReal yu_c10(YuParameters& y) {
    using namespace bnum;
    const int n = y.n;
    FixedReal E = e();
    FixedReal lp = ln(num(static_cast<long>(y.p)));
    FixedReal flp = lp * y.f;
    FixedReal d = num(y.d);
    FixedReal pf = num(ipow(Int(y.p), y.f));
    FixedReal logd = ln(d);
    FixedReal c2 = pow_int(num(n + 1), n + 2) * pow_int(d, n + 2) / fact(n - 1) * pf / pow_int(flp, 3);
    c2 = c2 * max(num(1), logd);
    FixedReal inner = max(max(ln(pow_int(E, 4) * num(n + 1) * d), num(y.e_P)), flp);
    c2 = c2 * inner;

    FixedReal k1 = num(y.k[0]), k2 = num(y.k[1]), k3 = num(y.k[2]), k4 = num(y.k[3]), k5 = num(y.k[4]), k6 = num(y.k[5]);
    FixedReal c3a = k1 * pow_int(k2, n) * pow_int(num(n) / flp, n - 1);
    FixedReal pk = y.kappa >= 0 ? num(ipow(Int(y.p), y.kappa)) : num(make_rat(1, ipow(Int(y.p), -y.kappa)));
    FixedReal c3b = k4 * pow_int(E * k5, n) * pow_int(pk, n - 1);
    FixedReal floor_a = flp / (k3 * num(n + 4) * d);
    FixedReal floor_b = num(1) / (pow_int(E, 2) * k6 * pk * d);
    for (auto& h : y.heights) {
        FixedReal hh = up(h.with_precision(kPrec));
        c3a = c3a * max(hh, floor_a);
        c3b = c3b * max(hh, floor_b);
    }
    y.c2 = up(c2);
    y.c3a = up(c3a);
    y.c3b = up(c3b);
    y.c10 = up(c2 * min(c3a, c3b) / num(static_cast<long>(y.Q * y.e_P)));
    return y.c10;
}

// n_1 <= c13 (log H + c14) from the maxima of c'_10, c'_11 and the class exponent h.
inline std::pair<FixedReal, FixedReal> padic_exponent_bound(const std::vector<FixedReal>& c10_values, const FixedReal& c11 = bnum::num(0),
                                                           long h = 1) {
    if (c10_values.empty()) throw DomainError("padic_exponent_bound needs at least one c'_10");
    FixedReal m = c10_values.front();
    for (auto& v : c10_values) m = max(m, v);
    return {m * h, c11};
}

// Matveev -------------------------------------------------------------------

struct MatveevParameters {
    int n = 0;
    int D = 0;
    int kappa = 1;
    std::vector<FixedReal> A;  // A_n belongs to the coefficient known to be nonzero
    FixedReal Aratio, Omega, c7, c8;
};

// A_i = max(D h_i, |log alpha_i|), checked against the lower bound.
inline MatveevParameters matveev_parameters(const std::vector<FixedReal>& heights, const std::vector<FixedReal>& abs_logs, int D,
                                            bool all_real, const std::vector<FixedReal>& A_override = {}) {
    if (heights.size() != abs_logs.size() || heights.empty()) throw DomainError("Matveev parameters need matching lists");
    MatveevParameters m;
    m.n = static_cast<int>(heights.size());
    m.D = D;
    m.kappa = all_real ? 1 : 2;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        FixedReal lb = max(bnum::up(heights[i].with_precision(bnum::kPrec)) * D, bnum::up(abs_logs[i].with_precision(bnum::kPrec)));
        if (!A_override.empty()) {
            if (A_override.at(i).center() < lb.center()) throw DomainError("A_" + std::to_string(i + 1) + " is below max(D h, |log alpha|)");
            m.A.push_back(A_override[i]);
        } else {
            m.A.push_back(lb);
        }
    }
    return m;
}

inline std::pair<FixedReal, FixedReal> matveev_c7_c8(MatveevParameters& m) {
    using namespace bnum;
    const int n = m.n, k = m.kappa;
    FixedReal E = e();
    FixedReal D = num(m.D);
    FixedReal Omega = num(1), Amax = m.A.front();
    for (auto& a : m.A) {
        Omega = Omega * a;
        Amax = max(Amax, a);
    }
    FixedReal logeD = ln(E * D);
    FixedReal c7 = num(16) / (fact(n) * num(k)) * pow_int(E, n) * num(2 * n + 1 + 2 * k) * num(n + 2) * pow_int(num(4 * (n + 1)), n + 1) *
                   pow_int(E * num(n) / num(2), k);
    FixedReal inner = exp(num(make_rat(Int(44 * n + 70), 10))) * powr(num(n), num(make_rat(11, 2))) * D * D * logeD;
    c7 = c7 * ln(inner) * D * D * Omega;
    m.Omega = up(Omega);
    m.Aratio = up(Amax / m.A.back());
    FixedReal c8 = ln(num(make_rat(3, 2)) * E * D * logeD * m.Aratio);
    m.c7 = up(c7);
    m.c8 = up(c8);
    return {m.c7, m.c8};
}

// Bound state ---------------------------------------------------------------

enum class Provenance { Computed, Checkpoint };

inline const char* provenance_str(Provenance p) { return p == Provenance::Computed ? "computed" : "checkpoint"; }

struct TaggedConstant {
    std::string value;  // decimal string
    Provenance provenance = Provenance::Computed;
};

struct BoundState {
    std::map<std::string, TaggedConstant> constants;
    FixedReal K, N;  // bounds on H and n_1
    std::vector<std::string> notes;

    void set(const std::string& name, const std::string& v, Provenance p) { constants[name] = {v, p}; }
    FixedReal value(const std::string& name) const {
        auto it = constants.find(name);
        if (it == constants.end()) throw DomainError("bound state has no constant " + name);
        return FixedReal::from_string(it->second.value, bnum::kPrec);
    }
    bool has(const std::string& name) const { return constants.count(name) > 0; }
};

class CheckpointIntegrityError : public DomainError {
public:
    using DomainError::DomainError;
};

// The companion chain's reported constants, ingested as data.
inline BoundState checkpoint_state() {
    BoundState s;
    s.set("c13", "9.99e30", Provenance::Checkpoint);
    s.set("c14", "0", Provenance::Checkpoint);
    s.set("c16", "0.129", Provenance::Checkpoint);
    s.set("c22", "14", Provenance::Checkpoint);
    s.set("c27", "3.906653", Provenance::Checkpoint);
    s.set("K0", "1.3217e43", Provenance::Checkpoint);
    s.set("N0", "9.918312e32", Provenance::Checkpoint);
    return s;
}

// Checkpoint mode: N_0 must equal c13 (log K_0 + c14) to within `rel_tol`; the pair (K_0, N_0) is adopted.
inline std::pair<FixedReal, FixedReal> combine_to_initial_bounds(BoundState& s, const Rat& rel_tol = make_rat(1, 10000)) {
    using namespace bnum;
    FixedReal K0 = s.value("K0"), N0 = s.value("N0");
    FixedReal c13 = s.value("c13"), c14 = s.value("c14");
    FixedReal N = c13 * (ln(K0) + c14);
    FixedReal rel = ((N - N0) / N0).abs();
    if (rel.center() > rel_tol)
        throw CheckpointIntegrityError("c13 (log K0 + c14) = " + N.to_sci(8) + " does not reproduce N0 = " + N0.to_sci(8));
    s.K = K0;
    s.N = N0;
    s.notes.push_back("H > c22 = " + s.constants["c22"].value + " assumed by the real-case analysis");
    s.notes.push_back("|Lambda| <= c27 exp(-c16 max|a_i|) with c16 = " + s.constants["c16"].value + ", c27 = " +
                      s.constants["c27"].value);
    return {K0, N0};
}

}  // namespace tmw
