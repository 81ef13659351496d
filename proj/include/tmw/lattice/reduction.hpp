#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmw/bounds/baker.hpp"
#include "tmw/bounds/sunit.hpp"
#include "tmw/lattice/lll.hpp"
#include "tmw/util/parallel.hpp"

namespace tmw {

// Schedule entries: kappa with an optional pinned m (p-adic) or C (real). Unpinned values are
// derived from 11^m W = kappa K^5 and C = kappa K^5 / W'.
struct PadicScheduleEntry {
    long kappa = 100;
    std::optional<long> m;
};

struct RealScheduleEntry {
    long kappa = 100;
    std::optional<Int> C;
};

struct RadicandPolicy {
    bool require_strict = true;  // a target passes only if the strict variant passes too
};

struct TargetOutcome {
    std::string label;
    bool passed = false;
    bool printed_pass = false, strict_pass = false;
    long kappa = 0;
    Int bound = 0;
    bool lattice_point = false;
};

struct StepPass {
    long kappa = 0;
    Int parameter;  // m or C
    Int weight;     // W or W'
    long passed = 0;
    std::vector<long> first_vector_digits;
};

struct ReductionStepResult {
    std::string mode;  // "padic" or "real"
    Int K_in, N_in;
    std::vector<StepPass> passes;
    std::vector<TargetOutcome> targets;
    std::vector<std::pair<std::string, Int>> group_maxima;  // per index triple, real mode
    Int new_bound;
    bool success = false;
    long disagreements = 0;  // printed and strict radicand verdicts differ
};

inline Int ceil_ratio(const Int& a, const Int& b) { return ceil_div(a, b); }

// smallest m with 11^m W >= kappa K^5
inline long derive_m(long kappa, const Int& K, const Int& W, unsigned long p = 11) {
    Int rhs = Int(kappa) * ipow(K, 5);
    long m = 0;
    Int pm = 1;
    while (pm * W < rhs) {
        pm *= Int(p);
        ++m;
    }
    return m;
}

inline Int derive_C(long kappa, const Int& K, const Int& Wp) { return ceil_div(Int(kappa) * ipow(K, 5), Wp); }

// p-adic ---------------------------------------------------------------------

struct PadicLogSet {
    QuadExtElement lambda;
    std::array<QuadExtElement, 4> mu;
    std::vector<QuadExtElement> rho;  // per target
    std::vector<std::string> labels;
};

inline PadicLogSet padic_log_set(const PadicContext& ctx, const std::vector<AlphaChoice>& alphas, long target, unsigned threads) {
    PadicLogSet s;
    s.rho.resize(alphas.size());
    s.labels.resize(alphas.size());
    Triple t = to_zero_based({5, 1, 3});
    s.lambda = padic_ratio_log(ctx, "pi113", t, target);
    for (int i = 0; i < 4; ++i) s.mu[i] = padic_ratio_log(ctx, unit_names()[i], t, target);
    parallel_for(alphas.size(), threads, [&](std::size_t i) {
        auto inst = build_padic_instance(ctx, alphas[i]);
        s.rho[i] = padic_log(*inst.delta1_p, target);
        s.labels[i] = alphas[i].str();
    });
    return s;
}

inline const PadicScalar& coord(const QuadExtElement& x, int i) { return i == 0 ? x.x0() : x.x1(); }

// beta^(m) = the representative in [0, 11^m) of -x_i / mu4_i.
inline Int beta_entry(const QuadExtElement& x, const QuadExtElement& mu4, int i, long m) {
    const PadicScalar& d = coord(mu4, i);
    const PadicScalar& c = coord(x, i);
    if (c.is_zero()) return 0;
    if (d.is_zero()) throw PrecisionError("divisor coordinate indistinguishable from zero");
    PadicScalar q = -(c / d);
    if (q.absprec() < m) throw PrecisionError("log precision below m");
    return q.residue(m);
}

// Divisor precondition: ord(mu4_i) <= ord of every other log coordinate.
inline void check_divisor(const PadicLogSet& s, int i) {
    const PadicScalar& d = coord(s.mu[3], i);
    if (d.is_zero()) throw DomainError("mu4 coordinate " + std::to_string(i) + " vanishes");
    long v = d.valuation();
    auto chk = [&](const QuadExtElement& x, const std::string& what) {
        const PadicScalar& c = coord(x, i);
        if (!c.is_zero() && c.valuation() < v)
            throw DomainError(what + " has smaller valuation than mu4 in coordinate " + std::to_string(i) +
                              "; the lattice must be rebuilt around the minimal-valuation log");
    };
    chk(s.lambda, "lambda");
    for (int j = 0; j < 3; ++j) chk(s.mu[j], "mu" + std::to_string(j + 1));
    for (std::size_t t = 0; t < s.rho.size(); ++t) chk(s.rho[t], "rho[" + s.labels[t] + "]");
}

struct PadicLattice {
    IntegerLattice lattice;
    std::vector<IntVec> targets;
};

inline PadicLattice build_padic_lattice(long m, int i, const PadicLogSet& s, const Int& W) {
    check_divisor(s, i);
    PadicLattice L;
    Int b1 = beta_entry(s.lambda, s.mu[3], i, m);
    Int b2 = beta_entry(s.mu[0], s.mu[3], i, m);
    Int b3 = beta_entry(s.mu[1], s.mu[3], i, m);
    Int b4 = beta_entry(s.mu[2], s.mu[3], i, m);
    L.lattice.basis = {{W, 0, 0, 0, b1}, {0, 1, 0, 0, b2}, {0, 0, 1, 0, b3}, {0, 0, 0, 1, b4}, {0, 0, 0, 0, ipow(Int(11), m)}};
    for (auto& r : s.rho) L.targets.push_back({0, 0, 0, 0, -beta_entry(r, s.mu[3], i, m)});
    return L;
}

inline ReductionStepResult padic_reduction_step(const PadicLogSet& s, const Int& K, const Int& N,
                                                const std::vector<PadicScheduleEntry>& schedule, const RadicandPolicy& policy,
                                                unsigned threads) {
    ReductionStepResult res;
    res.mode = "padic";
    res.K_in = K;
    res.N_in = N;
    std::size_t T = s.rho.size();
    res.targets.resize(T);
    for (std::size_t t = 0; t < T; ++t) res.targets[t].label = s.labels[t];
    Int W = ceil_div(K, N);
    Rat thr_printed = Rat(W * N * N + 4 * K * K);
    Rat thr_strict = Rat(W * W * N * N + 4 * K * K);
    Int used = 0;
    for (auto& e : schedule) {
        std::vector<std::size_t> open;
        for (std::size_t t = 0; t < T; ++t)
            if (!res.targets[t].passed) open.push_back(t);
        if (open.empty()) break;
        long m = e.m ? *e.m : derive_m(e.kappa, K, W);
        StepPass pass;
        pass.kappa = e.kappa;
        pass.parameter = m;
        pass.weight = W;
        std::vector<LLLResult> red(2);
        std::vector<PadicLattice> lat(2);
        parallel_for(2, threads, [&](std::size_t i) {
            lat[i] = build_padic_lattice(m, static_cast<int>(i), s, W);
            red[i] = lll_reduce(lat[i].lattice);
        });
        for (auto& r : red) pass.first_vector_digits.push_back(dec_digits(dot(r.reduced.basis[0], r.reduced.basis[0])));
        std::vector<TargetOutcome> upd(open.size());
        parallel_for(open.size(), threads, [&](std::size_t oi) {
            std::size_t t = open[oi];
            TargetOutcome o = res.targets[t];
            for (int i = 0; i < 2; ++i) {
                auto lb = lattice_lower_bound(red[i].reduced, lat[i].targets[t]);
                if (lb.lattice_point) {
                    o.lattice_point = true;
                    continue;
                }
                bool p1 = lb.ell_sq > thr_printed, p2 = lb.ell_sq > thr_strict;
                o.printed_pass = o.printed_pass || p1;
                o.strict_pass = o.strict_pass || p2;
            }
            bool ok = policy.require_strict ? (o.printed_pass && o.strict_pass) : o.printed_pass;
            if (ok) {
                o.passed = true;
                o.kappa = e.kappa;
                o.bound = m;
            }
            upd[oi] = o;
        });
        for (std::size_t oi = 0; oi < open.size(); ++oi) {
            res.targets[open[oi]] = upd[oi];
            if (upd[oi].passed) {
                ++pass.passed;
                used = std::max(used, Int(m));
            }
        }
        res.passes.push_back(pass);
    }
    res.success = std::all_of(res.targets.begin(), res.targets.end(), [](const TargetOutcome& o) { return o.passed; });
    for (auto& o : res.targets)
        if (o.printed_pass != o.strict_pass) ++res.disagreements;
    res.new_bound = res.success ? std::min(used, N) : N;
    return res;
}

// real -----------------------------------------------------------------------

struct RealLogSet {
    std::vector<Triple> triples;  // 1-based
    std::vector<std::array<FixedReal, 5>> unit_logs;  // per triple: lambda, mu1..mu4
    std::vector<std::vector<FixedReal>> rho;           // per triple, per alpha
    std::vector<std::string> alpha_labels;
    long precision = 0;
};

inline RealLogSet real_log_set(const RealContext& ctx, const std::vector<AlphaChoice>& alphas, long prec, unsigned threads) {
    RealLogSet s;
    s.triples = real_triples_one_based();
    s.precision = prec;
    for (auto& a : alphas) s.alpha_labels.push_back(a.str());
    s.unit_logs.resize(s.triples.size());
    s.rho.assign(s.triples.size(), std::vector<FixedReal>(alphas.size()));
    parallel_for(s.triples.size() * alphas.size(), threads, [&](std::size_t idx) {
        std::size_t ti = idx / alphas.size(), ai = idx % alphas.size();
        RealLogs L = real_logs(ctx, alphas[ai], s.triples[ti], prec);
        s.rho[ti][ai] = L.rho;
        if (ai == 0) s.unit_logs[ti] = {L.lambda, L.mu[0], L.mu[1], L.mu[2], L.mu[3]};
    });
    return s;
}

inline Int scaled_floor(const Int& C, const FixedReal& x) {
    FixedReal y = x * FixedReal::from_int(C, x.precision());
    return y.certified_floor();
}

struct RealLattice {
    IntegerLattice lattice;
    std::vector<IntVec> targets;
};

inline RealLattice build_real_lattice(const Int& C, const Int& Wp, const std::array<FixedReal, 5>& logs, const std::vector<FixedReal>& rhos) {
    RealLattice L;
    Int phi = scaled_floor(C, logs[0]);
    Int p1 = scaled_floor(C, logs[1]), p2 = scaled_floor(C, logs[2]), p3 = scaled_floor(C, logs[3]), p4 = scaled_floor(C, logs[4]);
    L.lattice.basis = {{Wp, 0, 0, 0, phi}, {0, 1, 0, 0, p1}, {0, 0, 1, 0, p2}, {0, 0, 0, 1, p3}, {0, 0, 0, 0, p4}};
    for (auto& r : rhos) L.targets.push_back({0, 0, 0, 0, -scaled_floor(C, r)});
    return L;
}

// H <= (log c27 + log C - log(sqrt(l^2 - S) - R)) / c16, rounded up to the integer floor of the upper end.
inline std::optional<Int> real_h_bound(const Rat& ell_sq, const Int& R, const Int& S, const Int& C, const FixedReal& c16,
                                       const FixedReal& c27) {
    Rat rad = ell_sq - Rat(S);
    if (rad <= 0) return std::nullopt;
    const long P = bnum::kPrec;
    // lower end of sqrt(l^2 - S) - R
    FixedReal root = bnum::down(sqrt(FixedReal::from_rational(rad, P + 10)));
    FixedReal gap = bnum::down(root - FixedReal::from_int(R, P + 10));
    if (!gap.certainly_positive()) return std::nullopt;
    FixedReal v = (real_log(c27, P) + real_log(FixedReal::from_int(C, P), P) - real_log(gap, P)) / c16;
    return tmw::floor(bnum::up(v).center());
}

inline ReductionStepResult real_reduction_step(const RealLogSet& s, const Int& K, const Int& N, const std::vector<RealScheduleEntry>& schedule,
                                               const FixedReal& c16, const FixedReal& c27, const RadicandPolicy& policy,
                                               unsigned threads) {
    ReductionStepResult res;
    res.mode = "real";
    res.K_in = K;
    res.N_in = N;
    std::size_t NA = s.alpha_labels.size();
    std::size_t T = s.triples.size() * NA;
    res.targets.resize(T);
    auto tlabel = [&](std::size_t ti) {
        const Triple& t = s.triples[ti];
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    for (std::size_t t = 0; t < T; ++t) res.targets[t].label = tlabel(t / NA) + " " + s.alpha_labels[t % NA];
    Int Wp = ceil_div(K, N);
    Int R = N + 4 * K + 1;
    Int Rs = Wp * N + 4 * K + 1;
    Int S = Wp * Wp * N * N + 3 * K * K;
    Rat thr_printed = Rat(R * R + S), thr_strict = Rat(Rs * Rs + S);
    for (auto& e : schedule) {
        std::vector<std::size_t> open;
        for (std::size_t t = 0; t < T; ++t)
            if (!res.targets[t].passed) open.push_back(t);
        if (open.empty()) break;
        Int C = e.C ? *e.C : derive_C(e.kappa, K, Wp);
        if (dec_digits(C) + 10 > s.precision) throw PrecisionError("real logs computed at too low a precision for C");
        StepPass pass;
        pass.kappa = e.kappa;
        pass.parameter = C;
        pass.weight = Wp;
        std::vector<LLLResult> red(s.triples.size());
        std::vector<RealLattice> lat(s.triples.size());
        parallel_for(s.triples.size(), threads, [&](std::size_t ti) {
            lat[ti] = build_real_lattice(C, Wp, s.unit_logs[ti], s.rho[ti]);
            red[ti] = lll_reduce(lat[ti].lattice);
        });
        for (auto& r : red) pass.first_vector_digits.push_back(dec_digits(dot(r.reduced.basis[0], r.reduced.basis[0])));
        std::vector<TargetOutcome> upd(open.size());
        parallel_for(open.size(), threads, [&](std::size_t oi) {
            std::size_t t = open[oi], ti = t / NA, ai = t % NA;
            TargetOutcome o = res.targets[t];
            auto lb = lattice_lower_bound(red[ti].reduced, lat[ti].targets[ai]);
            if (lb.lattice_point) {
                o.lattice_point = true;
            } else {
                o.printed_pass = lb.ell_sq >= thr_printed;
                o.strict_pass = lb.ell_sq >= thr_strict;
                bool ok = policy.require_strict ? (o.printed_pass && o.strict_pass) : o.printed_pass;
                if (ok) {
                    auto hb = real_h_bound(lb.ell_sq, R, S, C, c16, c27);
                    if (hb) {
                        o.passed = true;
                        o.kappa = e.kappa;
                        o.bound = *hb;
                    }
                }
            }
            upd[oi] = o;
        });
        for (std::size_t oi = 0; oi < open.size(); ++oi) {
            res.targets[open[oi]] = upd[oi];
            if (upd[oi].passed) ++pass.passed;
        }
        res.passes.push_back(pass);
    }
    res.success = std::all_of(res.targets.begin(), res.targets.end(), [](const TargetOutcome& o) { return o.passed; });
    for (auto& o : res.targets)
        if (o.printed_pass != o.strict_pass) ++res.disagreements;
    Int agg = 0;
    for (std::size_t ti = 0; ti < s.triples.size(); ++ti) {
        Int m = 0;
        for (std::size_t ai = 0; ai < NA; ++ai) m = std::max(m, res.targets[ti * NA + ai].bound);
        res.group_maxima.emplace_back(tlabel(ti), m);
        agg = std::max(agg, m);
    }
    res.new_bound = res.success ? std::min(agg, K) : K;
    return res;
}

// chain ----------------------------------------------------------------------

struct ReductionSchedules {
    std::vector<PadicScheduleEntry> padic_first{{100, 206}, {1000, 207}};
    std::vector<RealScheduleEntry> real_first{{100, pow10(187)}, {500, 5 * pow10(187)}, {1000, pow10(188)}};
    std::vector<long> later_kappas{100, 1000, 10000, 100000, 1000000, 10000000, 100000000};
    int max_links = 6;
};

struct ReductionChain {
    std::vector<ReductionStepResult> links;
    Int K, N;
    bool converged = false;
};

// Alternates p-adic and real steps from (K, N) until a full round improves neither bound.
// `padic` and `real` evaluate one step given (K, N) and the schedule to use.
template <class PadicFn, class RealFn>
ReductionChain iterate_reduction(Int K, Int N, const ReductionSchedules& sch, PadicFn&& padic, RealFn&& real) {
    ReductionChain c;
    std::vector<PadicScheduleEntry> ps;
    std::vector<RealScheduleEntry> rs;
    for (long k : sch.later_kappas) {
        ps.push_back({k, std::nullopt});
        rs.push_back({k, std::nullopt});
    }
    bool first_p = true, first_r = true;
    while (static_cast<int>(c.links.size()) < sch.max_links) {
        Int K0 = K, N0 = N;
        auto p = padic(K, N, first_p ? sch.padic_first : ps);
        first_p = false;
        N = p.new_bound;
        c.links.push_back(std::move(p));
        if (static_cast<int>(c.links.size()) >= sch.max_links) break;
        auto r = real(K, N, first_r ? sch.real_first : rs);
        first_r = false;
        K = r.new_bound;
        c.links.push_back(std::move(r));
        if (K0 - K < 1 && N0 - N < 1) {
            c.converged = true;
            break;
        }
    }
    c.K = K;
    c.N = N;
    return c;
}

}  // namespace tmw
