#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tmw/analysis/prime_analysis.hpp"
#include "tmw/bounds/galois.hpp"
#include "tmw/bounds/height.hpp"
#include "tmw/field/embeddings.hpp"
#include "tmw/field/local.hpp"
#include "tmw/padic/padic_log.hpp"

namespace tmw {

inline const std::vector<std::string>& unit_names() {
    static const std::vector<std::string> n{"eps1", "eps2", "eps3", "eps4"};
    return n;
}

inline std::vector<AlphaChoice> alpha_family(long z1_bound = 27) { return rhs_families(z1_bound).alphas; }

// Real conjugates of the pack elements at the ascending real roots, cached per precision.
class RealContext {
public:
    explicit RealContext(const FieldPack& F) : F_(F) {}

    const FieldPack& pack() const { return F_; }

    std::shared_ptr<const RealEmbeddings> embeddings(long prec) const {
        std::lock_guard<std::mutex> lk(m_);
        auto it = emb_.find(prec);
        if (it != emb_.end()) return it->second;
        auto e = std::make_shared<const RealEmbeddings>(F_.field, prec);
        emb_[prec] = e;
        return e;
    }

    std::vector<FixedReal> roots(long prec) const {
        auto e = embeddings(prec);
        std::vector<FixedReal> r;
        for (int i = 1; i <= 5; ++i) r.push_back(e->root(i).with_precision(prec + RealEmbeddings::kGuard / 2));
        return r;
    }

    // conjugates of a named element, 0-based labels
    std::vector<FixedReal> conj(const std::string& name, long prec) const {
        {
            std::lock_guard<std::mutex> lk(m_);
            auto it = conj_.find({name, prec});
            if (it != conj_.end()) return it->second;
        }
        auto v = embeddings(prec)->conjugates(F_.get(name));
        std::lock_guard<std::mutex> lk(m_);
        conj_[{name, prec}] = v;
        return v;
    }

    std::vector<FixedReal> alpha_conj(const AlphaChoice& a, long prec) const {
        auto p2 = conj("pi2", prec), p3 = conj(a.kind == 0 ? "pi31" : "pi32", prec), p5 = conj("pi5", prec);
        std::vector<FixedReal> out;
        for (int i = 0; i < 5; ++i) out.push_back(pow_int(p2[i], 5) * pow_int(p3[i], a.kind == 0 ? 4 : 1) * pow_int(p5[i], a.z1));
        return out;
    }

    const GaloisAction& galois() const {
        std::call_once(gal_once_, [&] { gal_ = identify_galois_group(roots(60)); });
        return gal_;
    }

private:
    const FieldPack& F_;
    mutable std::mutex m_;
    mutable std::map<long, std::shared_ptr<const RealEmbeddings>> emb_;
    mutable std::map<std::pair<std::string, long>, std::vector<FixedReal>> conj_;
    mutable std::once_flag gal_once_;
    mutable GaloisAction gal_;
};

// delta_1 = (th_i0 - th_j)/(th_i0 - th_k) * alpha_k / alpha_j
// delta_2 = (th_j - th_k)/(th_k - th_i0) * alpha_i0 / alpha_j
template <class V>
V delta1_value(const std::vector<V>& th, const std::vector<V>& al, const Triple& t) {
    return (th[t[0]] - th[t[1]]) / (th[t[0]] - th[t[2]]) * (al[t[2]] / al[t[1]]);
}

template <class V>
V delta2_value(const std::vector<V>& th, const std::vector<V>& al, const Triple& t) {
    return (th[t[1]] - th[t[2]]) / (th[t[2]] - th[t[0]]) * (al[t[0]] / al[t[1]]);
}

inline void check_triple(const Triple& t) {
    for (int x : t)
        if (x < 0 || x > 4) throw DomainError("index triple out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw DomainError("index triple must have distinct entries");
}

// Printed labels are 1-based; internal triples are 0-based.
inline Triple to_zero_based(const Triple& t1) {
    Triple t{t1[0] - 1, t1[1] - 1, t1[2] - 1};
    check_triple(t);
    return t;
}

inline const std::vector<Triple>& real_triples_one_based() {
    static const std::vector<Triple> t{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {4, 1, 2}, {5, 1, 2}};
    return t;
}

enum class SUnitMode { Real, Padic };

struct RealLogs {
    FixedReal rho;                 // log|delta_1|
    FixedReal lambda;              // log|pi113_k / pi113_j|
    std::array<FixedReal, 4> mu;   // log|eps_i,k / eps_i,j|
};

struct SUnitInstance {
    Triple triple{};  // 1-based
    AlphaChoice alpha;
    SUnitMode mode = SUnitMode::Real;
    // real mode
    FixedReal delta1_real, delta2_real;
    // p-adic mode
    std::optional<QuadExtElement> delta1_p, delta2_p;
    Rat ord_delta1, ord_delta2;
};

inline SUnitInstance build_real_instance(const RealContext& ctx, const AlphaChoice& a, const Triple& triple1, long prec) {
    Triple t = to_zero_based(triple1);
    SUnitInstance s;
    s.triple = triple1;
    s.alpha = a;
    s.mode = SUnitMode::Real;
    auto th = ctx.roots(prec);
    auto al = ctx.alpha_conj(a, prec);
    s.delta1_real = delta1_value(th, al, t);
    s.delta2_real = delta2_value(th, al, t);
    return s;
}

inline RealLogs real_logs(const RealContext& ctx, const AlphaChoice& a, const Triple& triple1, long prec) {
    Triple t = to_zero_based(triple1);
    RealLogs L;
    auto inst = build_real_instance(ctx, a, triple1, prec);
    L.rho = real_log(inst.delta1_real.abs(), prec);
    auto p = ctx.conj("pi113", prec);
    L.lambda = real_log((p[t[2]] / p[t[1]]).abs(), prec);
    for (int i = 0; i < 4; ++i) {
        auto e = ctx.conj(unit_names()[i], prec);
        L.mu[i] = real_log((e[t[2]] / e[t[1]]).abs(), prec);
    }
    return L;
}

// 11-adic data: roots in K_P with the local labelling, element values at each root.
class PadicContext {
public:
    PadicContext(const FieldPack& F, const SplittingPack& K, long precision)
        : F_(F), local_(build_splitting_local(F, K, "pi112", precision)) {
        for (int i = 1; i <= 5; ++i) th_.push_back(local_.root(i));
    }

    long precision() const { return local_.precision; }
    const SplittingLocal& local() const { return local_; }
    const std::vector<QuadExtElement>& roots() const { return th_; }

    const std::vector<QuadExtElement>& conj(const std::string& name) const {
        std::lock_guard<std::mutex> lk(m_);
        auto it = conj_.find(name);
        if (it != conj_.end()) return it->second;
        std::vector<QuadExtElement> v;
        for (auto& r : th_) v.push_back(eval(F_.get(name).coords(), r));
        return conj_[name] = v;
    }

    std::vector<QuadExtElement> alpha_conj(const AlphaChoice& a) const {
        const auto& p2 = conj("pi2");
        const auto& p3 = conj(a.kind == 0 ? "pi31" : "pi32");
        const auto& p5 = conj("pi5");
        std::vector<QuadExtElement> out;
        for (int i = 0; i < 5; ++i) out.push_back(p2[i].pow(5) * p3[i].pow(a.kind == 0 ? 4 : 1) * p5[i].pow(a.z1));
        return out;
    }

private:
    const FieldPack& F_;
    SplittingLocal local_;
    std::vector<QuadExtElement> th_;
    mutable std::mutex m_;
    mutable std::map<std::string, std::vector<QuadExtElement>> conj_;
};

// The p-adic instance is pinned to (i0, j, k) = (5, 1, 3). Unit ratios, the pi_113 ratio and
// delta_1 must be 11-adic units.
inline SUnitInstance build_padic_instance(const PadicContext& ctx, const AlphaChoice& a, const Triple& triple1 = {5, 1, 3}) {
    Triple t = to_zero_based(triple1);
    SUnitInstance s;
    s.triple = triple1;
    s.alpha = a;
    s.mode = SUnitMode::Padic;
    auto al = ctx.alpha_conj(a);
    s.delta1_p = delta1_value(ctx.roots(), al, t);
    s.delta2_p = delta2_value(ctx.roots(), al, t);
    s.ord_delta1 = s.delta1_p->ord();
    s.ord_delta2 = s.delta2_p->ord();
    if (s.ord_delta1 != 0) throw DataIntegrityError("ord_11(delta_1) = " + rat_str(s.ord_delta1) + " for " + a.str());
    auto unit_ratio_ord = [&](const std::string& name) {
        const auto& c = ctx.conj(name);
        return (c[t[2]] / c[t[1]]).ord();
    };
    for (auto& n : unit_names())
        if (unit_ratio_ord(n) != 0) throw DataIntegrityError("ord_11 of the " + n + " ratio is not 0");
    if (unit_ratio_ord("pi113") != 0) throw DataIntegrityError("ord_11 of the pi113 ratio is not 0");
    return s;
}

struct PadicLogs {
    QuadExtElement rho, lambda;
    std::array<QuadExtElement, 4> mu;
};

inline QuadExtElement padic_ratio_log(const PadicContext& ctx, const std::string& name, const Triple& t, long target) {
    const auto& c = ctx.conj(name);
    return padic_log(c[t[2]] / c[t[1]], target);
}

inline PadicLogs padic_logs(const PadicContext& ctx, const AlphaChoice& a, long target, const Triple& triple1 = {5, 1, 3}) {
    Triple t = to_zero_based(triple1);
    PadicLogs L;
    auto inst = build_padic_instance(ctx, a, triple1);
    L.rho = padic_log(*inst.delta1_p, target);
    L.lambda = padic_ratio_log(ctx, "pi113", t, target);
    for (int i = 0; i < 4; ++i) L.mu[i] = padic_ratio_log(ctx, unit_names()[i], t, target);
    return L;
}

// Heights ------------------------------------------------------------------

// h(x_k / x_j) for x in F: the 20 conjugates are the ratios over all ordered pairs.
inline HeightResult ratio_height(const RealContext& ctx, const std::string& name) {
    const GaloisAction& G = ctx.galois();
    auto pairs = G.pair_orbit(0, 1);
    return height_from_conjugates([&](long P) {
        auto c = ctx.conj(name, P);
        std::vector<FixedReal> out;
        for (auto& [j, k] : pairs) out.push_back(c[k] / c[j]);
        return out;
    });
}

// h(delta_1) from the Galois orbit of the real index triple.
inline HeightResult delta1_height(const RealContext& ctx, const AlphaChoice& a, const Triple& t0) {
    auto orbit = ctx.galois().orbit(t0);
    return height_from_conjugates([&](long P) {
        auto th = ctx.roots(P);
        auto al = ctx.alpha_conj(a, P);
        std::vector<FixedReal> out;
        for (auto& t : orbit) out.push_back(delta1_value(th, al, t));
        return out;
    });
}

// The local decomposition group fixes theta_5 and swaps theta_1, theta_3; the real
// counterpart of (5, 1, 3) is any triple (a, b, s_a(b)) with s_a the involution fixing a.
inline Triple padic_triple_real_model(const GaloisAction& G) {
    const Perm5& s = G.involution_fixing(0);
    return {0, 1, s[1]};
}

// theta cross-ratio alone, without the alpha factor
inline HeightResult theta_ratio_height(const RealContext& ctx, const Triple& t0) {
    auto orbit = ctx.galois().orbit(t0);
    return height_from_conjugates([&](long P) {
        auto th = ctx.roots(P);
        std::vector<FixedReal> out;
        for (auto& t : orbit) out.push_back((th[t[0]] - th[t[1]]) / (th[t[0]] - th[t[2]]));
        return out;
    });
}

}  // namespace tmw
