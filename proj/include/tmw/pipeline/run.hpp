#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tmw/analysis/eleven_adic.hpp"
#include "tmw/bounds/initial_bounds.hpp"
#include "tmw/descent/descent.hpp"
#include "tmw/field/validate.hpp"
#include "tmw/lattice/reduction.hpp"
#include "tmw/modular/modular.hpp"
#include "tmw/pipeline/search.hpp"
#include "tmw/pipeline/theorem.hpp"

namespace tmw {

inline constexpr const char* kReportSchemaVersion = "tmw-report/1";
inline constexpr long kDefaultYBound = 10000;

struct PackPaths {
    std::string field, quad, splitting, newforms;

    static PackPaths in_dir(const std::string& dir) {
        std::string d = dir.empty() || dir.back() == '/' ? dir : dir + "/";
        return {d + "F.json", d + "L.json", d + "K.json", d + "newforms.json"};
    }
};

struct RunConfig {
    PackPaths packs = PackPaths::in_dir("data");
    long precision = 240;            // digits for real logs, 11-adic digits for K_P
    long y_bound = kDefaultYBound;
    unsigned long modular_hi = 1000000;
    ReductionSchedules schedules;
    RadicandPolicy radicand;
    unsigned threads = 1;
    bool keep_going = false;         // run later stages after a failed one
    bool run_theorem = true;
    std::set<std::string> stages;    // stages to run with their prerequisites; empty runs all
};

inline const std::vector<std::pair<std::string, std::vector<std::string>>>& stage_prerequisites() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> d{
        {"field_data", {}},
        {"modular", {"field_data"}},
        {"descent", {"field_data"}},
        {"five_adic", {"descent"}},
        {"eleven_adic", {"five_adic"}},
        {"delta2_valuations", {"eleven_adic"}},
        {"initial_bounds", {"eleven_adic"}},
        {"reduction_chain", {"delta2_valuations", "initial_bounds"}},
        {"final_search", {"five_adic"}},
        {"theorem_verification", {}},
    };
    return d;
}

// Requested stages closed under prerequisites.
inline std::set<std::string> stage_closure(const std::set<std::string>& want) {
    std::set<std::string> out;
    std::function<void(const std::string&)> add = [&](const std::string& n) {
        if (!out.insert(n).second) return;
        for (auto& [name, deps] : stage_prerequisites())
            if (name == n)
                for (auto& d : deps) add(d);
    };
    for (auto& n : want) {
        bool known = false;
        for (auto& [name, deps] : stage_prerequisites()) known = known || name == n;
        if (!known) throw DomainError("unknown stage " + n);
        add(n);
    }
    return out;
}

struct Loaded {
    FieldPack F;
    QuadFieldPack L;
    SplittingPack K;
    NewformPack newforms;
};

// Outcome of one pipeline stage: status is pass, fail, error or skipped; code is a
// machine-readable reason.
struct StageRecord {
    std::string name, status = "skipped", code;
    json data = json::object();
};

struct ResolutionReport {
    std::vector<StageRecord> stages;
    std::vector<std::string> trusted;
    std::string verdict;
    json to_json() const;
};

// Out-of-scope inputs a complete run relies on without re-deriving them.
inline const std::vector<std::string>& declared_trusted_set() {
    static const std::vector<std::string> t{
        "descent-ideal-steps: coprimality, prime-above-2 bookkeeping and the class-number argument behind the element identity",
        "initial-bound-chain: c13, c14, c16, c22, c27, K0, N0 ingested as checkpoint data",
        "newform-data: coefficients of the level newforms used by the modular filter",
        "splitting-field-ideal-table: pairing of K ideals with local factors",
        "thue-beyond-search-bound: final Thue equations with |y| above the search bound",
    };
    return t;
}

namespace run_detail {

inline json str_list(const std::vector<std::string>& v) { return json(v); }

inline json int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_dec(x));
    return a;
}

inline json digits_json(const std::vector<PadicScalar>& coeffs, long n) {
    json a = json::array();
    for (auto& c : coeffs) a.push_back(padic_digits(c, n));
    return a;
}

inline json step_json(const ReductionStepResult& r) {
    json j;
    j["mode"] = r.mode;
    j["K_in"] = to_dec(r.K_in);
    j["N_in"] = to_dec(r.N_in);
    j["new_bound"] = to_dec(r.new_bound);
    j["success"] = r.success;
    j["radicand_disagreements"] = r.disagreements;
    json passes = json::array();
    for (auto& p : r.passes)
        passes.push_back({{"kappa", p.kappa},
                          {r.mode == "padic" ? "m" : "C", to_dec(p.parameter)},
                          {r.mode == "padic" ? "W" : "W_prime", to_dec(p.weight)},
                          {"passed", p.passed},
                          {"first_vector_norm_sq_digits", p.first_vector_digits}});
    j["passes"] = passes;
    json gm = json::object();
    for (auto& [l, m] : r.group_maxima) gm[l] = to_dec(m);
    if (!r.group_maxima.empty()) j["group_maxima"] = gm;
    json failed = json::array();
    Int maxb = 0;
    for (auto& t : r.targets) {
        if (!t.passed) failed.push_back(t.label);
        maxb = std::max(maxb, t.bound);
    }
    j["targets"] = r.targets.size();
    j["failed_targets"] = failed;
    j["max_target_bound"] = to_dec(maxb);
    return j;
}

}  // namespace run_detail

inline json ResolutionReport::to_json() const {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    json st = json::array();
    for (auto& s : stages) st.push_back({{"name", s.name}, {"status", s.status}, {"code", s.code}, {"data", s.data}});
    j["stages"] = st;
    j["trusted_assumptions"] = trusted;
    j["verdict"] = verdict;
    return j;
}

// Reduction chain from (K, N) with c16, c27 taken from the bound state.
inline ReductionChain run_reduction_chain(const PadicContext& padic, const RealContext& real, const std::vector<AlphaChoice>& alphas,
                                          const Int& K, const Int& N, const BoundState& state, const RunConfig& cfg) {
    const long P = cfg.precision;
    auto plogs = padic_log_set(padic, alphas, P - 10, cfg.threads);
    auto rlogs = real_log_set(real, alphas, P - 10, cfg.threads);
    FixedReal c16 = state.value("c16"), c27 = state.value("c27");
    return iterate_reduction(
        K, N, cfg.schedules,
        [&](const Int& k, const Int& n, const std::vector<PadicScheduleEntry>& s) {
            return padic_reduction_step(plogs, k, n, s, cfg.radicand, cfg.threads);
        },
        [&](const Int& k, const Int& n, const std::vector<RealScheduleEntry>& s) {
            return real_reduction_step(rlogs, k, n, s, c16, c27, cfg.radicand, cfg.threads);
        });
}

// "complete-at-desk-scale" needs every stage passed and exactly the declared trusted set.
inline std::string compute_verdict(const std::vector<StageRecord>& stages, const std::vector<std::string>& trusted, long y_bound) {
    for (auto& s : stages)
        if (s.status != "pass") return "incomplete: " + s.name + " " + s.status + " (" + s.code + ")";
    std::vector<std::string> want = declared_trusted_set(), have = trusted;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (have != want) return "incomplete: trusted assumptions differ from the declared set";
    if (y_bound < kDefaultYBound) return "search-bound-insufficient";
    return "complete-at-desk-scale";
}

// Stage bodies return true on pass; exceptions become "error" records.
class Pipeline {
public:
    explicit Pipeline(RunConfig cfg) : cfg_(std::move(cfg)) {}

    ResolutionReport run() {
        ResolutionReport rep;
        std::vector<std::pair<std::string, std::function<bool(StageRecord&)>>> stages{
            {"field_data", [&](StageRecord& r) { return field_data(r); }},
            {"modular", [&](StageRecord& r) { return modular(r); }},
            {"descent", [&](StageRecord& r) { return descent(r); }},
            {"five_adic", [&](StageRecord& r) { return five_adic(r); }},
            {"eleven_adic", [&](StageRecord& r) { return eleven_adic(r); }},
            {"delta2_valuations", [&](StageRecord& r) { return delta2(r); }},
            {"initial_bounds", [&](StageRecord& r) { return bounds(r); }},
            {"reduction_chain", [&](StageRecord& r) { return reduction(r); }},
            {"final_search", [&](StageRecord& r) { return search(r); }},
        };
        if (cfg_.run_theorem || cfg_.stages.count("theorem_verification"))
            stages.push_back({"theorem_verification", [&](StageRecord& r) { return theorem(r); }});
        std::set<std::string> selected = stage_closure(cfg_.stages);
        bool halted = false;
        for (auto& [name, fn] : stages) {
            if (!cfg_.stages.empty() && !selected.count(name)) continue;
            StageRecord r;
            r.name = name;
            if (halted) {
                r.status = "skipped";
                r.code = "prior-stage-failed";
                rep.stages.push_back(r);
                continue;
            }
            try {
                bool ok = fn(r);
                r.status = ok ? "pass" : "fail";
                if (r.code.empty()) r.code = ok ? "ok" : "failed";
            } catch (const std::exception& e) {
                r.status = "error";
                if (r.code.empty()) r.code = "exception";
                r.data["error"] = e.what();
            }
            if (r.status != "pass" && !cfg_.keep_going) halted = true;
            // later stages cannot run without the packs or the bound state
            if (r.status == "error" && (name == "field_data" || name == "initial_bounds")) halted = true;
            rep.stages.push_back(r);
        }
        std::set<std::string> t(trusted_.begin(), trusted_.end());
        rep.trusted.assign(t.begin(), t.end());
        rep.verdict = cfg_.stages.empty() ? verdict(rep) : partial_verdict(rep);
        return rep;
    }

    const Loaded& loaded() const { return *packs_; }

private:
    std::string verdict(const ResolutionReport& rep) const { return compute_verdict(rep.stages, rep.trusted, cfg_.y_bound); }

    static std::string partial_verdict(const ResolutionReport& rep) {
        for (auto& s : rep.stages)
            if (s.status != "pass") return "incomplete: " + s.name + " " + s.status + " (" + s.code + ")";
        return "partial-run: selected stages passed";
    }

    void trust(const std::string& prefix) {
        for (auto& t : declared_trusted_set())
            if (t.rfind(prefix, 0) == 0) trusted_.push_back(t);
    }

    bool field_data(StageRecord& r) {
        packs_ = std::make_unique<Loaded>();
        packs_->F = load_field_pack(cfg_.packs.field);
        packs_->L = load_quad_pack(cfg_.packs.quad);
        packs_->K = load_splitting_pack(cfg_.packs.splitting);
        packs_->newforms = load_newform_pack(cfg_.packs.newforms);
        std::vector<ValidationReport> reps{validate_pack(packs_->F), validate_quad_pack(packs_->L),
                                           validate_splitting_pack(packs_->K, packs_->F)};
        json packs = json::array();
        std::vector<std::string> failed;
        for (auto& v : reps) {
            long pass = 0;
            for (auto& c : v.claims) pass += c.pass;
            packs.push_back({{"pack", v.pack}, {"claims", v.claims.size()}, {"passed", pass}, {"failures", v.failures()}});
            for (auto& f : v.failures()) failed.push_back(v.pack + ": " + f);
        }
        r.data["packs"] = packs;
        trust("splitting-field-ideal-table");
        if (!failed.empty()) {
            r.code = "claim-failed: " + failed.front();
            return false;
        }
        return true;
    }

    bool modular(StageRecord& r) {
        const auto& np = packs_->newforms;
        auto el = eliminate(np.forms, np.aux_prime, 7, cfg_.modular_hi);
        json b = json::object();
        for (auto& [l, v] : el.b_values) b[l] = to_dec(v);
        r.data["aux_prime"] = np.aux_prime;
        r.data["level"] = np.level;
        r.data["B"] = b;
        r.data["prime_range"] = {7, cfg_.modular_hi};
        r.data["survivors"] = el.survivors;
        r.data["inconclusive"] = el.inconclusive;
        trust("newform-data");
        if (!el.inconclusive.empty()) r.code = "inconclusive-newform";
        else if (!el.survivors.empty()) r.code = "surviving-exponents";
        return el.survivors.empty() && el.inconclusive.empty();
    }

    bool descent(StageRecord& r) {
        auto pair = expand_descent_identity(5);
        g_ = scale_to_thue_form(pair);
        r.data["z_form"] = run_detail::int_list(pair.z_form);
        r.data["x_form"] = run_detail::int_list(pair.x_form);
        std::vector<Int> gc;
        for (int i = 0; i <= g_.degree(); ++i) gc.push_back(g_.coeff(i));
        r.data["thue_polynomial_low_first"] = run_detail::int_list(gc);
        Int d = discriminant(g_);
        auto fac = factor_over(d, {2, 3, 5, 11});
        r.data["discriminant"] = to_dec(d);
        r.data["discriminant_factored"] = fac.str();
        trust("descent-ideal-steps");
        bool same = g_ == packs_->F.field->poly();
        if (!same) r.code = "thue-form-differs-from-field-pack";
        return same;
    }

    bool five_adic(StageRecord& r) {
        auto c = certify_totally_ramified(g_, 5);
        r.data["certificate"] = c.detail;
        r.data["shift"] = c.shift;
        if (!c.totally_ramified) {
            r.code = "not-totally-ramified";
            return false;
        }
        long ord5 = vp(discriminant(g_), 5);
        z1_bound_ = bound_z1(g_.degree(), ord5, true);
        r.data["ord5_disc"] = ord5;
        r.data["z1_bound"] = z1_bound_;
        return true;
    }

    bool eleven_adic(StageRecord& r) {
        auto A = analyze_eleven_adic(packs_->F, z1_bound_);
        json g = json::array();
        for (int i = 0; i < 3; ++i) g.push_back({{"prime", i == 0 ? "pi111" : i == 1 ? "pi112" : "pi113"},
                                                 {"digits_low_first", run_detail::digits_json(A.g[i].coeffs, 5)}});
        r.data["local_factors"] = g;
        r.data["h13_digits"] = run_detail::digits_json({A.h13.second, A.h13.first}, 5);
        r.data["h23_digits"] = run_detail::digits_json({A.h23.second, A.h23.first}, 5);
        r.data["h12_constant_valuation"] = A.h12[3].valuation();
        std::vector<std::string> pats;
        for (auto& p : A.constraints.patterns) pats.push_back(pattern_str(p));
        r.data["patterns"] = pats;
        r.data["derivation"] = A.constraints.derivation;
        r.data["intermediate_rhs_count"] = A.families.intermediate_rhs.size();
        r.data["alpha_count"] = A.families.alphas.size();
        families_ = A.families;
        return !A.families.alphas.empty();
    }

    bool delta2(StageRecord& r) {
        padic_ = std::make_unique<PadicContext>(packs_->F, packs_->K, cfg_.precision);
        std::vector<SUnitInstance> inst(families_.alphas.size());
        parallel_for(inst.size(), cfg_.threads, [&](std::size_t i) { inst[i] = build_padic_instance(*padic_, families_.alphas[i]); });
        std::set<Rat> ords;
        bool positive = true;
        for (auto& s : inst) {
            ords.insert(s.ord_delta2);
            positive = positive && s.ord_delta2 > 0;
        }
        std::vector<std::string> o;
        for (auto& q : ords) o.push_back(rat_str(q));
        r.data["instances"] = inst.size();
        r.data["triple"] = {5, 1, 3};
        r.data["ord11_delta2_values"] = o;
        r.data["ord11_delta1"] = "0";
        if (!positive) r.code = "delta2-not-divisible";
        return positive;
    }

    bool bounds(StageRecord& r) {
        real_ = std::make_unique<RealContext>(packs_->F);
        auto u = unit_heights(*real_);
        auto Y = yu_table(*real_, u, families_.alphas, cfg_.threads);
        auto M = matveev_table(*real_, u, families_.alphas, cfg_.threads);
        json hs;
        hs["pi113"] = u.pi113.to_fixed(12);
        for (int i = 0; i < 4; ++i) hs[unit_names()[i]] = u.eps[i].to_fixed(12);
        r.data["heights"] = hs;
        const auto& yr = Y.rows[Y.argmax];
        r.data["yu"] = {{"c10_max", Y.c10_max.to_sci(8)},
                        {"argmax_alpha", yr.alpha.str()},
                        {"h_delta1", yr.h_delta1.to_fixed(6)},
                        {"delta1_leading_coefficient", to_dec(yr.lc_delta1)},
                        {"case_row", yr.params.case_row},
                        {"c13", Y.c13.to_sci(8)},
                        {"c14", Y.c14.to_sci(8)}};
        const auto& mr = M.rows[M.argmax];
        json af = json::array();
        for (auto& [c7, c8] : M.alpha_free) af.push_back({{"c7", c7.to_sci(8)}, {"c8", c8.to_fixed(6)}});
        r.data["matveev"] = {{"c7_max", M.c7_max.to_sci(8)},
                             {"c8", M.c8_max.to_fixed(6)},
                             {"argmax_alpha", mr.alpha.str()},
                             {"argmax_triple", {mr.triple[0], mr.triple[1], mr.triple[2]}},
                             {"alpha_free_per_triple", af}};
        state_ = checkpoint_state();
        auto [K, N] = combine_to_initial_bounds(state_);
        json consts = json::object();
        for (auto& [name, c] : state_.constants) consts[name] = {{"value", c.value}, {"provenance", provenance_str(c.provenance)}};
        consts["c10_max_computed"] = {{"value", Y.c10_max.to_sci(8)}, {"provenance", "computed"}};
        consts["c7_computed"] = {{"value", M.c7_max.to_sci(8)}, {"provenance", "computed"}};
        consts["c8_computed"] = {{"value", M.c8_max.to_fixed(6)}, {"provenance", "computed"}};
        r.data["constants"] = consts;
        r.data["notes"] = state_.notes;
        r.data["K0"] = to_dec(tmw::ceil(K.center()));
        r.data["N0"] = to_dec(tmw::ceil(N.center()));
        K0_ = tmw::ceil(K.center());
        N0_ = tmw::ceil(N.center());
        trust("initial-bound-chain");
        return true;
    }

    bool reduction(StageRecord& r) {
        auto chain = run_reduction_chain(*padic_, *real_, families_.alphas, K0_, N0_, state_, cfg_);
        json links = json::array();
        bool ok = true;
        long disagreements = 0;
        for (auto& l : chain.links) {
            links.push_back(run_detail::step_json(l));
            ok = ok && l.success;
            disagreements += l.disagreements;
        }
        r.data["links"] = links;
        r.data["final_K"] = to_dec(chain.K);
        r.data["final_N"] = to_dec(chain.N);
        r.data["converged"] = chain.converged;
        r.data["radicand_disagreements"] = disagreements;
        r.data["strict_radicand_required"] = cfg_.radicand.require_strict;
        if (!ok) r.code = "reduction-step-failed";
        else if (disagreements > 0) r.code = "radicand-discrepancy";
        return ok && disagreements == 0;
    }

    bool search(StageRecord& r) {
        auto fam = final_rhs_family(z1_bound_, 21);
        auto hits = bounded_thue_search(g_, fam.rhs, cfg_.y_bound, cfg_.threads);
        r.data["y_bound"] = cfg_.y_bound;
        r.data["final_family"] = fam.final_count;
        r.data["intermediate_family"] = fam.intermediate_count;
        json h = json::array();
        for (auto& x : hits) h.push_back({{"x", to_dec(x.x)}, {"y", to_dec(x.y)}, {"c", to_dec(x.c)}});
        r.data["hits"] = h;
        r.data["residual_obligation"] = std::to_string(fam.rhs.size()) + " Thue equations F(x, y) = c with |y| > " +
                                        std::to_string(cfg_.y_bound) + " are not covered by the search";
        trust("thue-beyond-search-bound");
        if (!hits.empty()) r.code = "solutions-found";
        return hits.empty();
    }

    bool theorem(StageRecord& r) {
        auto v = verify_theorem();
        json rows = json::array();
        for (auto& row : v.listed) rows.push_back({{"tuple", row.tuple.str()}, {"verified", row.ok}, {"detail", row.detail}});
        r.data["listed"] = rows;
        std::vector<std::string> hits, unl;
        for (auto& t : v.window_hits) hits.push_back(t.str());
        for (auto& t : v.unlisted) unl.push_back(t.str());
        r.data["window"] = {{"exponents", v.exponents}, {"y_max", v.y_max}, {"ab_max", v.ab_max}};
        r.data["window_hits"] = hits;
        r.data["unlisted"] = unl;
        if (!v.all_listed_ok()) r.code = "listed-solution-rejected";
        else if (!v.unlisted.empty()) r.code = "unlisted-solution";
        return v.ok();
    }

    RunConfig cfg_;
    std::unique_ptr<Loaded> packs_;
    IntPoly g_;
    long z1_bound_ = 0;
    RhsFamilies families_;
    std::unique_ptr<PadicContext> padic_;
    std::unique_ptr<RealContext> real_;
    BoundState state_;
    Int K0_, N0_;
    std::vector<std::string> trusted_;
};

inline ResolutionReport run_full(const RunConfig& cfg) { return Pipeline(cfg).run(); }

}  // namespace tmw
