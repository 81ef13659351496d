#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tmw/field/data_pack.hpp"

namespace tmw {

// Element of the coefficient field: coordinates in 1, alpha (low first).
struct NewformData {
    std::string label;
    bool rational = true;
    IntPoly coefficient_field;  // monic, degree 1 or 2
    std::map<unsigned long, std::vector<Rat>> c;
    std::string q_expansion;
};

struct EliminationResult {
    unsigned long ell = 0;
    std::vector<std::pair<std::string, Int>> b_values;
    std::vector<unsigned long> survivors;
    std::vector<std::string> inconclusive;  // newforms with B = 0
};

inline std::vector<long> trace_set(unsigned long ell) {
    std::vector<long> out;
    long bound = static_cast<long>(isqrt(Int(4 * ell)).get_si());
    for (long a = -bound; a <= bound; ++a)
        if (a % 2 == 0 && static_cast<unsigned long>(a * a) <= 4 * ell) out.push_back(a);
    return out;
}

namespace detail {

// Norm of x0 + x1 alpha where alpha^2 + c1 alpha + c0 = 0.
inline Rat quad_norm(const IntPoly& m, const Rat& x0, const Rat& x1) {
    Rat c1(m.coeff(1)), c0(m.coeff(0));
    return x0 * x0 - c1 * x0 * x1 + c0 * x1 * x1;
}

}  // namespace detail

inline Int b_value(const NewformData& f, unsigned long ell) {
    auto it = f.c.find(ell);
    if (it == f.c.end()) throw DomainError(f.label + " has no coefficient at " + std::to_string(ell));
    int deg = f.coefficient_field.degree();
    if (deg > 2) throw DomainError("coefficient fields of degree > 2 are not supported");
    Rat c0 = it->second.size() > 0 ? it->second[0] : Rat(0);
    Rat c1 = it->second.size() > 1 ? it->second[1] : Rat(0);
    Rat L = Rat(static_cast<long>(ell));
    Rat top = (L + 1) * (L + 1);
    Rat r;
    if (deg <= 1 || c1 == 0) {
        r = top - c0 * c0;
        for (long a : trace_set(ell)) r *= Rat(a) - c0;
    } else {
        // (ell+1)^2 - c^2 with c^2 reduced through the minimal polynomial
        const IntPoly& m = f.coefficient_field;
        Rat s0 = c0 * c0 - c1 * c1 * Rat(m.coeff(0));
        Rat s1 = 2 * c0 * c1 - c1 * c1 * Rat(m.coeff(1));
        r = L * detail::quad_norm(m, top - s0, -s1);
        for (long a : trace_set(ell)) r *= detail::quad_norm(m, Rat(a) - c0, -c1);
    }
    if (!is_integer(r)) throw DomainError("B value of " + f.label + " is not an integer");
    return r.get_num();
}

inline EliminationResult eliminate(const std::vector<NewformData>& forms, unsigned long ell, unsigned long lo, unsigned long hi) {
    EliminationResult res;
    res.ell = ell;
    std::set<unsigned long> surv;
    std::vector<unsigned long> primes = primes_upto(hi);
    for (auto& f : forms) {
        Int b = b_value(f, ell);
        res.b_values.emplace_back(f.label, b);
        if (b == 0) {
            res.inconclusive.push_back(f.label);
            continue;
        }
        for (unsigned long p : primes)
            if (p >= lo && b % p == 0) surv.insert(p);
    }
    res.survivors.assign(surv.begin(), surv.end());
    return res;
}

struct NewformPack {
    std::string schema_version;
    long level = 0;
    unsigned long aux_prime = 3;
    std::vector<NewformData> forms;
    std::string frey_curve;
};

inline NewformPack parse_newform_pack(const json& j) {
    using namespace pack_io;
    NewformPack p;
    p.schema_version = req(j, "schema_version").get<std::string>();
    p.level = req(j, "level").get<long>();
    p.aux_prime = req(j, "aux_prime").get<unsigned long>();
    p.frey_curve = j.value("frey_curve", std::string());
    for (auto& f : req(j, "newforms")) {
        NewformData d;
        d.label = req(f, "label").get<std::string>();
        d.rational = req(f, "rational").get<bool>();
        d.coefficient_field = IntPoly(int_list(req(f, "coefficient_field")));
        if (d.coefficient_field.lead() != 1) throw PackFormatError(d.label + ": coefficient field polynomial must be monic");
        for (auto& [k, v] : req(f, "c_ell").items()) {
            std::vector<Rat> c;
            for (auto& x : v) {
                if (x.is_array()) c.push_back(make_rat(as_int(x[0]), as_int(x[1])));
                else c.push_back(Rat(as_int(x)));
            }
            d.c[std::stoul(k)] = c;
        }
        d.q_expansion = f.value("q_expansion", std::string());
        p.forms.push_back(d);
    }
    return p;
}

inline NewformPack load_newform_pack(const std::string& path) { return parse_newform_pack(pack_io::load_file(path)); }

}  // namespace tmw
