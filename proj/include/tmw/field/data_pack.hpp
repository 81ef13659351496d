#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tmw/field/number_field.hpp"

namespace tmw {

using json = nlohmann::json;

class PackFormatError : public DomainError {
public:
    using DomainError::DomainError;
};

namespace pack_io {

inline const json& req(const json& j, const std::string& key) {
    if (!j.contains(key)) throw PackFormatError("missing field '" + key + "'");
    return j.at(key);
}

inline Int as_int(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long>());
    throw PackFormatError("expected an integer as decimal string");
}

inline std::vector<Int> int_list(const json& j) {
    std::vector<Int> out;
    for (auto& x : j) out.push_back(as_int(x));
    return out;
}

// [[num, den], ...] low-first
inline std::vector<Rat> rat_list(const json& j) {
    std::vector<Rat> out;
    for (auto& x : j) {
        if (!x.is_array() || x.size() != 2) throw PackFormatError("element coordinates must be [numerator, denominator] pairs");
        out.push_back(make_rat(as_int(x[0]), as_int(x[1])));
    }
    return out;
}

inline json rat_pairs(const RatPoly& p, int n) {
    json a = json::array();
    for (int i = 0; i < n; ++i) {
        Rat c = p.coeff(i);
        a.push_back({to_dec(c.get_num()), to_dec(c.get_den())});
    }
    return a;
}

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PackFormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw PackFormatError(path + ": " + e.what());
    }
    if (!j.contains("schema_version")) throw PackFormatError(path + ": schema_version is mandatory");
    return j;
}

}  // namespace pack_io

inline constexpr const char* kSchemaVersion = "1";

struct NamedElement {
    std::string name;
    FieldElement value;
    std::optional<Rat> declared_norm;
};

struct FactorizationClaim {
    std::string claim;
    Int value;
    int sign = 1;
    std::vector<std::pair<std::string, long>> exponents;
};

// F = Q(theta): units, prime elements, factorizations of 2, 3, 5, 11.
struct FieldPack {
    std::string schema_version;
    FieldPtr field;
    Int disc_value;
    std::vector<std::pair<Int, long>> disc_factorization;
    bool totally_real = false;
    std::vector<NamedElement> integral_basis;
    std::map<std::string, NamedElement> elements;
    std::vector<std::string> units;
    std::vector<std::string> primes;
    std::vector<FactorizationClaim> factorizations;

    const FieldElement& get(const std::string& name) const {
        auto it = elements.find(name);
        if (it == elements.end()) throw PackFormatError("pack has no element '" + name + "'");
        return it->second.value;
    }
};

inline FieldPack parse_field_pack(const json& j) {
    using namespace pack_io;
    FieldPack p;
    p.schema_version = req(j, "schema_version").get<std::string>();
    IntPoly g(int_list(req(j, "defining_polynomial")));
    p.field = std::make_shared<NumberField>(req(j, "field").get<std::string>(), g,
                                            j.value("generator", std::string("theta")));
    const json& d = req(j, "polynomial_discriminant");
    p.disc_value = as_int(req(d, "value"));
    for (auto& f : req(d, "factorization")) p.disc_factorization.emplace_back(as_int(f[0]), f[1].get<long>());
    p.totally_real = j.value("totally_real", false);
    for (auto& b : req(j, "integral_basis"))
        p.integral_basis.push_back({req(b, "name").get<std::string>(), element_from_coords(p.field, rat_list(req(b, "coords"))), {}});
    for (auto& [name, e] : req(j, "elements").items()) {
        NamedElement ne{name, element_from_coords(p.field, rat_list(req(e, "coords"))), {}};
        if (e.contains("declared_norm")) ne.declared_norm = Rat(as_int(e["declared_norm"]));
        p.elements[name] = ne;
    }
    p.units = req(j, "fundamental_units").get<std::vector<std::string>>();
    p.primes = req(j, "prime_elements").get<std::vector<std::string>>();
    for (auto& f : req(j, "factorizations")) {
        FactorizationClaim c;
        c.claim = req(f, "claim").get<std::string>();
        c.value = as_int(req(f, "value"));
        c.sign = req(f, "sign").get<int>();
        for (auto& [k, v] : req(f, "exponents").items()) c.exponents.emplace_back(k, v.get<long>());
        p.factorizations.push_back(c);
    }
    return p;
}

inline FieldPack load_field_pack(const std::string& path) { return parse_field_pack(pack_io::load_file(path)); }

// L = Q(rho), rho^2 - rho + 14 = 0.
struct QuadFieldPack {
    std::string schema_version;
    IntPoly poly;
    int class_number = 0;
    std::string class_number_status;
    struct Ideal {
        std::string name;
        std::vector<std::pair<Int, Int>> generators;  // s + t rho
    };
    std::vector<Ideal> ideals;
    struct PrincipalPower {
        std::string ideal;
        int power = 0;
        std::pair<Int, Int> generator;
        std::optional<int> printed_power;
    };
    std::vector<PrincipalPower> principal_powers;
};

inline QuadFieldPack parse_quad_pack(const json& j) {
    using namespace pack_io;
    QuadFieldPack p;
    p.schema_version = req(j, "schema_version").get<std::string>();
    p.poly = IntPoly(int_list(req(j, "defining_polynomial")));
    p.class_number = req(j, "class_number").get<int>();
    p.class_number_status = j.value("class_number_status", std::string("trusted"));
    for (auto& i : req(j, "ideals")) {
        QuadFieldPack::Ideal id{req(i, "name").get<std::string>(), {}};
        for (auto& g : req(i, "generators")) id.generators.emplace_back(as_int(g[0]), as_int(g[1]));
        p.ideals.push_back(id);
    }
    for (auto& q : req(j, "principal_powers")) {
        QuadFieldPack::PrincipalPower pp;
        pp.ideal = req(q, "ideal").get<std::string>();
        pp.power = req(q, "power").get<int>();
        pp.generator = {as_int(q["generator"][0]), as_int(q["generator"][1])};
        if (q.contains("printed_power")) pp.printed_power = q["printed_power"].get<int>();
        p.principal_powers.push_back(pp);
    }
    return p;
}

inline QuadFieldPack load_quad_pack(const std::string& path) { return parse_quad_pack(pack_io::load_file(path)); }

// K = Q(omega), the degree-20 splitting field, with the ideal table above 11.
struct SplittingPack {
    std::string schema_version;
    FieldPtr field;
    std::vector<std::pair<int, std::pair<Int, Int>>> coefficient_corrections;  // degree, (printed, used)
    RatPoly theta5;   // theta_5 as a polynomial in omega
    RatPoly psi_pi113;
    unsigned long prime = 11;
    long table_precision = 10;
    struct Row {
        int index = 0;
        std::vector<long> h_basis_coords;
        Int gamma1, gamma0;
        int e = 2, f = 1;
    };
    std::vector<Row> table;
    int selected = 9;
    std::map<std::string, std::vector<int>> root_pairs;
    std::map<std::string, std::pair<Int, Int>> printed_roots;  // name -> (omega coeff, constant)
    std::vector<int> declared_psi_valuations;

    const Row& row(int index) const {
        for (auto& r : table)
            if (r.index == index) return r;
        throw PackFormatError("ideal table has no row " + std::to_string(index));
    }
};

inline SplittingPack parse_splitting_pack(const json& j) {
    using namespace pack_io;
    SplittingPack p;
    p.schema_version = req(j, "schema_version").get<std::string>();
    p.field = std::make_shared<NumberField>(req(j, "field").get<std::string>(), IntPoly(int_list(req(j, "defining_polynomial"))),
                                            j.value("generator", std::string("omega")));
    if (j.contains("printed_coefficient_corrections"))
        for (auto& c : j["printed_coefficient_corrections"])
            p.coefficient_corrections.push_back({c["degree"].get<int>(), {as_int(c["printed"]), as_int(c["used"])}});
    auto frac_poly = [](const json& e) {
        Int den = as_int(req(e, "denominator"));
        std::vector<Rat> c;
        for (auto& x : req(e, "numerators")) c.push_back(make_rat(as_int(x), den));
        return RatPoly(std::move(c));
    };
    p.theta5 = frac_poly(req(j, "theta5"));
    p.psi_pi113 = frac_poly(req(req(j, "psi_elements"), "pi113"));
    p.prime = req(j, "prime").get<unsigned long>();
    p.table_precision = req(j, "table_precision").get<long>();
    for (auto& r : req(j, "ideal_table")) {
        SplittingPack::Row row;
        row.index = req(r, "index").get<int>();
        row.h_basis_coords = req(r, "h_basis_coords").get<std::vector<long>>();
        row.gamma1 = as_int(req(r, "gamma1"));
        row.gamma0 = as_int(req(r, "gamma0"));
        row.e = r.value("e", 2);
        row.f = r.value("f", 1);
        p.table.push_back(row);
    }
    p.selected = req(j, "selected_ideal_index").get<int>();
    for (auto& [k, v] : req(j, "root_pairs").items()) p.root_pairs[k] = v.get<std::vector<int>>();
    if (j.contains("printed_local_roots"))
        for (auto& [k, v] : j["printed_local_roots"].items()) p.printed_roots[k] = {as_int(v[0]), as_int(v[1])};
    if (j.contains("declared_psi_valuations"))
        p.declared_psi_valuations = j["declared_psi_valuations"]["pi113"].get<std::vector<int>>();
    return p;
}

inline SplittingPack load_splitting_pack(const std::string& path) { return parse_splitting_pack(pack_io::load_file(path)); }

}  // namespace tmw
