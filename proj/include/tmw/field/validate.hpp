#pragma once

#include <string>
#include <vector>

#include "tmw/field/local.hpp"
#include "tmw/numeric/real_roots.hpp"

namespace tmw {

struct ClaimResult {
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::string pack;
    std::vector<ClaimResult> claims;
    bool all_pass() const {
        for (auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (auto& c : claims)
            if (!c.pass) out.push_back(c.claim);
        return out;
    }
    void add(std::string claim, bool pass, std::string detail = {}) { claims.push_back({std::move(claim), pass, std::move(detail)}); }
};

class ValidationError : public DomainError {
public:
    ValidationError(const std::string& claim) : DomainError("pack claim failed: " + claim), claim_(claim) {}
    const std::string& claim() const { return claim_; }

private:
    std::string claim_;
};

inline void require_valid(const ValidationReport& rep) {
    for (auto& c : rep.claims)
        if (!c.pass) throw ValidationError(c.claim);
}

inline std::string norm_claim(const std::string& name, const Rat& n) { return "norm(" + name + ") = " + rat_str(n); }

// Integral basis elements must have integral characteristic polynomials.
inline bool is_algebraic_integer(const FieldElement& x) {
    RatPoly cp = x.charpoly();
    for (auto& c : cp.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

inline ValidationReport validate_pack(const FieldPack& pack) {
    ValidationReport rep;
    rep.pack = pack.field->name();
    const IntPoly& g = pack.field->poly();

    Int disc = discriminant(g);
    Int expect = 1;
    for (auto& [q, e] : pack.disc_factorization) expect *= ipow(q, e);
    rep.add("disc(g) = " + to_dec(pack.disc_value), disc == pack.disc_value && disc == expect, "computed " + to_dec(disc));

    if (pack.totally_real) {
        auto roots = isolate_real_roots(g);
        rep.add("g has " + std::to_string(g.degree()) + " real roots", static_cast<int>(roots.size()) == g.degree(),
                std::to_string(roots.size()) + " isolated");
    }

    Int den_lcm = 1;
    bool integral = true;
    for (auto& b : pack.integral_basis) {
        integral = integral && is_algebraic_integer(b.value);
        for (auto& c : b.value.coords().coeffs()) den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    // The index [O_F : Z[theta]]^2 divides disc(g): every basis denominator divides it.
    rep.add("integral basis elements are algebraic integers", integral);
    rep.add("integral-basis denominators divide disc(g)", disc % (den_lcm * den_lcm) == 0, "lcm " + to_dec(den_lcm));

    for (auto& [name, e] : pack.elements) {
        if (!e.declared_norm) continue;
        Rat n = e.value.norm();
        rep.add(norm_claim(name, *e.declared_norm), n == *e.declared_norm, "computed " + rat_str(n));
    }
    for (auto& u : pack.units) {
        const FieldElement& x = pack.get(u);
        rep.add(u + " is an algebraic integer", is_algebraic_integer(x));
    }
    for (auto& f : pack.factorizations) {
        FieldElement acc = FieldElement::from_rat(pack.field, Rat(f.sign));
        for (auto& [name, k] : f.exponents) acc = acc * pack.get(name).pow(k);
        rep.add(f.claim, acc == FieldElement::from_rat(pack.field, Rat(f.value)), acc.is_rational() ? "" : "product is not rational");
    }
    return rep;
}

// s + t rho with rho^2 = rho - 14 (generic: rho^2 = -c1 rho - c0).
inline std::pair<Int, Int> quad_mul(const IntPoly& m, const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
    Int s = a.first * b.first, t = a.first * b.second + a.second * b.first, u = a.second * b.second;
    return {s - m.coeff(0) * u, t - m.coeff(1) * u};
}

inline Int quad_norm(const IntPoly& m, const std::pair<Int, Int>& a) {
    // N(s + t rho) = s^2 - c1 s t + c0 t^2
    return a.first * a.first - m.coeff(1) * a.first * a.second + m.coeff(0) * a.second * a.second;
}

// Ideal (2, s + t rho) of norm 2 contains x + y rho iff x + y rho is a multiple mod 2;
// for a degree-1 prime above 2 this is membership of x - y r mod 2 with r the residue of rho.
inline std::optional<long> residue_of_rho(const std::pair<Int, Int>& gen2) {
    // gen2 = s + t rho with t = 1: rho = -s mod 2
    if (gen2.second % 2 == 0) return std::nullopt;
    return static_cast<long>(mod(-gen2.first, Int(2)).get_si());
}

inline ValidationReport validate_quad_pack(const QuadFieldPack& L) {
    ValidationReport rep;
    rep.pack = "L";
    const IntPoly& m = L.poly;
    Int d = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
    rep.add("defining polynomial irreducible (disc " + to_dec(d) + ")", m.degree() == 2 && m.lead() == 1 && !is_square(d));
    for (auto& pp : L.principal_powers) {
        const QuadFieldPack::Ideal* id = nullptr;
        for (auto& i : L.ideals)
            if (i.name == pp.ideal) id = &i;
        if (!id) {
            rep.add(pp.ideal + " is listed", false);
            continue;
        }
        // prime of norm 2: membership through the residue of rho
        std::optional<long> r;
        for (auto& g : id->generators)
            if (auto rr = residue_of_rho(g)) r = rr;
        Int n = quad_norm(m, pp.generator);
        bool norm_ok = n == ipow(Int(2), pp.power);
        bool in_ideal = r && mod(pp.generator.first + pp.generator.second * *r, Int(2)) == 0;
        std::string name = "(" + to_dec(pp.generator.first) + " + " + to_dec(pp.generator.second) + " rho) = " + pp.ideal + "^" +
                           std::to_string(pp.power);
        std::string detail = "norm " + to_dec(n);
        if (pp.printed_power && *pp.printed_power != pp.power)
            detail += "; printed exponent " + std::to_string(*pp.printed_power) + " is inconsistent with the norm";
        rep.add(name, norm_ok && in_ideal, detail);
    }
    rep.add("class number " + std::to_string(L.class_number) + " (" + L.class_number_status + ")", true, "not re-verified");
    return rep;
}

// G(theta_5(omega)) consistency, psi(pi113) = pi113(theta_5(omega)), product of the table
// quadratics = G mod p^precision, sum of e f = degree.
inline ValidationReport validate_splitting_pack(const SplittingPack& K, const FieldPack& F) {
    ValidationReport rep;
    rep.pack = K.field->name();
    FieldElement th5(K.field, K.theta5);
    FieldElement gth = FieldElement::from_rat(K.field, 0);
    const IntPoly& g = F.field->poly();
    for (int i = g.degree(); i >= 0; --i) gth = gth * th5 + FieldElement::from_rat(K.field, Rat(g.coeff(i)));
    rep.add("g(theta_5(omega)) = 0 in K", gth.is_zero());

    const FieldElement& pi113 = F.get("pi113");
    FieldElement img = FieldElement::from_rat(K.field, 0);
    const auto& c = pi113.coords().coeffs();
    for (std::size_t i = c.size(); i-- > 0;) img = img * th5 + FieldElement::from_rat(K.field, c[i]);
    rep.add("psi(pi113) = pi113(theta_5(omega))", img == FieldElement(K.field, K.psi_pi113));

    Int M = ipow(Int(K.prime), K.table_precision);
    IntPoly prod({Int(1)});
    int ef = 0;
    for (auto& r : K.table) {
        prod = zp::reduce(prod * IntPoly({r.gamma0, r.gamma1, Int(1)}), M);
        ef += r.e * r.f;
    }
    rep.add("product of the table quadratics = G mod " + std::to_string(K.prime) + "^" + std::to_string(K.table_precision),
            prod == zp::reduce(K.field->poly(), M));
    // each quadratic has degree e f = 2
    rep.add("sum of e f over the table = " + std::to_string(K.field->degree()), ef == K.field->degree(), std::to_string(ef));
    for (auto& [deg, pu] : K.coefficient_corrections)
        rep.add("t^" + std::to_string(deg) + " coefficient corrected from printed " + to_dec(pu.first), K.field->poly().coeff(deg) == pu.second,
                "printed value fails the table product check");
    return rep;
}

}  // namespace tmw
