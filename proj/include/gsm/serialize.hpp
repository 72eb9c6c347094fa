#pragma once

#include <json.hpp>

#include <string>

#include "gsm/algebra.hpp"
#include "gsm/error.hpp"
#include "gsm/polynomial.hpp"
#include "gsm/slice.hpp"

namespace gsm {

// Insertion-ordered JSON keeps serialized bytes deterministic.
using Json = nlohmann::ordered_json;

// Multivector wire form: blade names ("", "e1", "e1e3", ...) mapped to
// rational strings "num/den", ascending blade order, zeros omitted.
inline Json multivector_to_json(const Multivector<Rational>& a) {
    Json out = Json::object();
    for (BladeIndex b = 0; b < a.dim(); ++b)
        if (!(a[b] == Rational(0))) out[blade_name(b)] = rational_to_fraction(a[b]);
    return out;
}

inline Multivector<Rational> multivector_from_json(const Json& j, const AlgebraContext& ctx) {
    if (!j.is_object()) throw Error("multivector JSON must be an object");
    Multivector<Rational> out(ctx);
    for (const auto& [name, value] : j.items()) {
        if (!value.is_string()) throw Error("multivector component must be a rational string");
        out[parse_blade_name(name, ctx)] = parse_rational(value.get<std::string>());
    }
    return out;
}

// Polynomial wire form: a list of { "coeff": <multivector>, "exps": {var: int} },
// zero exponents omitted, terms in descending lexicographic exponent order.
inline Json polynomial_to_json(const Poly& f) {
    Json out = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [exps, coeff] = *it;
        Json exps_json = Json::object();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0)
                exps_json[variable_name(f.ctx(), f.vars(), static_cast<int>(i))] = exps[i];
        out.push_back({{"coeff", multivector_to_json(coeff)}, {"exps", exps_json}});
    }
    return out;
}

inline Poly polynomial_from_json(const Json& j, const AlgebraContext& ctx, VarSet vars) {
    if (!j.is_array()) throw Error("polynomial JSON must be an array of terms");
    Poly out(ctx, vars);
    for (const auto& term : j) {
        if (!term.contains("coeff") || !term.contains("exps"))
            throw Error("polynomial term needs 'coeff' and 'exps'");
        Exponents exps(variable_count(ctx, vars), 0);
        for (const auto& [name, value] : term.at("exps").items()) {
            if (!value.is_number_integer() || value.get<int>() < 0)
                throw Error("exponent of " + name + " must be a nonnegative integer");
            int index = -1;
            for (int i = 0; i < variable_count(ctx, vars); ++i)
                if (variable_name(ctx, vars, i) == name) index = i;
            if (index < 0) throw Error("unknown variable in polynomial JSON: " + name);
            exps[index] = value.get<int>();
        }
        out.add_term(exps, multivector_from_json(term.at("coeff"), ctx));
    }
    return out;
}

// Slice pair wire form: { "p":, "q":, "F1": <poly>, "F2": <poly> }.
inline Json slice_pair_to_json(const SlicePair& F) {
    return Json{{"p", F.ctx().p},
                {"q", F.ctx().q},
                {"F1", polynomial_to_json(F.F1)},
                {"F2", polynomial_to_json(F.F2)}};
}

inline SlicePair slice_pair_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("q") || !j.contains("F1") || !j.contains("F2"))
        throw Error("slice pair JSON needs p, q, F1, F2");
    AlgebraContext ctx(j.at("p").get<int>(), j.at("q").get<int>());
    Poly F1 = polynomial_from_json(j.at("F1"), ctx, VarSet::Slice);
    Poly F2 = polynomial_from_json(j.at("F2"), ctx, VarSet::Slice);
    return make_slice_pair(std::move(F1), std::move(F2));
}

}  // namespace gsm
