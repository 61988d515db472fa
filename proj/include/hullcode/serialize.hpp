#pragma once

// JSON wire forms. Elements travel as canonical integer encodings, matrices as
// row-major nested arrays, big integers as decimal strings and rationals as
// "num/den" strings.

#include <string>

#include <nlohmann/json.hpp>

#include "hullcode/bounds.hpp"
#include "hullcode/codes.hpp"
#include "hullcode/construct.hpp"
#include "hullcode/error.hpp"
#include "hullcode/gf.hpp"

namespace hullcode {

using json = nlohmann::ordered_json;

inline json to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"r", f.degree()}, {"modulus", f.modulus()}};
}

inline Field field_from_json(const json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto r = j.at("r").get<std::uint32_t>();
    Field f = Field::make(p, r);
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != f.modulus())
        throw Error(Errc::InvalidParams, "modulus differs from the canonical modulus of " + f.name());
    return f;
}

inline json to_json(const LinearCode& c) {
    return json{{"field", to_json(c.field())},
                {"n", c.length()},
                {"k", c.dimension()},
                {"generator", c.generator().to_rows()}};
}

inline LinearCode code_from_json(const json& j) {
    const Field f = field_from_json(j.at("field"));
    const auto n = j.at("n").get<std::size_t>();
    const auto rows = j.at("generator").get<std::vector<std::vector<Element>>>();
    if (j.contains("k") && j.at("k").get<std::size_t>() != rows.size())
        throw Error(Errc::ShapeMismatch, "k does not match the generator row count");
    return LinearCode(FieldMatrix::from_rows(f, rows, n));
}

inline json to_json(const VerificationReport& r) {
    return json{{"hull_dim_gram", r.hull_dim_gram},
                {"hull_dim_intersection", r.hull_dim_intersection},
                {"min_distance", r.min_distance},
                {"dual_dim", r.dual_dim},
                {"gram_diagonal", r.gram_diagonal},
                {"gram_diag_zero_count", r.gram_diag_zero_count}};
}

inline json to_json(const ConstructionResult& r) {
    json out = to_json(r.code);
    out["q"] = r.params.q;
    out["m"] = r.params.m;
    out["t"] = r.params.t;
    out["d"] = r.params.d;
    out["case"] = std::string(to_string(r.kind));
    out["seed"] = r.params.seed;
    out["attempts"] = r.attempts;
    out["restarts"] = r.restarts;
    out["guaranteed_distance"] = r.guaranteed_distance;
    out["bound_holds"] = r.bound_holds;
    out["report"] = to_json(r.report);
    return out;
}

inline json to_json(const BoundReport& b) {
    json eps = json::array();
    for (const auto& e : b.epsilons) eps.push_back(detail::rational_string(e));
    return json{{"q", b.q},
                {"m", b.m},
                {"k", b.k},
                {"d", b.d},
                {"lhs", b.lhs.str()},
                {"rhs", detail::rational_string(b.rhs)},
                {"holds", b.holds},
                {"theta", b.theta.str()},
                {"epsilons", eps},
                {"p_lower", detail::rational_string(b.p_jk_lower)}};
}

}  // namespace hullcode
