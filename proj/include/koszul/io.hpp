#pragma once

#include <string>

#include <json.hpp>

#include "koszul/poly.hpp"
#include "koszul/uea.hpp"

namespace koszul {

/// JSON form of a polynomial: [{"coeff": "<decimal>", "vars": [[i,j,e],...]}, ...]
inline nlohmann::json to_json(const Poly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) vars.push_back({v.row, v.col, e});
        out.push_back({{"coeff", c.str()}, {"vars", vars}});
    }
    return out;
}

inline Poly poly_from_json(const nlohmann::json& j) {
    Poly p;
    for (const auto& term : j) {
        Int c(term.at("coeff").get<std::string>());
        std::vector<std::pair<VarIndex, int>> factors;
        for (const auto& v : term.at("vars"))
            factors.emplace_back(VarIndex{v.at(0).get<int>(), v.at(1).get<int>()},
                                 v.at(2).get<int>());
        std::sort(factors.begin(), factors.end());
        p.add_term(Monomial(std::move(factors)), c);
    }
    return p;
}

/// JSON mirror of the PBW term map: [{"coeff": "...", "factors": [[i,j,k],...]}, ...]
inline nlohmann::json to_json(const UEAElement& u) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : u.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [g, e] : m.factors()) factors.push_back({g.row, g.col, e});
        out.push_back({{"coeff", c.str()}, {"factors", factors}});
    }
    return out;
}

inline UEAElement uea_from_json(const nlohmann::json& j) {
    UEAElement u;
    for (const auto& term : j) {
        Int c(term.at("coeff").get<std::string>());
        std::vector<std::pair<Generator, int>> factors;
        for (const auto& f : term.at("factors"))
            factors.emplace_back(Generator{f.at(0).get<int>(), f.at(1).get<int>()},
                                 f.at(2).get<int>());
        std::sort(factors.begin(), factors.end());
        u.add_term(PBWMonomial(std::move(factors)), c);
    }
    return u;
}

}  // namespace koszul
