#pragma once

#include "rinehart/expr.hpp"
#include "rinehart/finite_dual.hpp"
#include "rinehart/fixtures.hpp"
#include "rinehart/lie_rinehart.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace rinehart {

using Json = nlohmann::json;

namespace detail {

inline Poly json_poly(const Json& j, int vars, const std::string& path) {
    if (!j.is_string())
        throw ValidationError(path + ": expected a polynomial string");
    try {
        return parse_poly(j.get<std::string>(), vars);
    } catch (const ParseError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

} // namespace detail

/// Presentation document:
/// {"variables": k, "rank": r, "anchor": [[poly x k] x r],
///  "bracket": {"i,j": [poly x r]}, "name": optional}
/// Omitted bracket entries are zero; a missing mirror entry (j,i) is filled
/// by antisymmetry, a present one is checked.
inline PresentationPtr presentation_from_json(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("/: presentation must be an object");
    if (!doc.contains("variables") || !doc["variables"].is_number_integer())
        throw ValidationError("/variables: expected an integer");
    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        throw ValidationError("/rank: expected an integer");
    int vars = doc["variables"].get<int>();
    int rank = doc["rank"].get<int>();
    if (vars < 1) throw ValidationError("/variables: must be >= 1");
    if (rank < 1) throw ValidationError("/rank: must be >= 1");

    if (!doc.contains("anchor") || !doc["anchor"].is_array() ||
        doc["anchor"].size() != static_cast<std::size_t>(rank))
        throw ValidationError("/anchor: expected an array of rank entries");
    std::vector<Derivation> anchor;
    for (int i = 0; i < rank; ++i) {
        const Json& row = doc["anchor"][i];
        std::string path = "/anchor/" + std::to_string(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(vars))
            throw ValidationError(path + ": expected " + std::to_string(vars) +
                                  " component polynomials");
        std::vector<Poly> comps;
        for (int j = 0; j < vars; ++j)
            comps.push_back(detail::json_poly(row[j], vars, path + "/" + std::to_string(j)));
        anchor.emplace_back(std::move(comps));
    }

    std::vector<std::vector<std::vector<Poly>>> bracket(
        rank, std::vector<std::vector<Poly>>(rank, std::vector<Poly>(rank, Poly::zero(vars))));
    std::vector<std::vector<bool>> given(rank, std::vector<bool>(rank, false));
    if (doc.contains("bracket")) {
        if (!doc["bracket"].is_object())
            throw ValidationError("/bracket: expected an object keyed \"i,j\"");
        for (auto& [key, value] : doc["bracket"].items()) {
            std::string path = "/bracket/" + key;
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw ValidationError(path + ": key must be \"i,j\"");
            int i = 0, j = 0;
            try {
                i = std::stoi(key.substr(0, comma));
                j = std::stoi(key.substr(comma + 1));
            } catch (...) {
                throw ValidationError(path + ": key must be \"i,j\" with integer indices");
            }
            if (i < 1 || i > rank || j < 1 || j > rank)
                throw ValidationError(path + ": generator index out of range");
            if (!value.is_array() || value.size() != static_cast<std::size_t>(rank))
                throw ValidationError(path + ": expected " + std::to_string(rank) +
                                      " coefficient polynomials");
            for (int m = 0; m < rank; ++m)
                bracket[i - 1][j - 1][m] =
                    detail::json_poly(value[m], vars, path + "/" + std::to_string(m));
            given[i - 1][j - 1] = true;
        }
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (given[i][j] && !given[j][i])
                for (int m = 0; m < rank; ++m) bracket[j][i][m] = -bracket[i][j][m];

    std::string name = doc.value("name", std::string());
    return make_presentation(vars, rank, std::move(anchor), std::move(bracket), name);
}

/// Representation document: {"rank": d, "matrices": [[[poly x d] x d] x r]}.
inline URep rep_from_json(const PresentationPtr& pres, const Json& doc) {
    if (!doc.is_object()) throw ValidationError("/: representation must be an object");
    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        throw ValidationError("/rank: expected an integer");
    int d = doc["rank"].get<int>();
    if (d < 1) throw ValidationError("/rank: must be >= 1");
    if (!doc.contains("matrices") || !doc["matrices"].is_array() ||
        doc["matrices"].size() != static_cast<std::size_t>(pres->rank()))
        throw ValidationError("/matrices: expected one matrix per generator (" +
                              std::to_string(pres->rank()) + ")");
    URep rep{pres, d, {}};
    for (int i = 0; i < pres->rank(); ++i) {
        const Json& mat = doc["matrices"][i];
        std::string path = "/matrices/" + std::to_string(i);
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(d))
            throw ValidationError(path + ": expected " + std::to_string(d) + " rows");
        PolyMatrix pm(d, d, pres->vars());
        for (int r = 0; r < d; ++r) {
            const Json& row = mat[r];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
                throw ValidationError(path + "/" + std::to_string(r) + ": expected " +
                                      std::to_string(d) + " entries");
            for (int c = 0; c < d; ++c)
                pm.at(r, c) = detail::json_poly(
                    row[c], pres->vars(),
                    path + "/" + std::to_string(r) + "/" + std::to_string(c));
        }
        rep.mats.push_back(std::move(pm));
    }
    validate_rep(rep);
    return rep;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ValidationError(path + ": invalid JSON: " + e.what());
    }
    return doc;
}

/// Loads a presentation from a builtin fixture name or a JSON file path.
inline PresentationPtr load_presentation(const std::string& nameOrPath) {
    if (is_builtin_fixture(nameOrPath)) return make_fixture(nameOrPath);
    return presentation_from_json(read_json_file(nameOrPath));
}

inline URep load_rep(const PresentationPtr& pres, const std::string& path) {
    return rep_from_json(pres, read_json_file(path));
}

} // namespace rinehart
