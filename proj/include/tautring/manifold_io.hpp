#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tautring/localization.hpp"

namespace tautring {

// Manifold JSON schema, consumed and produced:
// { "name": string, "rank": n,
//   "fixed_points": [ { "label": string, "weights": [[int,...],...], "sign": 1|-1 } ],
//   "m0": index, "m1": index|null }
inline nlohmann::ordered_json manifold_to_json(const TorusManifold& M) {
    nlohmann::ordered_json j;
    j["name"] = M.name;
    j["rank"] = M.n;
    j["fixed_points"] = nlohmann::ordered_json::array();
    for (const auto& fp : M.fixed_points) {
        nlohmann::ordered_json p;
        p["label"] = fp.label;
        p["weights"] = fp.rep.weights;
        p["sign"] = fp.rep.sign;
        j["fixed_points"].push_back(std::move(p));
    }
    j["m0"] = M.m0;
    if (M.m1) j["m1"] = *M.m1;
    else j["m1"] = nullptr;
    return j;
}

inline TorusManifold manifold_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("manifold: expected a JSON object");
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("manifold: missing field \"") + key + "\"");
        return j.at(key);
    };
    TorusManifold M;
    M.name = require("name").get<std::string>();
    M.n = require("rank").get<int>();
    const auto& points = require("fixed_points");
    if (!points.is_array() || points.empty())
        throw std::invalid_argument("manifold: fixed_points must be a nonempty array");
    for (const auto& p : points) {
        FixedPoint fp;
        fp.label = p.at("label").get<std::string>();
        fp.rep.n = M.n;
        fp.rep.weights = p.at("weights").get<std::vector<std::vector<long long>>>();
        fp.rep.sign = p.at("sign").get<int>();
        M.fixed_points.push_back(std::move(fp));
    }
    M.m0 = require("m0").get<int>();
    const auto& m1 = require("m1");
    if (!m1.is_null()) M.m1 = m1.get<int>();
    M.validate(); // checks weight shapes, signs and marked-point indices
    return M;
}

inline TorusManifold load_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open manifold file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("manifold file " + path + ": " + e.what());
    }
    return manifold_from_json(j);
}

} // namespace tautring
