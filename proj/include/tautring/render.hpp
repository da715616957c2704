#pragma once

#include <string>

#include <json.hpp>

#include "tautring/manifolds.hpp"

namespace tautring {

enum class OutputFormat { Text, Json, Latex };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format: " + s + " (expected text|json|latex)");
}

inline nlohmann::ordered_json taut_poly_to_json(const TautPoly& p) {
    auto kind_name = [](TautGenerator::Kind k) {
        switch (k) {
            case TautGenerator::Kind::Kappa: return "kappa";
            case TautGenerator::Kind::PointClass: return "point";
            case TautGenerator::Kind::TangentClass: return "tangent";
        }
        return "kappa";
    };
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = coeff.to_string();
        term["factors"] = nlohmann::ordered_json::array();
        for (const auto& [gen, power] : mono) {
            nlohmann::ordered_json f;
            f["kind"] = kind_name(gen.kind);
            std::string body = CharClass::monomial_text(gen.monomial);
            f["class"] = body.empty() ? "1" : body;
            f["power"] = power;
            term["factors"].push_back(std::move(f));
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

inline nlohmann::ordered_json generator_map_to_json(const GeneratorMap& g) {
    nlohmann::ordered_json j;
    j["source"] = g.source;
    j["target"] = g.target;
    j["rank"] = g.n;
    j["max_degree"] = g.max_degree;
    j["point_class_status"] =
        g.point_class_status == PointClassStatus::Transported ? "transported" : "unavailable";
    if (g.point_class_status == PointClassStatus::Unavailable)
        j["unavailable_reason"] = g.unavailable_reason;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [gen, image] : g.entries) {
        nlohmann::ordered_json row;
        row["kind"] = gen.kind == TautGenerator::Kind::Kappa ? "kappa" : "point";
        std::string body = CharClass::monomial_text(gen.monomial);
        row["class"] = body.empty() ? "1" : body;
        row["degree"] = gen.degree();
        row["image"] = taut_poly_to_json(image);
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline std::string generator_map_to_text(const GeneratorMap& g) {
    std::string out;
    out += "homomorphism R*(" + g.source + ", *) -> R*(" + g.target + ", *)\n";
    out += "rank " + std::to_string(g.n) + ", generators up to degree " +
           std::to_string(g.max_degree) + "\n";
    out += std::string("point classes: ") +
           (g.point_class_status == PointClassStatus::Transported
                ? "transported"
                : "unavailable (" + g.unavailable_reason + "); kappa rows only") +
           "\n";
    for (const auto& [gen, image] : g.entries)
        out += "  " + gen.to_string() + " -> " + image.to_string() + "\n";
    return out;
}

inline std::string generator_map_to_latex(const GeneratorMap& g) {
    std::string out = "\\begin{align*}\n";
    for (const auto& [gen, image] : g.entries)
        out += "  " + gen.to_latex() + " &\\longmapsto " + image.to_latex() + "\\\\\n";
    out += "\\end{align*}\n";
    return out;
}

inline std::string restriction_to_text(const RestrictionTable& t) {
    std::string out;
    out += "fibre restriction of R*(" + t.source + ", *) -> H*(N)\n";
    for (const auto& [gen, image] : t.entries)
        out += "  " + gen.to_string() + " -> " + image.to_string() + "\n";
    return out;
}

} // namespace tautring
