// tautring: exact localization calculator for tautological rings.
//
//   tautring localize      --manifold builtin:cp2 --class "e*p1"
//   tautring homomorphism  --manifold builtin:s2xs4 [--max-degree 16] [--conjugated]
//   tautring verify-paper  [--seed 0] [--format text|json|latex]
//   tautring echo-manifold --manifold builtin:s2xs2
//
// Manifolds are builtins (s<2k>, s<2a>xs<2b>, cp<n>) or JSON files in the
// schema printed by echo-manifold. All arithmetic is exact; rationals render
// as "a/b".
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "tautring/tautring.hpp"
#include "tautring/verify.hpp"

namespace {

using namespace tautring;

int default_max_degree() {
    if (const char* env = std::getenv("TAUTRING_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

TorusManifold resolve_manifold(const std::string& spec) {
    std::string name = spec;
    bool builtin_only = false;
    if (name.rfind("builtin:", 0) == 0) {
        name = name.substr(8);
        builtin_only = true;
    }
    static const std::regex sphere_re("^s([0-9]+)$");
    static const std::regex product_re("^s([0-9]+)xs([0-9]+)$");
    static const std::regex cp_re("^cp([0-9]+)$");
    std::smatch m;
    auto half = [](const std::string& s, const char* what) {
        int v = std::stoi(s);
        if (v <= 0 || v % 2 != 0)
            throw std::invalid_argument(std::string(what) + " dimension must be even and positive");
        return v / 2;
    };
    if (std::regex_match(name, m, sphere_re))
        return sphere(half(m[1], "sphere"));
    if (std::regex_match(name, m, product_re))
        return product(sphere(half(m[1], "sphere")), sphere(half(m[2], "sphere")));
    if (std::regex_match(name, m, cp_re))
        return projective_space(std::stoi(m[1]));
    if (builtin_only)
        throw std::invalid_argument("unknown builtin manifold: " + name);
    return load_manifold_file(spec);
}

int run_localize(const std::string& manifold_spec, const std::string& class_expr,
                 OutputFormat format) {
    TorusManifold M = resolve_manifold(manifold_spec);
    CharClass c = parse_class(class_expr, M.n);

    FibreIntegral integral = fibre_integrate(M, c);
    if (integral.status == LocalizationStatus::NonIsolatedFixedPoint) {
        std::cerr << "error: fixed point \"" << integral.offending_point
                  << "\" is not isolated (a tangent weight vanishes)\n";
        return 1;
    }
    if (integral.status == LocalizationStatus::NotPolynomial) {
        std::cerr << "error: localized sum is not polynomial; remainder witness = "
                  << integral.remainder.to_string() << "\n";
        return 1;
    }

    auto pe = to_pe_basis(integral.value, WeylContext{M.n});
    switch (format) {
        case OutputFormat::Text: {
            std::cout << "manifold = " << M.name << " (rank " << M.n << ")\n";
            std::cout << "integral = " << integral.value.to_string() << "\n";
            if (pe.ok())
                std::cout << "class = " << pe.value->to_string() << "\n";
            else
                std::cout << "class = (integral is not Weyl-invariant: not fixed by "
                          << pe.witness->describe() << ")\n";
            break;
        }
        case OutputFormat::Latex: {
            if (pe.ok()) std::cout << pe.value->to_latex() << "\n";
            else std::cout << integral.value.to_string() << "\n";
            break;
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["manifold"] = M.name;
            j["rank"] = M.n;
            j["class"] = c.to_string();
            j["integral"] = integral.value.to_string();
            if (pe.ok()) j["pe_class"] = pe.value->to_string();
            else j["pe_class"] = nullptr;
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

int run_homomorphism(const std::string& manifold_spec, int max_degree, bool conjugated,
                     OutputFormat format) {
    TorusManifold M = resolve_manifold(manifold_spec);
    GeneratorMap g = connected_sum_hom(M, max_degree);
    if (conjugated) {
        if (g.point_class_status != PointClassStatus::Transported) {
            std::cerr << "error: --conjugated needs transported point classes, but "
                      << g.unavailable_reason << "\n";
            return 1;
        }
        g = conjugated_hom(g);
    }
    switch (format) {
        case OutputFormat::Text: std::cout << generator_map_to_text(g); break;
        case OutputFormat::Latex: std::cout << generator_map_to_latex(g); break;
        case OutputFormat::Json: std::cout << generator_map_to_json(g).dump(2) << "\n"; break;
    }
    return 0;
}

int run_verify(uint64_t seed, OutputFormat format) {
    VerifyReport report = verify_paper(seed);

    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["seed"] = report.seed;
        j["pass"] = report.all_pass();
        j["criteria"] = nlohmann::ordered_json::array();
        for (const auto& criterion : report.criteria) {
            nlohmann::ordered_json c;
            c["number"] = criterion.number;
            c["title"] = criterion.title;
            c["pass"] = criterion.pass();
            c["checks"] = nlohmann::ordered_json::array();
            for (const auto& check : criterion.checks) {
                nlohmann::ordered_json k;
                k["name"] = check.name;
                k["pass"] = check.pass;
                if (!check.pass) k["detail"] = check.detail;
                c["checks"].push_back(std::move(k));
            }
            j["criteria"].push_back(std::move(c));
        }
        std::cout << j.dump(2) << "\n";
        return report.all_pass() ? 0 : 1;
    }

    if (format == OutputFormat::Latex) {
        // the displayed tables, diffable against the source
        std::cout << "% CP^2 pullback classes\n\\begin{align*}\n";
        auto cp2 = projective_space(2);
        const CharClass e = CharClass::euler(2), p1 = CharClass::pontryagin(2, 1);
        for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{0, 2},
                            std::pair{1, 1}, std::pair{2, 0}, std::pair{0, 3},
                            std::pair{1, 2}, std::pair{2, 1}, std::pair{3, 0}}) {
            auto q = kappa_pullback(cp2, e.pow(a) * p1.pow(b));
            std::cout << "  q_{" << a << "," << b << "} &= "
                      << (q.ok() ? q.value.to_latex() : std::string("\\text{failed}"))
                      << "\\\\\n";
        }
        std::cout << "\\end{align*}\n% stabilisation homomorphism for S^2 x S^4\n"
                  << generator_map_to_latex(connected_sum_hom(product(sphere(1), sphere(2)), 12));
    }

    for (const auto& criterion : report.criteria) {
        for (const auto& check : criterion.checks) {
            std::cout << (check.pass ? "PASS" : "FAIL") << " [" << criterion.number << "] "
                      << check.name;
            if (!check.pass) std::cout << " -- " << check.detail;
            std::cout << "\n";
        }
    }
    std::cout << report.check_count() << " checks: "
              << (report.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    return report.all_pass() ? 0 : 1;
}

int run_echo(const std::string& manifold_spec) {
    TorusManifold M = resolve_manifold(manifold_spec);
    std::cout << manifold_to_json(M).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact localization calculator for tautological rings"};
    app.require_subcommand(1);

    std::string manifold_spec, class_expr, format_name = "text";
    int max_degree = default_max_degree();
    bool conjugated = false;
    uint64_t seed = 0;

    auto* localize = app.add_subcommand("localize", "fibre-integrate a class over a manifold");
    localize->add_option("--manifold", manifold_spec, "builtin:<name> or JSON file")->required();
    localize->add_option("--class", class_expr, "class expression, e.g. \"e*p1^2\"")->required();
    localize->add_option("--format", format_name, "text|json|latex");

    auto* hom = app.add_subcommand("homomorphism", "connected-sum generator table");
    hom->add_option("--manifold", manifold_spec, "builtin:<name> or JSON file")->required();
    hom->add_option("--max-degree", max_degree, "generator degree cap");
    hom->add_flag("--conjugated", conjugated, "use the conjugated point-class transport");
    hom->add_option("--format", format_name, "text|json|latex");

    auto* verify = app.add_subcommand("verify-paper", "replay all published identities");
    verify->add_option("--seed", seed, "seed for the property-suite RNG");
    verify->add_option("--format", format_name, "text|json|latex");

    auto* echo = app.add_subcommand("echo-manifold", "print fixed-point data as JSON");
    echo->add_option("--manifold", manifold_spec, "builtin:<name> or JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        OutputFormat format = parse_format(format_name);
        if (localize->parsed()) return run_localize(manifold_spec, class_expr, format);
        if (hom->parsed()) return run_homomorphism(manifold_spec, max_degree, conjugated, format);
        if (verify->parsed()) return run_verify(seed, format);
        if (echo->parsed()) return run_echo(manifold_spec);
    } catch (const ClassParseError& e) {
        std::cerr << "class expression error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
