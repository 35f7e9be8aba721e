#include "spec_io.hpp"

#include <fstream>
#include <iostream>

#include "critpoly/errors.hpp"

namespace critpoly::cli {

namespace {

std::vector<Complex> complex_array(const Json& j, const char* field) {
    if (!j.is_array()) throw InputError(std::string("spec: '") + field + "' must be an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw InputError(std::string("spec: every entry of '") + field + "' must be a [re, im] pair of numbers");
        }
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

}  // namespace

PolynomialSpec parse_spec(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("spec: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("spec: top level must be an object");
    const bool has_roots = doc.contains("roots");
    const bool has_coeffs = doc.contains("coeffs");
    if (has_roots == has_coeffs) throw InputError("spec: give exactly one of 'roots' or 'coeffs'");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() != "roots" && it.key() != "coeffs") throw InputError("spec: unknown field '" + it.key() + "'");
    }

    PolynomialSpec spec;
    if (has_roots) {
        spec.roots = complex_array(doc["roots"], "roots");
        RootSet check(spec.roots);  // rejects non-finite values
    } else {
        spec.from_coeffs = true;
        spec.coeffs = complex_array(doc["coeffs"], "coeffs");
        if (spec.coeffs.empty() || spec.coeffs.back() != Complex(1.0, 0.0)) {
            throw InputError("spec: coeffs must be monic, last pair [1, 0]");
        }
        for (const auto& c : spec.coeffs) {
            if (!is_finite(c)) throw InputError("spec: coefficients must be finite");
        }
    }
    const std::size_t n = spec.from_coeffs ? spec.coeffs.size() - 1 : spec.roots.size();
    if (n < 2) throw InputError("spec: degree must be >= 2");
    if (n > kCliMaxDegree) {
        throw InputError("spec: degree " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(kCliMaxDegree));
    }
    return spec;
}

PolynomialSpec load_spec(const std::string& path) {
    if (path == "-") return parse_spec(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("spec: cannot open '" + path + "'");
    return parse_spec(in);
}

RootSet resolve_roots(const PolynomialSpec& spec, const RootFindConfig& cfg) {
    if (!spec.from_coeffs) return RootSet(spec.roots);
    RootFindResult res = find_roots(spec.coeffs, cfg);
    if (!res.converged) {
        throw ConvergenceError("spec: root finder did not converge on the given coefficients", {}, res.residual,
                               res.iterations);
    }
    return std::move(res.roots);
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json complex_list(std::span<const Complex> zs) {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back(complex_json(z));
    return out;
}

Json echo(const PolynomialSpec& spec) {
    Json j = Json::object();
    if (spec.from_coeffs) {
        j["coeffs"] = complex_list(spec.coeffs);
    } else {
        j["roots"] = complex_list(spec.roots);
    }
    return j;
}

}  // namespace critpoly::cli
