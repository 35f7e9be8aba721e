#pragma once

#include <istream>
#include <string>
#include <vector>

#include "critpoly/poly.hpp"
#include "critpoly/rootfind.hpp"
#include "json_writer.hpp"

namespace critpoly::cli {

/// Largest degree accepted on the command line.
inline constexpr std::size_t kCliMaxDegree = 64;

/// Input document: exactly one of `roots` or ascending monic `coeffs`,
/// complex numbers written as [re, im].
struct PolynomialSpec {
    std::vector<Complex> roots;
    std::vector<Complex> coeffs;
    bool from_coeffs = false;

    std::size_t degree() const { return from_coeffs ? coeffs.size() - 1 : roots.size(); }
};

/// Throws InputError describing the first problem found.
PolynomialSpec parse_spec(std::istream& in);
PolynomialSpec load_spec(const std::string& path);

/// The zeros of the spec; coefficient input goes through the root finder.
RootSet resolve_roots(const PolynomialSpec& spec, const RootFindConfig& cfg);

Json complex_json(Complex z);
Json complex_list(std::span<const Complex> zs);
Json echo(const PolynomialSpec& spec);

}  // namespace critpoly::cli
