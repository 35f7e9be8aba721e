#include <algorithm>
#include <cmath>
#include <limits>

#include "critpoly/errors.hpp"
#include "critpoly/geometry.hpp"

namespace critpoly {

std::string_view to_string(ConfigurationClass c) noexcept {
    switch (c) {
        case ConfigurationClass::kAllEqual: return "ALL_EQUAL";
        case ConfigurationClass::kCollinear: return "COLLINEAR";
        case ConfigurationClass::kGeneric: return "GENERIC";
    }
    return "UNKNOWN";
}

GammaReport gamma_from(const RootSet& roots, RootSet critical) {
    if (roots.size() < 2) throw InputError("gamma: need at least two zeros");
    if (critical.size() + 1 != roots.size()) throw InputError("gamma: expected n - 1 critical points");
    GammaReport rep;
    rep.centroid = centroid(roots);
    rep.distances.reserve(critical.size());
    rep.gamma = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < critical.size(); ++j) {
        const double d = std::abs(rep.centroid - critical[j]);
        rep.distances.push_back(d);
        if (d < rep.gamma) {
            rep.gamma = d;
            rep.argmin_index = j;
        }
    }
    rep.critical_points = std::move(critical);
    return rep;
}

GammaReport gamma(const RootSet& roots, const RootFindConfig& cfg) {
    if (roots.size() < 2) throw InputError("gamma: need at least two zeros");
    return gamma_from(roots, critical_points(roots, cfg));
}

double sendov_distance_from(const RootSet& roots, const RootSet& critical) {
    if (roots.size() < 2) throw InputError("sendov_distance: need at least two zeros");
    double worst = 0.0;
    for (const auto& z : roots) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& w : critical) nearest = std::min(nearest, std::abs(z - w));
        worst = std::max(worst, nearest);
    }
    return worst;
}

double sendov_distance(const RootSet& roots, const RootFindConfig& cfg) {
    if (roots.size() < 2) throw InputError("sendov_distance: need at least two zeros");
    return sendov_distance_from(roots, critical_points(roots, cfg));
}

PrincipalSpread principal_spread(const RootSet& roots) {
    if (roots.empty()) return {};
    const Complex c = centroid(roots);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& z : roots) {
        const Complex d = z - c;
        sxx += d.real() * d.real();
        syy += d.imag() * d.imag();
        sxy += d.real() * d.imag();
    }
    // Project on the principal axes directly; the small singular value is
    // far below what the Gram eigenvalues could resolve.
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    const double ct = std::cos(theta), st = std::sin(theta);
    double major = 0.0, minor = 0.0;
    for (const auto& z : roots) {
        const Complex d = z - c;
        const double a = ct * d.real() + st * d.imag();
        const double b = -st * d.real() + ct * d.imag();
        major += a * a;
        minor += b * b;
    }
    PrincipalSpread s{std::sqrt(major), std::sqrt(minor)};
    if (s.minor > s.major) std::swap(s.minor, s.major);
    return s;
}

ConfigurationClass classify_configuration(const RootSet& roots) {
    if (roots.size() <= 1) return ConfigurationClass::kAllEqual;
    const Complex c = centroid(roots);
    double scale = 0.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z - c));
    double diameter = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) diameter = std::max(diameter, std::abs(roots[i] - roots[j]));
    }
    if (diameter <= 1e-10 * (1.0 + scale)) return ConfigurationClass::kAllEqual;
    const PrincipalSpread s = principal_spread(roots);
    if (s.minor <= 1e-9 * (s.major + 1e-30)) return ConfigurationClass::kCollinear;
    return ConfigurationClass::kGeneric;
}

}  // namespace critpoly
