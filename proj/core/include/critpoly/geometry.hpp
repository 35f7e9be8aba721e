#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "critpoly/poly.hpp"
#include "critpoly/rootfind.hpp"

namespace critpoly {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponents above this are evaluated as the enclosing-circle radius;
/// sigma_p differs from sigma_inf by well under 1e-6 there for unit-scale data.
inline constexpr double kMaxFiniteExponent = 64.0;

enum class VarianceSolver { kClosedForm, kWeiszfeld, kConvexDescent, kWelzl };

std::string_view to_string(VarianceSolver s) noexcept;

/// Minimizer c and value of ((1/n) sum |z_k - c|^p)^(1/p).
struct VarianceResult {
    double p = 2.0;  // +infinity for the minimax radius
    Complex center;
    double value = 0.0;
    VarianceSolver solver = VarianceSolver::kClosedForm;
    int iterations = 0;
};

/// ((1/n) sum |z_k - c|^p)^(1/p), or max_k |z_k - c| for p = infinity.
double variance_objective(const RootSet& roots, double p, Complex c);

/// Closed form: the centroid is the minimizer.
VarianceResult sigma2(const RootSet& roots);

struct WeiszfeldOptions {
    int max_iters = 10000;
    double step_tol = 1e-12;
};

/// Mean absolute deviation about the geometric median, located by Weiszfeld
/// iteration from the centroid. When an iterate hits a data point, that
/// point is tested for optimality via its subgradient and, if it is not
/// optimal, left by the Vardi-Zhang modified step.
VarianceResult sigma1(const RootSet& roots, const WeiszfeldOptions& opts = {});

/// General p >= 1. Exact p = 1, 2, infinity dispatch to the dedicated
/// solvers; p > kMaxFiniteExponent dispatches to sigma_inf. Otherwise the
/// convex objective is minimized by damped Newton descent with Armijo
/// backtracking, started at the centroid.
VarianceResult sigma_p(const RootSet& roots, double p);

/// Smallest enclosing circle (Welzl, fixed-seed permutation).
VarianceResult sigma_inf(const RootSet& roots);

struct GammaReport {
    Complex centroid;
    RootSet critical_points;
    std::vector<double> distances;  // |centroid - w_j|
    double gamma = 0.0;
    std::size_t argmin_index = 0;
};

/// Distance from the centroid of the zeros to the nearest critical point.
GammaReport gamma(const RootSet& roots, const RootFindConfig& cfg = {});
GammaReport gamma_from(const RootSet& roots, RootSet critical);

/// max_k min_j |z_k - w_j|.
double sendov_distance(const RootSet& roots, const RootFindConfig& cfg = {});
double sendov_distance_from(const RootSet& roots, const RootSet& critical);

enum class ConfigurationClass { kAllEqual, kCollinear, kGeneric };

std::string_view to_string(ConfigurationClass c) noexcept;

/// Singular values of the centred 2 x n coordinate matrix.
struct PrincipalSpread {
    double major = 0.0;
    double minor = 0.0;
};

PrincipalSpread principal_spread(const RootSet& roots);

ConfigurationClass classify_configuration(const RootSet& roots);

}  // namespace critpoly
