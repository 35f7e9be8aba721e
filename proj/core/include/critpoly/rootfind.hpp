#pragma once

#include <span>

#include "critpoly/poly.hpp"

namespace critpoly {

struct RootFindConfig {
    int max_iters = 200;
    /// Stop once every per-root correction is below tol * (1 + |root|).
    double tol = 1e-12;
    /// Residual-guarded Newton steps applied to each root after the main loop.
    int polish_iters = 3;

    void validate() const;

    /// Tighter settings used when re-verifying a suspicious check result.
    static RootFindConfig strict() { return {1000, 1e-15, 8}; }
};

struct RootFindResult {
    RootSet roots;
    int iterations = 0;
    bool converged = false;
    /// Normwise backward error max_k |f(root_k)| / (max_j |a_j| sum_j |root_k|^j)
    /// of the monic polynomial.
    double residual = 0.0;
};

/// All roots of the polynomial with ascending coefficients `coeffs` by
/// Aberth-Ehrlich simultaneous iteration. Never throws on non-convergence;
/// check `converged`. Multiple roots come back as clusters of nearby values.
RootFindResult find_roots(std::span<const Complex> coeffs, const RootFindConfig& cfg = {});

/// The n - 1 critical points (zeros of F') of F = prod (z - r_k).
///
/// The derivative is expanded in the frame centred at the centroid and
/// scaled to unit radius, then mapped back. Critical points are
/// affine-equivariant, so this is the same point set; it keeps coincident or
/// tightly clustered zeros from turning into large root-finder noise.
///
/// Throws ConvergenceError when the root finder does not converge.
RootSet critical_points(const RootSet& roots, const RootFindConfig& cfg = {});

}  // namespace critpoly
