#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "critpoly/geometry.hpp"
#include "critpoly/poly.hpp"
#include "critpoly/rootfind.hpp"

namespace critpoly {

/// Result of evaluating one inequality lhs <= rhs on one configuration.
struct CheckOutcome {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    double tol = 0.0;
    bool passed = false;    // slack >= -tol
    bool equality = false;  // |slack| <= tol
    std::optional<ConfigurationClass> classification;
    /// Whether the known equality characterization predicts equality here.
    std::optional<bool> equality_expected;

    /// Observed equality disagrees with the predicted equality case.
    bool equality_mismatch() const { return equality_expected && equality != *equality_expected; }
};

CheckOutcome make_outcome(std::string name, double lhs, double rhs, double tol);

enum class TolProfile { kDefault, kStrict };

/// Tolerance policy. Root-finder dependent checks use rel * (1 + |rhs|);
/// closed-form bound comparisons use an absolute tolerance.
struct Tolerances {
    double root_dependent = 1e-7;
    double identity = 1e-8;
    double formula = 1e-12;
    RootFindConfig rootfind{};

    static Tolerances for_profile(TolProfile profile);
};

/// Zeros together with their centroid and critical points, so several
/// checks can share one root-finding pass.
struct ZeroData {
    RootSet zeros;
    RootSet critical;
    Complex centroid;

    static ZeroData analyze(RootSet zeros, const RootFindConfig& cfg = {});
};

/// Throws InputError unless every |z_k| <= 1 + 1e-12.
void require_unit_disk(const RootSet& zeros, const char* who);

// -- Proven inequalities ----------------------------------------------------

/// sum |w_j|^2 <= |sum z_k|^2 / n^2 + ((n-2)/n) sum |z_k|^2,
/// equality iff the zeros are collinear.
CheckOutcome check_schoenberg(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_schoenberg(const RootSet& zeros, const RootFindConfig& cfg = {});

/// For zeros in the closed unit disk, some critical point lies within
/// distance 1 of the centroid.
CheckOutcome check_centroid_disk(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_centroid_disk(const RootSet& zeros, const RootFindConfig& cfg = {});

/// sum_j |G - w_j|^2 == sum_j |w_j|^2 - (n-1)|G|^2 with G the centroid.
CheckOutcome check_averaging_identity(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_averaging_identity(const RootSet& zeros, const RootFindConfig& cfg = {});

/// gamma <= sqrt((n-2)/(n-1)) * sigma_2, no disk constraint. Equality iff
/// n = 2, or n = 3 and collinear, or n > 3 and all zeros equal.
CheckOutcome check_variance_bound(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_variance_bound(const RootSet& zeros, const RootFindConfig& cfg = {});

/// gamma <= sqrt((n-2)/(n-1)) for zeros in the closed unit disk.
CheckOutcome check_refined_radius(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_refined_radius(const RootSet& zeros, const RootFindConfig& cfg = {});

/// gamma <= 2 n^(1/(n-1)) / (n^(2/(n-1)) + 1) for zeros in the closed unit disk.
CheckOutcome check_pawlowski_upper(const ZeroData& d, const Tolerances& tol = {});
CheckOutcome check_pawlowski_upper(const RootSet& zeros, const RootFindConfig& cfg = {});

// -- Conjectures (reported, never asserted) ---------------------------------

/// max_k min_j |z_k - w_j| <= sigma_p.
CheckOutcome check_borcea(const ZeroData& d, double p, const Tolerances& tol = {});
CheckOutcome check_borcea(const RootSet& zeros, double p, const RootFindConfig& cfg = {});

/// min_j |sum l_k z_k - w_j| <= sigma_p.
CheckOutcome check_generalized_borcea(const ZeroData& d, const WeightVector& weights, double p,
                                      const Tolerances& tol = {});
CheckOutcome check_generalized_borcea(const RootSet& zeros, const WeightVector& weights, double p,
                                      const RootFindConfig& cfg = {});

// -- Degree-only bounds -----------------------------------------------------

/// n^(-1/(n-1)), attained by z^n - z.
double lower_bound(double n);
/// 2 n^(1/(n-1)) / (n^(2/(n-1)) + 1).
double pawlowski_upper(double n);
/// sqrt((n-2)/(n-1)).
double refined_upper(double n);
/// 1 - ln(n)/n.
double lower_asymptote(double n);
/// 1 - (ln(n)/n)^2 / 2.
double pawlowski_asymptote(double n);
/// 1 - lower_bound(n), evaluated without cancellation.
double lower_gap(double n);
/// 1 - pawlowski_upper(n), evaluated without cancellation.
double pawlowski_gap(double n);

struct BoundsRow {
    long long n = 2;
    double lower = 0.0;
    double pawlowski_upper = 0.0;
    double refined_upper = 0.0;
    double lower_asymptote = 0.0;
    double pawlowski_asymptote = 0.0;
};

/// Throws InputError for any n < 2.
std::vector<BoundsRow> bounds_table(std::span<const long long> n_values);

/// CSV with header n,lower,pawlowski_upper,refined_upper,lower_asymptote,pawlowski_asymptote
/// and 15 significant digits, LF line endings.
void write_bounds_csv(std::ostream& os, std::span<const BoundsRow> rows);

}  // namespace critpoly
