#include "critpoly/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "critpoly/errors.hpp"

namespace critpoly {

CheckOutcome make_outcome(std::string name, double lhs, double rhs, double tol) {
    CheckOutcome o;
    o.name = std::move(name);
    o.lhs = lhs;
    o.rhs = rhs;
    o.slack = rhs - lhs;
    o.tol = tol;
    o.passed = o.slack >= -tol;
    o.equality = std::abs(o.slack) <= tol;
    return o;
}

Tolerances Tolerances::for_profile(TolProfile profile) {
    if (profile == TolProfile::kStrict) return {1e-13, 1e-11, 1e-12, RootFindConfig::strict()};
    return {};
}

ZeroData ZeroData::analyze(RootSet zeros, const RootFindConfig& cfg) {
    if (zeros.size() < 2) throw InputError("analyze: need at least two zeros");
    ZeroData d{std::move(zeros), RootSet{}, Complex{}};
    d.critical = critical_points(d.zeros, cfg);
    d.centroid = critpoly::centroid(d.zeros);
    return d;
}

void require_unit_disk(const RootSet& zeros, const char* who) {
    for (const auto& z : zeros) {
        if (std::abs(z) > 1.0 + 1e-12) {
            throw InputError(std::string(who) + ": all zeros must lie in the closed unit disk");
        }
    }
}

namespace {

double degree(const ZeroData& d) { return static_cast<double>(d.zeros.size()); }

double nearest_critical_distance(const ZeroData& d, Complex from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : d.critical) best = std::min(best, std::abs(from - w));
    return best;
}

double centroid_gap(const ZeroData& d) {
    // A single critical point of a quadratic is the centroid itself.
    if (d.zeros.size() == 2) return 0.0;
    return nearest_critical_distance(d, d.centroid);
}

double root_tol(const Tolerances& tol, double rhs) { return tol.root_dependent * (1.0 + std::abs(rhs)); }

}  // namespace

CheckOutcome check_schoenberg(const ZeroData& d, const Tolerances& tol) {
    const double n = degree(d);
    double lhs = 0.0;
    for (const auto& w : d.critical) lhs += std::norm(w);
    Complex sum{};
    double sq = 0.0;
    for (const auto& z : d.zeros) {
        sum += z;
        sq += std::norm(z);
    }
    const double rhs = std::norm(sum) / (n * n) + (n - 2.0) / n * sq;
    CheckOutcome o = make_outcome("schoenberg", lhs, rhs, root_tol(tol, rhs));
    o.classification = classify_configuration(d.zeros);
    o.equality_expected = *o.classification != ConfigurationClass::kGeneric;
    return o;
}

CheckOutcome check_centroid_disk(const ZeroData& d, const Tolerances& tol) {
    require_unit_disk(d.zeros, "check_centroid_disk");
    return make_outcome("centroid_disk", centroid_gap(d), 1.0, root_tol(tol, 1.0));
}

CheckOutcome check_averaging_identity(const ZeroData& d, const Tolerances& tol) {
    const double n = degree(d);
    double lhs = 0.0, sq = 0.0;
    for (const auto& w : d.critical) {
        lhs += std::norm(d.centroid - w);
        sq += std::norm(w);
    }
    const double rhs = sq - (n - 1.0) * std::norm(d.centroid);
    CheckOutcome o = make_outcome("averaging_identity", lhs, rhs, tol.identity * (1.0 + std::abs(rhs)));
    o.equality_expected = true;
    return o;
}

CheckOutcome check_variance_bound(const ZeroData& d, const Tolerances& tol) {
    const std::size_t n = d.zeros.size();
    const double lhs = centroid_gap(d);
    const double rhs = n == 2 ? 0.0 : refined_upper(static_cast<double>(n)) * sigma2(d.zeros).value;
    CheckOutcome o = make_outcome("variance_bound", lhs, rhs, root_tol(tol, rhs));
    const ConfigurationClass cls = classify_configuration(d.zeros);
    o.classification = cls;
    o.equality_expected = n == 2 || cls == ConfigurationClass::kAllEqual ||
                          (n == 3 && cls == ConfigurationClass::kCollinear);
    return o;
}

CheckOutcome check_refined_radius(const ZeroData& d, const Tolerances& tol) {
    require_unit_disk(d.zeros, "check_refined_radius");
    const double rhs = refined_upper(degree(d));
    return make_outcome("refined_radius", centroid_gap(d), rhs, root_tol(tol, rhs));
}

CheckOutcome check_pawlowski_upper(const ZeroData& d, const Tolerances& tol) {
    require_unit_disk(d.zeros, "check_pawlowski_upper");
    const double rhs = pawlowski_upper(degree(d));
    return make_outcome("pawlowski_upper", centroid_gap(d), rhs, root_tol(tol, rhs));
}

CheckOutcome check_borcea(const ZeroData& d, double p, const Tolerances& tol) {
    if (std::isnan(p) || p < 1.0) throw InputError("check_borcea: p must be >= 1");
    const double lhs = sendov_distance_from(d.zeros, d.critical);
    const double rhs = sigma_p(d.zeros, p).value;
    return make_outcome("borcea", lhs, rhs, root_tol(tol, rhs));
}

CheckOutcome check_generalized_borcea(const ZeroData& d, const WeightVector& weights, double p,
                                      const Tolerances& tol) {
    if (std::isnan(p) || p < 1.0) throw InputError("check_generalized_borcea: p must be >= 1");
    const Complex anchor = weighted_centroid(d.zeros, weights);
    const double lhs = nearest_critical_distance(d, anchor);
    const double rhs = sigma_p(d.zeros, p).value;
    return make_outcome("generalized_borcea", lhs, rhs, root_tol(tol, rhs));
}

// RootSet entry points analyze once with the caller's root-finder settings.

CheckOutcome check_schoenberg(const RootSet& zeros, const RootFindConfig& cfg) {
    return check_schoenberg(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_centroid_disk(const RootSet& zeros, const RootFindConfig& cfg) {
    require_unit_disk(zeros, "check_centroid_disk");
    return check_centroid_disk(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_averaging_identity(const RootSet& zeros, const RootFindConfig& cfg) {
    return check_averaging_identity(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_variance_bound(const RootSet& zeros, const RootFindConfig& cfg) {
    return check_variance_bound(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_refined_radius(const RootSet& zeros, const RootFindConfig& cfg) {
    require_unit_disk(zeros, "check_refined_radius");
    return check_refined_radius(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_pawlowski_upper(const RootSet& zeros, const RootFindConfig& cfg) {
    require_unit_disk(zeros, "check_pawlowski_upper");
    return check_pawlowski_upper(ZeroData::analyze(zeros, cfg));
}

CheckOutcome check_borcea(const RootSet& zeros, double p, const RootFindConfig& cfg) {
    return check_borcea(ZeroData::analyze(zeros, cfg), p);
}

CheckOutcome check_generalized_borcea(const RootSet& zeros, const WeightVector& weights, double p,
                                      const RootFindConfig& cfg) {
    if (weights.size() != zeros.size()) throw InputError("check_generalized_borcea: weight/root length mismatch");
    return check_generalized_borcea(ZeroData::analyze(zeros, cfg), weights, p);
}

// -- Degree-only bounds -----------------------------------------------------

namespace {

void require_degree(double n) {
    if (!(n >= 2.0)) throw InputError("bounds: degree must be >= 2");
}

// ln(n)/(n-1); both classical bounds are functions of this exponent.
double log_ratio(double n) { return std::log(n) / (n - 1.0); }

}  // namespace

double lower_bound(double n) {
    require_degree(n);
    return std::exp(-log_ratio(n));
}

double pawlowski_upper(double n) {
    require_degree(n);
    // 2 e^a / (e^{2a} + 1) = sech(a)
    return 1.0 / std::cosh(log_ratio(n));
}

double refined_upper(double n) {
    require_degree(n);
    return std::sqrt((n - 2.0) / (n - 1.0));
}

double lower_asymptote(double n) {
    require_degree(n);
    return 1.0 - std::log(n) / n;
}

double pawlowski_asymptote(double n) {
    require_degree(n);
    const double t = std::log(n) / n;
    return 1.0 - 0.5 * t * t;
}

double lower_gap(double n) {
    require_degree(n);
    return -std::expm1(-log_ratio(n));
}

double pawlowski_gap(double n) {
    require_degree(n);
    const double a = log_ratio(n);
    const double s = std::sinh(0.5 * a);
    return 2.0 * s * s / std::cosh(a);
}

std::vector<BoundsRow> bounds_table(std::span<const long long> n_values) {
    std::vector<BoundsRow> rows;
    rows.reserve(n_values.size());
    for (long long n : n_values) {
        if (n < 2) throw InputError("bounds_table: every n must be >= 2 (got " + std::to_string(n) + ")");
        const double x = static_cast<double>(n);
        rows.push_back({n, lower_bound(x), pawlowski_upper(x), refined_upper(x), lower_asymptote(x),
                        pawlowski_asymptote(x)});
    }
    return rows;
}

void write_bounds_csv(std::ostream& os, std::span<const BoundsRow> rows) {
    os << "n,lower,pawlowski_upper,refined_upper,lower_asymptote,pawlowski_asymptote\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%.15g,%.15g,%.15g,%.15g,%.15g\n", r.n, r.lower, r.pawlowski_upper,
                      r.refined_upper, r.lower_asymptote, r.pawlowski_asymptote);
        os << buf;
    }
}

}  // namespace critpoly
