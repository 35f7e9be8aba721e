#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critpoly/inequalities.hpp"
#include "critpoly/random.hpp"

namespace critpoly {

/// How random root configurations are drawn.
enum class Generator {
    kDisk,       ///< uniform in the disk of the configured radius
    kCollinear,  ///< on a random line through the disk, random real offsets
    kAllEqual,   ///< one random point repeated n times
};

std::string_view to_string(Generator g) noexcept;

RootSet sample_configuration(Generator g, std::size_t n, double radius, Rng& rng);

/// Random weights on the simplex (normalized exponentials).
WeightVector sample_weights(std::size_t n, Rng& rng);

enum class Suite {
    kSchoenberg,
    kCentroidDisk,   ///< plus the averaging identity behind it
    kVarianceBound,
    kRefinedRadius,
    kPawlowski,
    kBorcea,         ///< Borcea and weighted Borcea conjectures, reported only
};

std::string_view to_string(Suite s) noexcept;
/// Proven statements count as failures; conjectures only as anomalies.
bool is_proven(Suite s) noexcept;
/// Suites whose statements assume zeros in the closed unit disk.
bool requires_unit_disk(Suite s) noexcept;

struct FuzzConfig {
    std::vector<Suite> suites;
    std::vector<std::size_t> degrees;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    Generator generator = Generator::kDisk;
    double radius = 1.0;
    double p = 2.0;  // exponent for the Borcea suite
    TolProfile profile = TolProfile::kDefault;
    unsigned threads = 1;
    /// Cap on stored failure/anomaly records per (suite, degree) bucket.
    std::size_t max_records = 32;
};

/// A configuration worth a human look, with the outcome that flagged it.
struct FuzzRecord {
    std::size_t trial = 0;
    RootSet zeros;
    CheckOutcome outcome;
    bool confirmed = false;  // still flagged after strict re-verification
};

struct FuzzBucket {
    Suite suite = Suite::kSchoenberg;
    std::string check;
    std::size_t degree = 0;
    std::size_t evaluated = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;           // proven checks failing after re-verification
    std::size_t equalities = 0;
    std::size_t expected_equalities = 0;
    std::size_t mismatches = 0;       // equality vs prediction, default tolerance
    std::size_t confirmed_mismatches = 0;  // still mismatched at strict tolerance
    std::size_t conjecture_anomalies = 0;  // conjecture violations surviving re-check
    std::size_t solver_failures = 0;
    double min_relative_slack = std::numeric_limits<double>::infinity();  // min slack / (1 + |rhs|)
    std::optional<CheckOutcome> first;  // outcome on the lowest-index trial
    std::vector<FuzzRecord> records;
};

struct FuzzReport {
    FuzzConfig config;
    std::vector<FuzzBucket> buckets;  // ordered by (suite, check, degree)

    /// A proven statement failed after re-verification.
    bool has_violations() const;
    bool has_conjecture_anomalies() const;
    std::size_t confirmed_mismatches() const;
};

/// Runs every suite on `trials` configurations per degree. Trial i of degree
/// n uses a stream derived from (seed, n, i), and partial results merge in
/// trial order, so the report does not depend on `threads`.
FuzzReport run_fuzz(const FuzzConfig& cfg);

/// Single-configuration variant used for explicit inputs.
FuzzReport run_checks_on(const RootSet& zeros, const std::vector<Suite>& suites, double p,
                         TolProfile profile = TolProfile::kDefault);

}  // namespace critpoly
