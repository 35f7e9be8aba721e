#include "critpoly/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>

#include "critpoly/errors.hpp"

namespace critpoly {

std::string_view to_string(Generator g) noexcept {
    switch (g) {
        case Generator::kDisk: return "disk";
        case Generator::kCollinear: return "collinear";
        case Generator::kAllEqual: return "all-equal";
    }
    return "unknown";
}

std::string_view to_string(Suite s) noexcept {
    switch (s) {
        case Suite::kSchoenberg: return "schoenberg";
        case Suite::kCentroidDisk: return "thm11";
        case Suite::kVarianceBound: return "thm-mt";
        case Suite::kRefinedRadius: return "thm-mt1";
        case Suite::kPawlowski: return "pawlowski";
        case Suite::kBorcea: return "borcea";
    }
    return "unknown";
}

bool is_proven(Suite s) noexcept { return s != Suite::kBorcea; }

bool requires_unit_disk(Suite s) noexcept {
    return s == Suite::kCentroidDisk || s == Suite::kRefinedRadius || s == Suite::kPawlowski;
}

RootSet sample_configuration(Generator g, std::size_t n, double radius, Rng& rng) {
    if (n < 1) throw InputError("sample_configuration: n must be >= 1");
    if (!(radius > 0.0)) throw InputError("sample_configuration: radius must be > 0");
    std::vector<Complex> z;
    z.reserve(n);
    switch (g) {
        case Generator::kDisk:
            for (std::size_t k = 0; k < n; ++k) z.push_back(rng.in_disk(radius));
            break;
        case Generator::kCollinear: {
            const Complex q = rng.in_disk(radius);
            const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            // Chord of the disk along q + t u: |q + t u|^2 = radius^2.
            const double b = std::real(std::conj(u) * q);
            const double c = std::norm(q) - radius * radius;
            const double h = std::sqrt(std::max(0.0, b * b - c));
            for (std::size_t k = 0; k < n; ++k) z.push_back(q + rng.uniform(-b - h, -b + h) * u);
            break;
        }
        case Generator::kAllEqual:
            z.assign(n, rng.in_disk(radius));
            break;
    }
    return RootSet(std::move(z));
}

WeightVector sample_weights(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = rng.exponential();
        sum += x;
    }
    if (sum == 0.0) return WeightVector::uniform(n);
    for (auto& x : w) x /= sum;
    // Put the rounding residue on the largest weight so the sum is 1 to ~1 ulp.
    double total = 0.0;
    for (double x : w) total += x;
    *std::max_element(w.begin(), w.end()) += 1.0 - total;
    return WeightVector(std::move(w));
}

bool FuzzReport::has_violations() const {
    return std::any_of(buckets.begin(), buckets.end(), [](const FuzzBucket& b) {
        return is_proven(b.suite) && (b.failed > 0 || b.solver_failures > 0);
    });
}

bool FuzzReport::has_conjecture_anomalies() const {
    return std::any_of(buckets.begin(), buckets.end(),
                       [](const FuzzBucket& b) { return b.conjecture_anomalies > 0; });
}

std::size_t FuzzReport::confirmed_mismatches() const {
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.confirmed_mismatches;
    return total;
}

namespace {

enum class Check { kSchoenberg, kCentroidDisk, kAveraging, kVariance, kRefined, kPawlowski, kBorcea, kWeighted };

std::vector<Check> checks_of(Suite s) {
    switch (s) {
        case Suite::kSchoenberg: return {Check::kSchoenberg};
        case Suite::kCentroidDisk: return {Check::kCentroidDisk, Check::kAveraging};
        case Suite::kVarianceBound: return {Check::kVariance};
        case Suite::kRefinedRadius: return {Check::kRefined};
        case Suite::kPawlowski: return {Check::kPawlowski};
        case Suite::kBorcea: return {Check::kBorcea, Check::kWeighted};
    }
    return {};
}

struct Slot {
    Suite suite;
    Check check;
};

CheckOutcome evaluate(Check c, const ZeroData& d, const Tolerances& tol, double p, const WeightVector& w) {
    switch (c) {
        case Check::kSchoenberg: return check_schoenberg(d, tol);
        case Check::kCentroidDisk: return check_centroid_disk(d, tol);
        case Check::kAveraging: return check_averaging_identity(d, tol);
        case Check::kVariance: return check_variance_bound(d, tol);
        case Check::kRefined: return check_refined_radius(d, tol);
        case Check::kPawlowski: return check_pawlowski_upper(d, tol);
        case Check::kBorcea: return check_borcea(d, p, tol);
        case Check::kWeighted: return check_generalized_borcea(d, w, p, tol);
    }
    throw InputError("unknown check");
}

std::string check_name(Check c) {
    switch (c) {
        case Check::kSchoenberg: return "schoenberg";
        case Check::kCentroidDisk: return "centroid_disk";
        case Check::kAveraging: return "averaging_identity";
        case Check::kVariance: return "variance_bound";
        case Check::kRefined: return "refined_radius";
        case Check::kPawlowski: return "pawlowski_upper";
        case Check::kBorcea: return "borcea";
        case Check::kWeighted: return "generalized_borcea";
    }
    return "unknown";
}

void keep(FuzzBucket& b, std::size_t cap, FuzzRecord rec) {
    if (b.records.size() < cap) b.records.push_back(std::move(rec));
}

// Evaluates every slot on one configuration, accumulating into buckets[slot].
class TrialRunner {
public:
    TrialRunner(const std::vector<Slot>& slots, double p, TolProfile profile, std::size_t cap)
        : slots_(slots), p_(p), tol_(Tolerances::for_profile(profile)),
          strict_(Tolerances::for_profile(TolProfile::kStrict)), cap_(cap) {
        // Re-checks of proven statements keep the nominal tolerance and
        // only tighten the root finder.
        retol_ = tol_;
        retol_.rootfind = strict_.rootfind;
    }

    void run(std::size_t trial, const RootSet& zeros, const WeightVector& weights, std::vector<FuzzBucket>& out) {
        std::optional<ZeroData> data;
        std::optional<ZeroData> strict_data;
        auto strict = [&]() -> const ZeroData& {
            if (!strict_data) strict_data = ZeroData::analyze(zeros, strict_.rootfind);
            return *strict_data;
        };
        try {
            data = ZeroData::analyze(zeros, tol_.rootfind);
        } catch (const ConvergenceError&) {
            try {
                data = strict();
            } catch (const ConvergenceError&) {
                for (std::size_t s = 0; s < slots_.size(); ++s) ++out[s].solver_failures;
                return;
            }
        }

        for (std::size_t s = 0; s < slots_.size(); ++s) {
            FuzzBucket& b = out[s];
            const Slot slot = slots_[s];
            try {
                CheckOutcome o = evaluate(slot.check, *data, tol_, p_, weights);
                ++b.evaluated;
                if (!o.passed) {
                    CheckOutcome again = evaluate(slot.check, strict(), retol_, p_, weights);
                    if (again.passed) {
                        o = again;
                    } else if (is_proven(slot.suite)) {
                        ++b.failed;
                        keep(b, cap_, {trial, zeros, again, true});
                    } else {
                        ++b.conjecture_anomalies;
                        keep(b, cap_, {trial, zeros, again, true});
                    }
                }
                if (!b.first) b.first = o;
                if (o.passed) ++b.passed;
                if (o.equality) ++b.equalities;
                if (o.equality_expected.value_or(false)) ++b.expected_equalities;
                b.min_relative_slack = std::min(b.min_relative_slack, o.slack / (1.0 + std::abs(o.rhs)));
                if (o.equality_mismatch()) {
                    ++b.mismatches;
                    CheckOutcome again = evaluate(slot.check, strict(), strict_, p_, weights);
                    const bool confirmed = again.equality_mismatch();
                    if (confirmed) ++b.confirmed_mismatches;
                    keep(b, cap_, {trial, zeros, confirmed ? again : o, confirmed});
                }
            } catch (const ConvergenceError&) {
                ++b.solver_failures;
            }
        }
    }

private:
    const std::vector<Slot>& slots_;
    double p_;
    Tolerances tol_;
    Tolerances strict_;
    Tolerances retol_;
    std::size_t cap_;
};

void merge_into(FuzzBucket& dst, const FuzzBucket& src, std::size_t cap) {
    dst.evaluated += src.evaluated;
    dst.passed += src.passed;
    dst.failed += src.failed;
    dst.equalities += src.equalities;
    dst.expected_equalities += src.expected_equalities;
    dst.mismatches += src.mismatches;
    dst.confirmed_mismatches += src.confirmed_mismatches;
    dst.conjecture_anomalies += src.conjecture_anomalies;
    dst.solver_failures += src.solver_failures;
    dst.min_relative_slack = std::min(dst.min_relative_slack, src.min_relative_slack);
    if (!dst.first) dst.first = src.first;
    for (const auto& r : src.records) {
        if (dst.records.size() >= cap) break;
        dst.records.push_back(r);
    }
}

std::vector<Slot> expand_slots(const std::vector<Suite>& suites) {
    std::vector<Slot> slots;
    for (Suite s : suites) {
        for (Check c : checks_of(s)) slots.push_back({s, c});
    }
    return slots;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
    if (cfg.suites.empty()) throw InputError("run_fuzz: no suites selected");
    if (cfg.degrees.empty()) throw InputError("run_fuzz: no degrees selected");
    if (!(cfg.p >= 1.0)) throw InputError("run_fuzz: p must be >= 1");
    for (std::size_t n : cfg.degrees) {
        if (n < 2 || n > kMaxDegree) throw InputError("run_fuzz: degrees must lie in [2, " + std::to_string(kMaxDegree) + "]");
    }
    for (Suite s : cfg.suites) {
        if (requires_unit_disk(s) && cfg.radius > 1.0) {
            throw InputError("run_fuzz: suite " + std::string(to_string(s)) + " needs radius <= 1");
        }
    }

    const std::vector<Slot> slots = expand_slots(cfg.suites);
    const bool want_weights = std::any_of(slots.begin(), slots.end(), [](const Slot& s) { return s.check == Check::kWeighted; });
    const std::size_t per_degree = cfg.trials;
    const std::size_t total = per_degree * cfg.degrees.size();

    unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

    // partial[w][degree_index][slot]
    std::vector<std::vector<std::vector<FuzzBucket>>> partial(
        workers, std::vector<std::vector<FuzzBucket>>(cfg.degrees.size(), std::vector<FuzzBucket>(slots.size())));

    auto work = [&](unsigned w) {
        const std::size_t begin = total * w / workers;
        const std::size_t end = total * (w + 1) / workers;
        TrialRunner runner(slots, cfg.p, cfg.profile, cfg.max_records);
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::size_t di = idx / per_degree;
            const std::size_t trial = idx % per_degree;
            const std::size_t n = cfg.degrees[di];
            Rng rng(derive_seed(cfg.seed, trial, n));
            RootSet zeros = sample_configuration(cfg.generator, n, cfg.radius, rng);
            const WeightVector weights = want_weights ? sample_weights(n, rng) : WeightVector::uniform(n);
            runner.run(trial, zeros, weights, partial[w][di]);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    FuzzReport report;
    report.config = cfg;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        for (std::size_t di = 0; di < cfg.degrees.size(); ++di) {
            FuzzBucket b;
            b.suite = slots[s].suite;
            b.check = check_name(slots[s].check);
            b.degree = cfg.degrees[di];
            for (unsigned w = 0; w < workers; ++w) merge_into(b, partial[w][di][s], cfg.max_records);
            report.buckets.push_back(std::move(b));
        }
    }
    return report;
}

FuzzReport run_checks_on(const RootSet& zeros, const std::vector<Suite>& suites, double p, TolProfile profile) {
    if (zeros.size() < 2) throw InputError("run_checks_on: need at least two zeros");
    if (!(p >= 1.0)) throw InputError("run_checks_on: p must be >= 1");
    for (Suite s : suites) {
        if (requires_unit_disk(s)) require_unit_disk(zeros, "run_checks_on");
    }
    const std::vector<Slot> slots = expand_slots(suites);
    std::vector<FuzzBucket> buckets(slots.size());
    TrialRunner runner(slots, p, profile, 32);
    runner.run(0, zeros, WeightVector::uniform(zeros.size()), buckets);

    FuzzReport report;
    report.config.suites = suites;
    report.config.degrees = {zeros.size()};
    report.config.trials = 1;
    report.config.p = p;
    report.config.profile = profile;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        buckets[s].suite = slots[s].suite;
        buckets[s].check = check_name(slots[s].check);
        buckets[s].degree = zeros.size();
        report.buckets.push_back(std::move(buckets[s]));
    }
    return report;
}

}  // namespace critpoly
