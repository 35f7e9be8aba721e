#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "args.hpp"
#include "critpoly/critpoly.hpp"
#include "json_writer.hpp"
#include "spec_io.hpp"

namespace critpoly::cli {

namespace {

struct Common {
    std::uint64_t seed = 0;
    std::string tol_profile = "default";
    std::string out;
    std::string format;
    bool timestamps = false;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--seed", c.seed, "Master seed for random streams")->capture_default_str();
    app->add_option("--tol-profile", c.tol_profile, "Tolerance profile")
        ->check(CLI::IsMember({"default", "strict"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "Output file");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_flag("--timestamps", c.timestamps, "Include a UTC timestamp in JSON reports");
}

TolProfile profile_of(const Common& c) { return c.tol_profile == "strict" ? TolProfile::kStrict : TolProfile::kDefault; }

RootFindConfig rootfind_of(const Common& c) { return Tolerances::for_profile(profile_of(c)).rootfind; }

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json make_report(const std::string& command, Json input, Json results, const Common& c) {
    Json r = Json::object();
    r["command"] = command;
    r["input"] = std::move(input);
    r["results"] = std::move(results);
    r["seed"] = c.seed;
    r["tool_version"] = kVersion;
    if (c.timestamps) r["timestamp"] = utc_now();
    return r;
}

using CsvWriter = std::function<void(std::ostream&)>;

// Writes the report in the requested format to --out, or to `out` when no
// file is given.
void emit(const Common& c, const std::string& default_format, const Json& report, const CsvWriter& csv,
          std::ostream& out) {
    const std::string format = c.format.empty() ? default_format : c.format;
    auto write = [&](std::ostream& os) {
        if (format == "csv") {
            csv(os);
        } else {
            write_json(os, report);
        }
    };
    if (c.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot open output file '" + c.out + "'");
    write(file);
}

Json outcome_json(const CheckOutcome& o) {
    Json j = Json::object();
    j["name"] = o.name;
    j["lhs"] = number(o.lhs);
    j["rhs"] = number(o.rhs);
    j["slack"] = number(o.slack);
    j["tol"] = number(o.tol);
    j["passed"] = o.passed;
    j["equality"] = o.equality;
    if (o.classification) j["classification"] = std::string(to_string(*o.classification));
    if (o.equality_expected) j["equality_expected"] = *o.equality_expected;
    return j;
}

// -- gamma --------------------------------------------------------------------

struct GammaArgs {
    std::string spec;
};

int cmd_gamma(const GammaArgs& a, const Common& c, std::ostream& out) {
    const PolynomialSpec spec = load_spec(a.spec);
    const RootSet roots = resolve_roots(spec, rootfind_of(c));
    const GammaReport g = gamma(roots, rootfind_of(c));
    const double n = static_cast<double>(roots.size());

    Json res = Json::object();
    res["degree"] = roots.size();
    res["roots"] = complex_list(roots.values());
    res["centroid"] = complex_json(g.centroid);
    res["critical_points"] = complex_list(g.critical_points.values());
    Json dist = Json::array();
    for (double d : g.distances) dist.push_back(number(d));
    res["distances"] = std::move(dist);
    res["gamma"] = number(g.gamma);
    res["argmin_index"] = g.argmin_index;
    const bool in_disk = roots.max_modulus() <= 1.0 + 1e-12;
    res["in_unit_disk"] = in_disk;
    if (in_disk) {
        Json b = Json::object();
        b["centroid_disk"] = number(1.0);
        b["refined_upper"] = number(refined_upper(n));
        b["pawlowski_upper"] = number(pawlowski_upper(n));
        b["lower_bound"] = number(lower_bound(n));
        res["bounds"] = std::move(b);
    }

    Json input = Json::object();
    input["spec"] = echo(spec);
    input["tol_profile"] = c.tol_profile;
    const Json report = make_report("gamma", std::move(input), std::move(res), c);
    emit(c, "json", report, [&](std::ostream& os) {
        os << "index,re,im,distance\n";
        char buf[128];
        for (std::size_t j = 0; j < g.distances.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", j, g.critical_points[j].real(),
                          g.critical_points[j].imag(), g.distances[j]);
            os << buf;
        }
    }, out);
    return kExitOk;
}

// -- variance -----------------------------------------------------------------

struct VarianceArgs {
    std::string spec;
    std::string p = "2";
};

int cmd_variance(const VarianceArgs& a, const Common& c, std::ostream& out) {
    const double p = parse_exponent(a.p);
    const PolynomialSpec spec = load_spec(a.spec);
    const RootSet roots = resolve_roots(spec, rootfind_of(c));
    const VarianceResult v = sigma_p(roots, p);

    Json res = Json::object();
    res["p"] = number(v.p);
    res["value"] = number(v.value);
    res["center"] = complex_json(v.center);
    res["solver"] = std::string(to_string(v.solver));
    res["iterations"] = v.iterations;

    Json input = Json::object();
    input["spec"] = echo(spec);
    input["p"] = number(p);
    const Json report = make_report("variance", std::move(input), std::move(res), c);
    emit(c, "json", report, [&](std::ostream& os) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s,%d\n", v.p, v.value, v.center.real(),
                      v.center.imag(), std::string(to_string(v.solver)).c_str(), v.iterations);
        os << "p,value,center_re,center_im,solver,iterations\n" << buf;
    }, out);
    return kExitOk;
}

// -- check --------------------------------------------------------------------

struct CheckArgs {
    std::string suite = "all";
    std::size_t trials = 1000;
    std::string degrees = "2..12";
    std::string p = "2";
    std::string generator = "disk";
    double radius = 1.0;
    std::string spec;
    bool strict_conjectures = false;
    unsigned threads = 0;
};

std::vector<Suite> suites_of(const std::string& name) {
    const std::vector<Suite> all{Suite::kSchoenberg, Suite::kCentroidDisk, Suite::kVarianceBound,
                                 Suite::kRefinedRadius, Suite::kPawlowski,  Suite::kBorcea};
    if (name == "all") return all;
    for (Suite s : all) {
        if (to_string(s) == name) return {s};
    }
    throw InputError("unknown suite '" + name + "'");
}

Generator generator_of(const std::string& name) {
    for (Generator g : {Generator::kDisk, Generator::kCollinear, Generator::kAllEqual}) {
        if (to_string(g) == name) return g;
    }
    throw InputError("unknown generator '" + name + "'");
}

Json bucket_json(const FuzzBucket& b) {
    Json j = Json::object();
    j["suite"] = std::string(to_string(b.suite));
    j["check"] = b.check;
    j["degree"] = b.degree;
    j["evaluated"] = b.evaluated;
    j["passed"] = b.passed;
    j["failed"] = b.failed;
    j["equalities"] = b.equalities;
    j["expected_equalities"] = b.expected_equalities;
    j["mismatches"] = b.mismatches;
    j["confirmed_mismatches"] = b.confirmed_mismatches;
    j["conjecture_anomalies"] = b.conjecture_anomalies;
    j["solver_failures"] = b.solver_failures;
    j["min_relative_slack"] = number(b.min_relative_slack);
    j["first"] = b.first ? outcome_json(*b.first) : Json(nullptr);
    Json recs = Json::array();
    for (const auto& r : b.records) {
        Json rj = Json::object();
        rj["trial"] = r.trial;
        rj["zeros"] = complex_list(r.zeros.values());
        rj["outcome"] = outcome_json(r.outcome);
        rj["confirmed"] = r.confirmed;
        recs.push_back(std::move(rj));
    }
    j["records"] = std::move(recs);
    return j;
}

int cmd_check(const CheckArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    const std::vector<Suite> suites = suites_of(a.suite);
    const double p = parse_exponent(a.p);
    Json input = Json::object();
    input["suite"] = a.suite;
    input["p"] = number(p);
    input["tol_profile"] = c.tol_profile;
    input["strict_conjectures"] = a.strict_conjectures;

    FuzzReport rep;
    if (!a.spec.empty()) {
        const PolynomialSpec spec = load_spec(a.spec);
        input["spec"] = echo(spec);
        rep = run_checks_on(resolve_roots(spec, rootfind_of(c)), suites, p, profile_of(c));
    } else {
        FuzzConfig cfg;
        cfg.suites = suites;
        for (long long n : parse_int_list(a.degrees)) {
            if (n < 2 || n > static_cast<long long>(kCliMaxDegree)) {
                throw InputError("degrees must lie in [2, " + std::to_string(kCliMaxDegree) + "]");
            }
            cfg.degrees.push_back(static_cast<std::size_t>(n));
        }
        if (a.trials < 1) throw InputError("--trials must be >= 1");
        cfg.trials = a.trials;
        cfg.seed = c.seed;
        cfg.generator = generator_of(a.generator);
        cfg.radius = a.radius;
        cfg.p = p;
        cfg.profile = profile_of(c);
        cfg.threads = a.threads;
        Json degs = Json::array();
        for (auto n : cfg.degrees) degs.push_back(n);
        input["trials"] = cfg.trials;
        input["degrees"] = std::move(degs);
        input["generator"] = a.generator;
        input["radius"] = number(a.radius);
        rep = run_fuzz(cfg);
    }

    const bool violations = rep.has_violations();
    const bool anomalies = rep.has_conjecture_anomalies();
    Json summary = Json::object();
    std::size_t evaluated = 0, failed = 0, solver_failures = 0;
    for (const auto& b : rep.buckets) {
        evaluated += b.evaluated;
        failed += b.failed;
        solver_failures += b.solver_failures;
    }
    summary["evaluated"] = evaluated;
    summary["failed"] = failed;
    summary["solver_failures"] = solver_failures;
    summary["proven_violations"] = violations;
    summary["conjecture_anomalies"] = anomalies;
    summary["confirmed_equality_mismatches"] = rep.confirmed_mismatches();
    Json buckets = Json::array();
    for (const auto& b : rep.buckets) buckets.push_back(bucket_json(b));
    Json res = Json::object();
    res["summary"] = std::move(summary);
    res["buckets"] = std::move(buckets);

    const Json report = make_report("check", std::move(input), std::move(res), c);
    emit(c, "json", report, [&](std::ostream& os) {
        os << "suite,check,degree,evaluated,passed,failed,equalities,expected_equalities,mismatches,"
              "confirmed_mismatches,conjecture_anomalies,solver_failures,min_relative_slack\n";
        char buf[256];
        for (const auto& b : rep.buckets) {
            std::snprintf(buf, sizeof buf, "%s,%s,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%.17g\n",
                          std::string(to_string(b.suite)).c_str(), b.check.c_str(), b.degree, b.evaluated, b.passed,
                          b.failed, b.equalities, b.expected_equalities, b.mismatches, b.confirmed_mismatches,
                          b.conjecture_anomalies, b.solver_failures, b.min_relative_slack);
            os << buf;
        }
    }, out);

    if (violations) {
        err << "critpoly check: proven inequality violated after re-verification\n";
        return kExitViolation;
    }
    if (anomalies && a.strict_conjectures) {
        err << "critpoly check: conjecture anomaly survived re-verification\n";
        return kExitViolation;
    }
    return kExitOk;
}

// -- search -------------------------------------------------------------------

struct SearchArgs {
    std::string n;
    int restarts = 64;
    int local_iters = 2000;
    double step_init = 0.1;
    double step_min = 1e-7;
    std::string strategy = "free";
    unsigned threads = 0;
};

Json search_json(const SearchResult& r) {
    const SharpnessRow row = sharpness_row(r);
    Json j = Json::object();
    j["n"] = r.n;
    j["best_gamma"] = number(r.best_gamma);
    j["best_roots"] = complex_list(r.best_roots.values());
    j["best_restart"] = r.best_restart;
    j["lower_bound"] = number(r.lower_bound);
    j["refined_upper"] = number(r.refined_upper);
    j["c_hat"] = number(row.c_hat);
    j["restarts_run"] = r.restarts_run;
    j["evaluations"] = r.evaluations;
    j["failed_evaluations"] = r.failed_evaluations;
    Json h = Json::array();
    for (const auto& [restart, g] : r.history) h.push_back(Json::array({restart, number(g)}));
    j["history"] = std::move(h);
    return j;
}

int cmd_search(const SearchArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    SearchConfig tmpl;
    tmpl.restarts = a.restarts;
    tmpl.local_iters = a.local_iters;
    tmpl.seed = c.seed;
    tmpl.step_init = a.step_init;
    tmpl.step_min = a.step_min;
    tmpl.strategy = a.strategy == "rotational-cluster" ? SearchStrategy::kRotationalCluster : SearchStrategy::kFree;
    tmpl.rootfind = rootfind_of(c);
    tmpl.threads = a.threads;

    std::vector<std::size_t> degrees;
    for (long long n : parse_int_list(a.n)) {
        if (n < 3 || n > static_cast<long long>(kCliMaxDegree)) {
            throw InputError("--n values must lie in [3, " + std::to_string(kCliMaxDegree) + "]");
        }
        degrees.push_back(static_cast<std::size_t>(n));
    }

    std::vector<SearchResult> runs;
    std::vector<SharpnessRow> rows;
    for (std::size_t n : degrees) {
        SearchConfig cfg = tmpl;
        cfg.degree = n;
        try {
            runs.push_back(maximize_gamma(cfg));
        } catch (const SoundnessError& e) {
            err << "critpoly search: " << e.what() << '\n';
            return kExitViolation;
        }
        rows.push_back(sharpness_row(runs.back()));
    }

    Json input = Json::object();
    Json ns = Json::array();
    for (auto n : degrees) ns.push_back(n);
    input["n"] = std::move(ns);
    input["restarts"] = a.restarts;
    input["local_iters"] = a.local_iters;
    input["step_init"] = number(a.step_init);
    input["step_min"] = number(a.step_min);
    input["strategy"] = a.strategy;
    input["tol_profile"] = c.tol_profile;
    Json res = Json::object();
    Json rj = Json::array();
    for (const auto& r : runs) rj.push_back(search_json(r));
    res["runs"] = std::move(rj);
    const Json report = make_report("search", std::move(input), std::move(res), c);

    const std::string format = c.format.empty() ? "json" : c.format;
    if (format == "csv") {
        write_sharpness_csv(out, rows);
    } else {
        write_json(out, report);
    }
    if (!c.out.empty()) {
        // Appends, so several invocations can build one sharpness table.
        const bool fresh = !std::filesystem::exists(c.out) || std::filesystem::file_size(c.out) == 0;
        std::ofstream file(c.out, std::ios::binary | std::ios::app);
        if (!file) throw InputError("cannot open output file '" + c.out + "'");
        write_sharpness_csv(file, rows, fresh);
    }
    return kExitOk;
}

// -- bounds-table -------------------------------------------------------------

struct BoundsArgs {
    std::string n_list;
    std::string n_range;
};

int cmd_bounds(const BoundsArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    if (a.n_list.empty() && a.n_range.empty()) throw InputError("bounds-table needs --n-list or --n-range");
    std::vector<long long> ns;
    for (const std::string* s : {&a.n_list, &a.n_range}) {
        if (s->empty()) continue;
        const auto part = parse_int_list(*s);
        ns.insert(ns.end(), part.begin(), part.end());
    }
    const std::vector<BoundsRow> rows = bounds_table(ns);

    bool ordered = true;
    Json rj = Json::array();
    for (const auto& r : rows) {
        const double n = static_cast<double>(r.n);
        const double t = std::log(n) / n;
        Json j = Json::object();
        j["n"] = r.n;
        j["lower"] = number(r.lower);
        j["pawlowski_upper"] = number(r.pawlowski_upper);
        j["refined_upper"] = number(r.refined_upper);
        j["lower_asymptote"] = number(r.lower_asymptote);
        j["pawlowski_asymptote"] = number(r.pawlowski_asymptote);
        // Ratios of the exact gaps to their leading asymptotic terms.
        j["lower_gap_ratio"] = number(lower_gap(n) / t);
        j["pawlowski_gap_ratio"] = number(pawlowski_gap(n) / (0.5 * t * t));
        if (r.n >= 3) {
            const bool ok = r.refined_upper < r.pawlowski_upper;
            ordered = ordered && ok;
            j["refined_below_pawlowski"] = ok;
        }
        rj.push_back(std::move(j));
    }

    Json input = Json::object();
    if (!a.n_list.empty()) input["n_list"] = a.n_list;
    if (!a.n_range.empty()) input["n_range"] = a.n_range;
    Json res = Json::object();
    res["rows"] = std::move(rj);
    res["refined_below_pawlowski"] = ordered;
    const Json report = make_report("bounds-table", std::move(input), std::move(res), c);
    emit(c, "csv", report, [&](std::ostream& os) { write_bounds_csv(os, rows); }, out);
    if (!ordered) {
        err << "critpoly bounds-table: refined bound not below the Pawlowski bound\n";
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical points of complex polynomials: radii, variances and inequality checks", "critpoly"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;
    std::function<int()> action;

    GammaArgs ga;
    auto* g = app.add_subcommand("gamma", "Distance from the centroid of the zeros to the nearest critical point");
    g->add_option("spec,--spec", ga.spec, "PolynomialSpec JSON file ('-' for stdin)")->required();
    add_common(g, common);
    g->callback([&] { action = [&] { return cmd_gamma(ga, common, out); }; });

    VarianceArgs va;
    auto* v = app.add_subcommand("variance", "p-variance of the zeros");
    v->add_option("spec,--spec", va.spec, "PolynomialSpec JSON file ('-' for stdin)")->required();
    v->add_option("--p", va.p, "Exponent p >= 1 or 'inf'")->capture_default_str();
    add_common(v, common);
    v->callback([&] { action = [&] { return cmd_variance(va, common, out); }; });

    CheckArgs ca;
    auto* ch = app.add_subcommand("check", "Fuzz the inequality checkers");
    ch->add_option("--suite", ca.suite, "Suite to run")
        ->check(CLI::IsMember({"schoenberg", "thm11", "thm-mt", "thm-mt1", "pawlowski", "borcea", "all"}))
        ->capture_default_str();
    ch->add_option("--trials", ca.trials, "Configurations per degree")->capture_default_str();
    ch->add_option("--degrees", ca.degrees, "Degrees, e.g. 2..8 or 3,5,7")->capture_default_str();
    ch->add_option("--p", ca.p, "Exponent for the Borcea suite (number >= 1 or 'inf')")->capture_default_str();
    ch->add_option("--generator", ca.generator, "Configuration generator")
        ->check(CLI::IsMember({"disk", "collinear", "all-equal"}))
        ->capture_default_str();
    ch->add_option("--radius", ca.radius, "Sampling disk radius")->check(CLI::PositiveNumber)->capture_default_str();
    ch->add_option("--spec", ca.spec, "Check a single PolynomialSpec instead of fuzzing");
    ch->add_flag("--strict-conjectures", ca.strict_conjectures, "Exit 1 on surviving conjecture anomalies");
    ch->add_option("--threads", ca.threads, "Worker threads (0 = all cores); output does not depend on it");
    add_common(ch, common);
    ch->callback([&] { action = [&] { return cmd_check(ca, common, out, err); }; });

    SearchArgs sa;
    auto* s = app.add_subcommand("search", "Multi-start search for the largest gamma at degree n");
    s->add_option("--n", sa.n, "Degree, or a list such as 3..10")->required();
    s->add_option("--restarts", sa.restarts, "Number of restarts")->capture_default_str();
    s->add_option("--local-iters", sa.local_iters, "Maximum coordinate sweeps per restart")->capture_default_str();
    s->add_option("--step-init", sa.step_init, "Initial step")->capture_default_str();
    s->add_option("--step-min", sa.step_min, "Smallest step")->capture_default_str();
    s->add_option("--strategy", sa.strategy, "Search space")
        ->check(CLI::IsMember({"free", "rotational-cluster"}))
        ->capture_default_str();
    s->add_option("--threads", sa.threads, "Worker threads (0 = all cores); output does not depend on it");
    add_common(s, common);
    s->callback([&] { action = [&] { return cmd_search(sa, common, out, err); }; });

    BoundsArgs ba;
    auto* b = app.add_subcommand("bounds-table", "Degree-only bounds and their asymptotics");
    b->add_option("--n-list", ba.n_list, "Comma-separated degrees");
    b->add_option("--n-range", ba.n_range, "Degree range lo..hi");
    add_common(b, common);
    b->callback([&] { action = [&] { return cmd_bounds(ba, common, out, err); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const InputError& e) {
        err << "critpoly: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "critpoly: numerical failure: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "critpoly: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace critpoly::cli
