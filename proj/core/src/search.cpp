#include "critpoly/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "critpoly/errors.hpp"
#include "critpoly/geometry.hpp"
#include "critpoly/inequalities.hpp"
#include "critpoly/random.hpp"

namespace critpoly {

std::string_view to_string(SearchStrategy s) noexcept {
    switch (s) {
        case SearchStrategy::kFree: return "free";
        case SearchStrategy::kRotationalCluster: return "rotational-cluster";
    }
    return "unknown";
}

void SearchConfig::validate() const {
    if (degree < 3) throw InputError("search: degree must be >= 3 (degree 2 forces gamma = 0)");
    if (degree > kMaxDegree) throw InputError("search: degree exceeds cap");
    if (restarts < 1) throw InputError("search: restarts must be >= 1");
    if (local_iters < 1) throw InputError("search: local_iters must be >= 1");
    if (!(step_min > 0.0) || !(step_min < step_init)) throw InputError("search: need 0 < step_min < step_init");
    rootfind.validate();
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Box-constrained coordinates: radii are clamped, angles wrap.
struct Coord {
    double lo, hi;
    bool wraps;
    double scale;  // step multiplier
};

class Parameterization {
public:
    Parameterization(SearchStrategy s, std::size_t n) : strategy_(s), n_(n) {
        if (s == SearchStrategy::kFree) {
            for (std::size_t k = 0; k < n; ++k) {
                coords_.push_back({0.0, 1.0, false, 1.0});
                coords_.push_back({0.0, kTwoPi, true, std::numbers::pi});
            }
        } else {
            coords_.push_back({-1.0, 1.0, false, 1.0});  // lone real zero
            coords_.push_back({0.0, 1.0, false, 1.0});   // circle radius
            coords_.push_back({0.0, kTwoPi, true, std::numbers::pi});
        }
    }

    std::size_t size() const { return coords_.size(); }
    const Coord& coord(std::size_t i) const { return coords_[i]; }

    double project(std::size_t i, double v) const {
        const Coord& c = coords_[i];
        if (c.wraps) {
            v = std::fmod(v, c.hi);
            return v < 0.0 ? v + c.hi : v;
        }
        return std::clamp(v, c.lo, c.hi);
    }

    // z^n - z: zero at the origin plus the (n-1)th roots of unity.
    std::vector<double> extremal_seed() const {
        if (strategy_ == SearchStrategy::kRotationalCluster) return {0.0, 1.0, 0.0};
        std::vector<double> x{0.0, 0.0};
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            x.push_back(1.0);
            x.push_back(kTwoPi * static_cast<double>(k) / static_cast<double>(n_ - 1));
        }
        return x;
    }

    std::vector<double> random(Rng& rng) const {
        std::vector<double> x;
        if (strategy_ == SearchStrategy::kRotationalCluster) {
            x = {rng.uniform(-1.0, 1.0), std::sqrt(rng.uniform()), rng.uniform(0.0, kTwoPi)};
        } else {
            for (std::size_t k = 0; k < n_; ++k) {
                x.push_back(std::sqrt(rng.uniform()));
                x.push_back(rng.uniform(0.0, kTwoPi));
            }
        }
        return x;
    }

    RootSet roots(const std::vector<double>& x) const {
        std::vector<Complex> z;
        z.reserve(n_);
        if (strategy_ == SearchStrategy::kRotationalCluster) {
            z.emplace_back(x[0], 0.0);
            for (std::size_t k = 0; k + 1 < n_; ++k) {
                z.push_back(std::polar(x[1], x[2] + kTwoPi * static_cast<double>(k) / static_cast<double>(n_ - 1)));
            }
        } else {
            for (std::size_t k = 0; k < n_; ++k) z.push_back(std::polar(x[2 * k], x[2 * k + 1]));
        }
        return RootSet(std::move(z));
    }

private:
    SearchStrategy strategy_;
    std::size_t n_;
    std::vector<Coord> coords_;
};

struct RestartOutcome {
    double best = -std::numeric_limits<double>::infinity();
    RootSet roots;
    long long evaluations = 0;
    long long failures = 0;
    std::vector<double> history;
};

std::string dump(const RootSet& r) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& z : r) os << " (" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

RestartOutcome run_restart(const SearchConfig& cfg, const Parameterization& param, int restart) {
    RestartOutcome out;
    const double ceiling = refined_upper(static_cast<double>(cfg.degree)) + 1e-6;

    auto score = [&](const std::vector<double>& x, RootSet& roots) {
        roots = param.roots(x);
        ++out.evaluations;
        try {
            const double g = gamma(roots, cfg.rootfind).gamma;
            if (g > ceiling) {
                throw SoundnessError("search: gamma " + std::to_string(g) + " exceeds sqrt((n-2)/(n-1)) at" + dump(roots),
                                     roots, g);
            }
            return g;
        } catch (const ConvergenceError&) {
            ++out.failures;
            return -std::numeric_limits<double>::infinity();
        }
    };

    std::vector<double> x;
    if (restart == 0) {
        x = param.extremal_seed();
    } else {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart), cfg.degree));
        x = param.random(rng);
    }
    RootSet roots;
    out.best = score(x, roots);
    out.roots = roots;
    out.history.push_back(out.best);

    double step = cfg.step_init;
    for (int sweep = 0; sweep < cfg.local_iters && step >= cfg.step_min; ++sweep) {
        bool improved = false;
        for (std::size_t i = 0; i < param.size(); ++i) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> cand = x;
                cand[i] = param.project(i, x[i] + sign * step * param.coord(i).scale);
                if (cand[i] == x[i]) continue;
                RootSet cand_roots;
                const double g = score(cand, cand_roots);
                if (g > out.best) {
                    x = std::move(cand);
                    out.best = g;
                    out.roots = std::move(cand_roots);
                    out.history.push_back(g);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return out;
}

}  // namespace

SearchResult maximize_gamma(const SearchConfig& cfg) {
    cfg.validate();
    const Parameterization param(cfg.strategy, cfg.degree);

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    unsigned workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.restarts));
    if (workers <= 1) {
        for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(cfg, param, r);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (int r = static_cast<int>(w); r < cfg.restarts; r += static_cast<int>(workers)) {
                            outcomes[r] = run_restart(cfg, param, r);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    SearchResult res;
    res.n = cfg.degree;
    res.lower_bound = lower_bound(static_cast<double>(cfg.degree));
    res.refined_upper = refined_upper(static_cast<double>(cfg.degree));
    res.restarts_run = cfg.restarts;
    res.best_gamma = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& o = outcomes[r];
        res.evaluations += o.evaluations;
        res.failed_evaluations += o.failures;
        for (double g : o.history) res.history.emplace_back(r, g);
        if (o.best > res.best_gamma) {  // strict: ties go to the lowest restart
            res.best_gamma = o.best;
            res.best_roots = o.roots;
            res.best_restart = r;
        }
    }
    return res;
}

SharpnessRow sharpness_row(const SearchResult& r) {
    const double n = static_cast<double>(r.n);
    return {r.n, r.best_gamma, r.lower_bound, r.refined_upper, (1.0 - r.best_gamma) * n / std::log(n), r.evaluations};
}

std::vector<SharpnessRow> sharpness_report(std::span<const std::size_t> n_values, const SearchConfig& tmpl) {
    std::vector<SharpnessRow> rows;
    for (std::size_t n : n_values) {
        SearchConfig cfg = tmpl;
        cfg.degree = n;
        rows.push_back(sharpness_row(maximize_gamma(cfg)));
    }
    return rows;
}

void write_sharpness_csv(std::ostream& os, std::span<const SharpnessRow> rows, bool header) {
    if (header) os << "n,best_gamma,lower,refined_upper,c_hat,evaluations\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g,%lld\n", r.n, r.best_gamma, r.lower,
                      r.refined_upper, r.c_hat, r.evaluations);
        os << buf;
    }
}

}  // namespace critpoly
