#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critpoly/poly.hpp"
#include "critpoly/rootfind.hpp"

namespace critpoly {

/// Search space for the extremal-radius search.
enum class SearchStrategy {
    kFree,              ///< all n zeros move independently (polar coordinates)
    kRotationalCluster, ///< one zero on the real axis plus n - 1 zeros equally spaced on a circle
};

std::string_view to_string(SearchStrategy s) noexcept;

struct SearchConfig {
    std::size_t degree = 3;
    int restarts = 64;
    /// Maximum number of coordinate sweeps per restart.
    int local_iters = 2000;
    std::uint64_t seed = 0;
    double step_init = 0.1;
    double step_min = 1e-7;
    SearchStrategy strategy = SearchStrategy::kFree;
    RootFindConfig rootfind{};
    /// Worker threads for restarts; 0 picks the hardware concurrency.
    unsigned threads = 1;

    void validate() const;
};

struct SearchResult {
    std::size_t n = 0;
    double best_gamma = 0.0;
    RootSet best_roots;
    int best_restart = 0;
    double lower_bound = 0.0;
    double refined_upper = 0.0;
    int restarts_run = 0;
    long long evaluations = 0;
    long long failed_evaluations = 0;
    /// (restart, gamma) at the start of each restart and at every improvement.
    std::vector<std::pair<int, double>> history;
};

/// Thrown when a feasible configuration beats the proven upper bound
/// sqrt((n-2)/(n-1)) by more than 1e-6. That can only be a numerical bug.
class SoundnessError : public std::runtime_error {
public:
    SoundnessError(const std::string& what, RootSet roots, double gamma)
        : std::runtime_error(what), roots_(std::move(roots)), gamma_(gamma) {}
    const RootSet& roots() const noexcept { return roots_; }
    double gamma() const noexcept { return gamma_; }

private:
    RootSet roots_;
    double gamma_;
};

/// Multi-start derivative-free maximization of gamma over degree-n
/// configurations in the closed unit disk. Restart 0 always starts from the
/// zeros of z^n - z. Coordinate moves with step halving; strict improvements
/// only. Results are independent of `threads`.
SearchResult maximize_gamma(const SearchConfig& cfg);

struct SharpnessRow {
    std::size_t n = 0;
    double best_gamma = 0.0;
    double lower = 0.0;
    double refined_upper = 0.0;
    /// (1 - best_gamma) * n / ln(n): the constant c in 1 - c ln(n)/n.
    double c_hat = 0.0;
    long long evaluations = 0;
};

/// One maximize_gamma run per n, all other settings from `tmpl`.
std::vector<SharpnessRow> sharpness_report(std::span<const std::size_t> n_values, const SearchConfig& tmpl);

SharpnessRow sharpness_row(const SearchResult& r);

/// CSV header n,best_gamma,lower,refined_upper,c_hat,evaluations; 17 significant digits.
void write_sharpness_csv(std::ostream& os, std::span<const SharpnessRow> rows, bool header = true);

}  // namespace critpoly
