#include "critpoly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "critpoly/errors.hpp"

namespace critpoly {

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!is_finite(values[i])) {
            throw InputError(std::string(what) + ": non-finite value at index " +
                             std::to_string(i));
        }
    }
}

}  // namespace

RootSet::RootSet(std::vector<Complex> roots) : roots_(std::move(roots)) {
    require_finite(roots_, "RootSet");
}

RootSet::RootSet(std::initializer_list<Complex> roots) : RootSet(std::vector<Complex>(roots)) {}

double RootSet::max_modulus() const noexcept {
    double m = 0.0;
    for (const auto& z : roots_) m = std::max(m, std::abs(z));
    return m;
}

RootSet RootSet::transformed(Complex scale, Complex shift) const {
    std::vector<Complex> out;
    out.reserve(roots_.size());
    for (const auto& z : roots_) out.push_back(scale * z + shift);
    return RootSet(std::move(out));
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("WeightVector: empty");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("WeightVector: weights must be finite and >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InputError("WeightVector: weights must sum to 1");
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n == 0) throw InputError("WeightVector: empty");
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw InputError("Polynomial: degree must be >= 1");
    if (coeffs_.size() - 1 > kMaxDegree) {
        throw InputError("Polynomial: degree exceeds cap of " + std::to_string(kMaxDegree));
    }
    require_finite(coeffs_, "Polynomial");
    if (coeffs_.back() != Complex(1.0, 0.0)) throw InputError("Polynomial: leading coefficient must be exactly 1");
}

Polynomial::Polynomial(std::vector<Complex> coeffs, RootSet origin)
    : coeffs_(std::move(coeffs)), origin_(std::move(origin)) {}

Polynomial from_roots(const RootSet& roots) {
    const std::size_t n = roots.size();
    if (n < 1) throw InputError("from_roots: need at least one root");
    if (n > kMaxDegree) throw InputError("from_roots: degree exceeds cap of " + std::to_string(kMaxDegree));

    // coeffs of prod_{j<k} (z - r_j), grown one linear factor at a time.
    std::vector<Complex> c(n + 1, Complex{});
    c[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex r = roots[k];
        for (std::size_t i = k + 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c), roots);
}

std::vector<Complex> derivative(std::span<const Complex> coeffs) {
    if (coeffs.size() < 2) throw InputError("derivative: degree must be >= 1");
    std::vector<Complex> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

std::vector<Complex> derivative(const Polynomial& f) { return derivative(f.coeffs()); }

Complex evaluate(std::span<const Complex> coeffs, Complex z) noexcept {
    Complex acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double evaluation_scale(std::span<const Complex> coeffs, Complex z) noexcept {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

Complex centroid(const RootSet& roots) {
    if (roots.empty()) throw InputError("centroid: empty root set");
    const Complex sum = std::accumulate(roots.begin(), roots.end(), Complex{});
    return sum / static_cast<double>(roots.size());
}

Complex weighted_centroid(const RootSet& roots, const WeightVector& weights) {
    if (weights.size() != roots.size()) throw InputError("weighted_centroid: weight/root length mismatch");
    Complex acc{};
    for (std::size_t k = 0; k < roots.size(); ++k) acc += weights[k] * roots[k];
    return acc;
}

}  // namespace critpoly
