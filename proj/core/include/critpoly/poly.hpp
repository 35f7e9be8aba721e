#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace critpoly {

using Complex = std::complex<double>;

/// Hard cap on polynomial degree accepted by the library.
inline constexpr std::size_t kMaxDegree = 128;

/// Multiset of complex points. Order is storage only; multiplicity is
/// represented by repetition. Every stored value is finite.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::vector<Complex> roots);
    RootSet(std::initializer_list<Complex> roots);

    std::size_t size() const noexcept { return roots_.size(); }
    std::size_t degree() const noexcept { return roots_.size(); }
    bool empty() const noexcept { return roots_.empty(); }

    const Complex& operator[](std::size_t i) const { return roots_[i]; }
    std::span<const Complex> values() const noexcept { return roots_; }
    auto begin() const noexcept { return roots_.begin(); }
    auto end() const noexcept { return roots_.end(); }

    /// Largest modulus over all points (0 for an empty set).
    double max_modulus() const noexcept;

    /// Image under z -> scale * z + shift.
    RootSet transformed(Complex scale, Complex shift) const;

private:
    std::vector<Complex> roots_;
};

/// Non-negative weights summing to one (within 1e-12).
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(std::size_t n);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::span<const double> values() const noexcept { return weights_; }

private:
    std::vector<double> weights_;
};

/// Monic complex polynomial stored as ascending coefficients, coeffs[n] == 1.
class Polynomial {
public:
    /// Validates monic normalization and finiteness.
    explicit Polynomial(std::vector<Complex> coeffs);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

    /// Root set this polynomial was expanded from, if any.
    const std::optional<RootSet>& origin() const noexcept { return origin_; }

private:
    friend Polynomial from_roots(const RootSet& roots);
    Polynomial(std::vector<Complex> coeffs, RootSet origin);

    std::vector<Complex> coeffs_;
    std::optional<RootSet> origin_;
};

/// Expands prod (z - r_k) by incremental multiplication with linear factors.
Polynomial from_roots(const RootSet& roots);

/// Coefficients [k * a_k for k = 1..n]; leading coefficient n, not renormalized.
std::vector<Complex> derivative(const Polynomial& f);
std::vector<Complex> derivative(std::span<const Complex> coeffs);

/// Horner evaluation of an ascending coefficient vector.
Complex evaluate(std::span<const Complex> coeffs, Complex z) noexcept;
inline Complex evaluate(const Polynomial& f, Complex z) noexcept {
    return evaluate(f.coeffs(), z);
}

/// sum_k |a_k| |z|^k, the natural scale for residuals of evaluate().
double evaluation_scale(std::span<const Complex> coeffs, Complex z) noexcept;

Complex centroid(const RootSet& roots);

/// sum_k l_k z_k.
Complex weighted_centroid(const RootSet& roots, const WeightVector& weights);

bool is_finite(Complex z) noexcept;

}  // namespace critpoly
