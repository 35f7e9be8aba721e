#include "critpoly/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "critpoly/errors.hpp"

namespace critpoly {

void RootFindConfig::validate() const {
    if (max_iters < 1) throw InputError("RootFindConfig: max_iters must be >= 1");
    if (!(tol > 0.0)) throw InputError("RootFindConfig: tol must be > 0");
    if (polish_iters < 0) throw InputError("RootFindConfig: polish_iters must be >= 0");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1/d without the libgcc overflow-guarded division; callers keep |d| in a
// moderate range.
inline Complex reciprocal(Complex d) {
    const double m = d.real() * d.real() + d.imag() * d.imag();
    return {d.real() / m, -d.imag() / m};
}

inline double modulus(Complex d) { return std::sqrt(d.real() * d.real() + d.imag() * d.imag()); }

struct Probe {
    Complex newton;   // p(z) / p'(z)
    double residual;  // |p(z)| / sum |a_k| |z|^k
    double normwise;  // |p(z)| / (max |a_k| sum |z|^k)
};

// Monic coefficients with their moduli cached for residual scaling.
struct Monic {
    std::vector<Complex> a;
    std::vector<double> m;
    double m_max = 0.0;

    explicit Monic(std::vector<Complex> coeffs) : a(std::move(coeffs)), m(a.size()) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            m[k] = std::abs(a[k]);
            m_max = std::max(m_max, m[k]);
        }
    }
};

// Newton correction and relative residual of the monic polynomial at z.
// Outside the unit circle the reversed polynomial is used so that large
// starting radii cannot overflow.
Probe probe(const Monic& poly, Complex z) {
    const auto& a = poly.a;
    const auto& m = poly.m;
    const std::size_t n = a.size() - 1;
    constexpr Complex kStationary{std::numeric_limits<double>::infinity(), 0.0};
    Complex p{}, dp{};
    double s = 0.0, g = 0.0;
    const double rz = modulus(z);
    if (rz <= 1.0) {
        const double r = rz;
        for (std::size_t k = n + 1; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + a[k];
            s = s * r + m[k];
            g = g * r + 1.0;
        }
        if (p == Complex{}) return {Complex{}, 0.0, 0.0};
        const double ap = modulus(p);
        return {dp == Complex{} ? kStationary : p / dp, ap / s, ap / (poly.m_max * g)};
    }
    const Complex y = reciprocal(z);
    const double r = 1.0 / rz;
    for (std::size_t k = 0; k <= n; ++k) {
        dp = dp * y + p;
        p = p * y + a[k];
        s = s * r + m[k];
        g = g * r + 1.0;
    }
    if (p == Complex{}) return {Complex{}, 0.0, 0.0};
    const double ap = modulus(p);
    // p'(z)/p(z) = n/z - y^2 q'(y)/q(y) with q the reversed polynomial.
    const Complex log_deriv = static_cast<double>(n) * y - y * y * dp / p;
    return {log_deriv == Complex{} ? kStationary : 1.0 / log_deriv, ap / s, ap / (poly.m_max * g)};
}

// Normwise backward error. The componentwise one is identically 1 for z^n,
// whose n-fold zero is still perfectly acceptable.
double backward_error(const Monic& a, Complex z) { return probe(a, z).normwise; }

// Accepts a multiple-root cluster when its centroid is a good root even
// though the individual approximations have stalled.
bool clusters_acceptable(const Monic& a, const std::vector<Complex>& z) {
    const std::size_t n = z.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (label[v] < 0 && std::abs(z[u] - z[v]) <= 1e-4 * (1.0 + std::abs(z[u]))) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    for (int c = 0; c < next; ++c) {
        Complex sum{};
        int m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (label[i] == c) {
                sum += z[i];
                ++m;
            }
        }
        if (backward_error(a, sum / static_cast<double>(m)) > 1e-6) return false;
    }
    return true;
}

// Unique positive root of x^n - sum_{k<n} |a_k| x^k, which bounds every root
// modulus. Newton from the cruder bound 1 + max |a_k| decreases monotonically.
double cauchy_radius(const Monic& poly) {
    const auto& m = poly.m;
    const std::size_t n = m.size() - 1;
    double x = 0.0;
    for (std::size_t k = 0; k < n; ++k) x = std::max(x, m[k]);
    x += 1.0;
    if (x == 1.0) return 1.0;  // z^n: any circle works
    for (int it = 0; it < 100; ++it) {
        double f = 1.0, df = 0.0;
        for (std::size_t k = n; k-- > 0;) {
            df = df * x + f;
            f = f * x - m[k];
        }
        if (!(df > 0.0)) break;
        const double next = x - f / df;
        if (!(next > 0.0) || next >= x) break;
        const bool small = x - next <= 1e-3 * x;
        x = next;
        if (small) break;
    }
    return x;
}

}  // namespace

RootFindResult find_roots(std::span<const Complex> coeffs, const RootFindConfig& cfg) {
    cfg.validate();
    if (coeffs.size() < 2) throw InputError("find_roots: degree must be >= 1");
    for (const auto& c : coeffs) {
        if (!is_finite(c)) throw InputError("find_roots: non-finite coefficient");
    }
    const Complex lead = coeffs.back();
    if (lead == Complex{}) throw InputError("find_roots: leading coefficient is zero");

    const std::size_t n = coeffs.size() - 1;
    std::vector<Complex> monic(coeffs.begin(), coeffs.end());
    for (auto& c : monic) c /= lead;
    monic.back() = 1.0;
    const Monic a(std::move(monic));

    RootFindResult out;
    if (n == 1) {
        out.roots = RootSet({-a.a[0]});
        out.converged = true;
        return out;
    }

    const double radius = cauchy_radius(a);

    // Equally spaced start on the Cauchy circle, rotated by an irrational
    // fraction of the spacing so no guess lands on a symmetry axis.
    const double offset = std::numbers::phi - 1.0;
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * (static_cast<double>(k) + offset) /
                                      static_cast<double>(n));
    }

    const double noise = 2.0 * static_cast<double>(n) * kEps;
    std::vector<char> done(n, 0);
    std::size_t remaining = n;
    int iter = 0;
    while (remaining > 0 && iter < cfg.max_iters) {
        ++iter;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const Probe pr = probe(a, z[i]);
            if (pr.residual <= noise) {
                done[i] = 1;
                --remaining;
                continue;
            }
            Complex repulsion{};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (d != Complex{}) repulsion += reciprocal(d);
            }
            Complex step;
            if (!is_finite(pr.newton)) {
                // Stationary point of p: nudge off it.
                step = Complex(-1e-3, 1e-3) * (1.0 + std::abs(z[i]));
            } else {
                step = pr.newton / (1.0 - pr.newton * repulsion);
                if (!is_finite(step)) step = pr.newton;
            }
            z[i] -= step;
            if (modulus(step) <= cfg.tol * (1.0 + modulus(z[i]))) {
                done[i] = 1;
                --remaining;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < cfg.polish_iters; ++k) {
            const Probe pr = probe(a, z[i]);
            if (pr.residual == 0.0 || !is_finite(pr.newton)) break;
            const Complex cand = z[i] - pr.newton;
            if (probe(a, cand).residual >= pr.residual) break;
            z[i] = cand;
        }
    }

    double residual = 0.0;
    for (const auto& zi : z) residual = std::max(residual, backward_error(a, zi));

    out.iterations = iter;
    out.residual = residual;
    out.converged = residual <= 1e-8 && (remaining == 0 || clusters_acceptable(a, z));
    out.roots = RootSet(std::move(z));
    return out;
}

RootSet critical_points(const RootSet& roots, const RootFindConfig& cfg) {
    const std::size_t n = roots.size();
    if (n < 2) throw InputError("critical_points: need at least two zeros");

    const Complex center = centroid(roots);
    double scale = 0.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z - center));
    if (scale == 0.0) return RootSet(std::vector<Complex>(n - 1, center));

    std::vector<Complex> unit;
    unit.reserve(n);
    for (const auto& z : roots) unit.push_back((z - center) / scale);
    const auto d = derivative(from_roots(RootSet(std::move(unit))));
    RootFindResult res = find_roots(d, cfg);
    if (!res.converged) {
        throw ConvergenceError("critical_points: root finder did not converge (residual " +
                                   std::to_string(res.residual) + ")",
                               {}, res.residual, res.iterations);
    }
    return res.roots.transformed(scale, center);
}

}  // namespace critpoly
