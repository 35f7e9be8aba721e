#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "critpoly/errors.hpp"
#include "critpoly/geometry.hpp"

namespace critpoly {

std::string_view to_string(VarianceSolver s) noexcept {
    switch (s) {
        case VarianceSolver::kClosedForm: return "closed_form";
        case VarianceSolver::kWeiszfeld: return "weiszfeld";
        case VarianceSolver::kConvexDescent: return "convex_descent";
        case VarianceSolver::kWelzl: return "welzl";
    }
    return "unknown";
}

namespace {

// Points mapped to the frame centred at the centroid with unit max radius.
struct UnitFrame {
    Complex origin;
    double scale = 0.0;
    std::vector<Complex> pts;

    explicit UnitFrame(const RootSet& roots) : origin(centroid(roots)) {
        for (const auto& z : roots) scale = std::max(scale, std::abs(z - origin));
        pts.reserve(roots.size());
        for (const auto& z : roots) pts.push_back(scale > 0.0 ? (z - origin) / scale : Complex{});
    }

    Complex to_world(Complex u) const { return origin + scale * u; }
};

void require_nonempty(const RootSet& roots, const char* who) {
    if (roots.empty()) throw InputError(std::string(who) + ": empty root set");
}

// (1/n) sum |u_k - c|^p together with its gradient and Hessian.
struct PowerTerms {
    double f = 0.0;
    std::array<double, 2> grad{};
    std::array<double, 3> hess{};  // xx, xy, yy
};

PowerTerms power_terms(const std::vector<Complex>& pts, double p, Complex c) {
    PowerTerms t;
    const double inv_n = 1.0 / static_cast<double>(pts.size());
    for (const auto& u : pts) {
        const Complex d = c - u;
        const double r = std::abs(d);
        t.f += std::pow(r, p);
        if (r == 0.0) continue;
        const double rp2 = std::pow(r, p - 2.0);
        t.grad[0] += p * rp2 * d.real();
        t.grad[1] += p * rp2 * d.imag();
        // p |d|^(p-2) (I + (p-2) d d^T / |d|^2)
        const double ux = d.real() / r, uy = d.imag() / r;
        t.hess[0] += p * rp2 * (1.0 + (p - 2.0) * ux * ux);
        t.hess[1] += p * rp2 * (p - 2.0) * ux * uy;
        t.hess[2] += p * rp2 * (1.0 + (p - 2.0) * uy * uy);
    }
    t.f *= inv_n;
    for (auto& g : t.grad) g *= inv_n;
    for (auto& h : t.hess) h *= inv_n;
    return t;
}

double power_mean(const std::vector<Complex>& pts, double p, Complex c) {
    double f = 0.0;
    for (const auto& u : pts) f += std::pow(std::abs(c - u), p);
    return f / static_cast<double>(pts.size());
}

// sum w_k u_k / sum w_k with w_k = |u_k - c|^(p-2); empty when c sits on a point.
std::optional<Complex> reweighted_mean(const std::vector<Complex>& pts, double p, Complex c) {
    Complex num{};
    double den = 0.0;
    for (const auto& u : pts) {
        const double r = std::abs(u - c);
        if (r == 0.0) return std::nullopt;
        const double w = std::pow(r, p - 2.0);
        num += w * u;
        den += w;
    }
    if (!std::isfinite(den)) return std::nullopt;
    return num / den;
}

}  // namespace

double variance_objective(const RootSet& roots, double p, Complex c) {
    require_nonempty(roots, "variance_objective");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : roots) m = std::max(m, std::abs(z - c));
        return m;
    }
    double acc = 0.0;
    for (const auto& z : roots) acc += std::pow(std::abs(z - c), p);
    return std::pow(acc / static_cast<double>(roots.size()), 1.0 / p);
}

VarianceResult sigma2(const RootSet& roots) {
    require_nonempty(roots, "sigma2");
    const Complex c = centroid(roots);
    double acc = 0.0;
    for (const auto& z : roots) acc += std::norm(z - c);
    return {2.0, c, std::sqrt(acc / static_cast<double>(roots.size())), VarianceSolver::kClosedForm, 0};
}

VarianceResult sigma1(const RootSet& roots, const WeiszfeldOptions& opts) {
    require_nonempty(roots, "sigma1");
    const UnitFrame frame(roots);
    if (frame.scale == 0.0) return {1.0, frame.origin, 0.0, VarianceSolver::kWeiszfeld, 0};

    constexpr double kSnap = 1e-13;
    const auto& pts = frame.pts;
    Complex y{};  // centroid in the unit frame
    int iter = 0;
    bool converged = false;
    while (iter < opts.max_iters) {
        ++iter;
        // Weight of data points sitting at the iterate, and the pull of the rest.
        double at_y = 0.0;
        Complex anchor{};
        for (const auto& u : pts) {
            if (std::abs(u - y) <= kSnap) {
                at_y += 1.0;
                anchor = u;
            }
        }
        Complex num{}, pull{};
        double den = 0.0;
        for (const auto& u : pts) {
            const double d = std::abs(u - y);
            if (d <= kSnap) continue;
            num += u / d;
            den += 1.0 / d;
            pull += (u - y) / d;
        }
        if (den == 0.0) {  // every point coincides with the iterate
            converged = true;
            break;
        }
        Complex next;
        if (at_y > 0.0) {
            const double r = std::abs(pull);
            if (r <= at_y) {
                y = anchor;
                converged = true;
                break;
            }
            const Complex t = num / den;
            next = (1.0 - at_y / r) * t + (at_y / r) * y;
        } else {
            next = num / den;
        }
        const double step = std::abs(next - y);
        y = next;
        if (step <= opts.step_tol) {
            converged = true;
            break;
        }
    }

    double mad = 0.0;
    for (const auto& u : pts) mad += std::abs(u - y);
    mad *= frame.scale / static_cast<double>(pts.size());
    if (!converged) {
        throw ConvergenceError("sigma1: Weiszfeld iteration did not converge in " +
                                   std::to_string(opts.max_iters) + " iterations",
                               frame.to_world(y), mad, iter);
    }
    return {1.0, frame.to_world(y), mad, VarianceSolver::kWeiszfeld, iter};
}

VarianceResult sigma_p(const RootSet& roots, double p) {
    require_nonempty(roots, "sigma_p");
    if (std::isnan(p) || p < 1.0) throw InputError("sigma_p: exponent must satisfy p >= 1");
    if (p == 1.0) return sigma1(roots);
    if (p == 2.0) return sigma2(roots);
    if (p > kMaxFiniteExponent) {
        VarianceResult r = sigma_inf(roots);
        r.p = p;
        return r;
    }

    const UnitFrame frame(roots);
    if (frame.scale == 0.0) return {p, frame.origin, 0.0, VarianceSolver::kConvexDescent, 0};

    constexpr int kMaxIters = 5000;
    const auto& pts = frame.pts;
    Complex c{};
    int iter = 0;
    bool converged = false;
    PowerTerms t = power_terms(pts, p, c);
    while (iter < kMaxIters) {
        const double gnorm = std::hypot(t.grad[0], t.grad[1]);
        if (gnorm <= 1e-10 * (1.0 + t.f)) {
            converged = true;
            break;
        }
        ++iter;
        // Newton direction when the Hessian is usable, else steepest descent.
        double dx = -t.grad[0], dy = -t.grad[1];
        const double det = t.hess[0] * t.hess[2] - t.hess[1] * t.hess[1];
        if (std::isfinite(det) && det > 0.0 && t.hess[0] > 0.0) {
            const double nx = -(t.hess[2] * t.grad[0] - t.hess[1] * t.grad[1]) / det;
            const double ny = -(t.hess[0] * t.grad[1] - t.hess[1] * t.grad[0]) / det;
            if (std::isfinite(nx) && std::isfinite(ny) && nx * t.grad[0] + ny * t.grad[1] < 0.0) {
                dx = nx;
                dy = ny;
            }
        }
        const double slope = dx * t.grad[0] + dy * t.grad[1];
        if (p < 2.0) {
            // Reweighted-mean step majorizes f for p < 2 and never increases
            // it; Newton alone zigzags when p is close to 1. Take the better.
            if (const auto mm = reweighted_mean(pts, p, c)) {
                const double fm = power_mean(pts, p, *mm);
                const Complex nt = c + Complex(dx, dy);
                const double fn = power_mean(pts, p, nt);
                const bool newton_ok = fn <= t.f + 1e-4 * slope && fn < fm;
                const Complex next = newton_ok ? nt : *mm;
                const double fnext = newton_ok ? fn : fm;
                if (fnext < t.f) {
                    const double move = std::abs(next - c);
                    c = next;
                    t = power_terms(pts, p, c);
                    if (move <= 1e-15) {
                        converged = true;
                        break;
                    }
                    continue;
                }
            }
        }
        // Near the optimum the predicted decrease drops below the rounding
        // error of f; without this slack Armijo accepts only noise-sized steps.
        const double noise = 16.0 * std::numeric_limits<double>::epsilon() * t.f;
        double step = 1.0;
        Complex trial;
        double ftrial = 0.0;
        bool accepted = false;
        while (step > 1e-20) {
            trial = c + step * Complex(dx, dy);
            ftrial = power_mean(pts, p, trial);
            if (ftrial <= t.f + 1e-4 * step * slope + noise) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            // No representable decrease left along a descent direction: the
            // iterate is optimal to working precision.
            converged = gnorm <= 1e-6 * (1.0 + t.f);
            break;
        }
        c = trial;
        t = power_terms(pts, p, c);
        // For p near 1 the gradient decays like r^(p-1) at a data point and
        // cannot reach the tolerance; a vanishing move means the same thing.
        if (step * std::hypot(dx, dy) <= 1e-15) {
            converged = true;
            break;
        }
    }

    const double value = frame.scale * std::pow(t.f, 1.0 / p);
    if (!converged) {
        throw ConvergenceError("sigma_p: descent did not reach the gradient tolerance", frame.to_world(c),
                               value, iter);
    }
    return {p, frame.to_world(c), value, VarianceSolver::kConvexDescent, iter};
}

}  // namespace critpoly
