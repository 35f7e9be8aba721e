#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "critpoly/errors.hpp"
#include "critpoly/geometry.hpp"

namespace critpoly {

namespace {

struct Circle {
    Complex c;
    double r = -1.0;  // negative: no circle

    bool valid() const { return r >= 0.0; }
    bool contains(Complex p) const { return std::abs(p - c) <= r * (1.0 + 1e-14); }
};

Circle diameter(Complex a, Complex b) {
    const Complex c = 0.5 * (a + b);
    return {c, std::max(std::abs(c - a), std::abs(c - b))};
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

Circle circumcircle(Complex a, Complex b, Complex c) {
    // Shift to the bounding-box centre for precision.
    const double ox = (std::min({a.real(), b.real(), c.real()}) + std::max({a.real(), b.real(), c.real()})) / 2;
    const double oy = (std::min({a.imag(), b.imag(), c.imag()}) + std::max({a.imag(), b.imag(), c.imag()})) / 2;
    const Complex o(ox, oy);
    const Complex pa = a - o, pb = b - o, pc = c - o;
    const double d = (pa.real() * (pb.imag() - pc.imag()) + pb.real() * (pc.imag() - pa.imag()) +
                      pc.real() * (pa.imag() - pb.imag())) *
                     2.0;
    if (d == 0.0) return {};
    const double na = std::norm(pa), nb = std::norm(pb), nc = std::norm(pc);
    const double x = (na * (pb.imag() - pc.imag()) + nb * (pc.imag() - pa.imag()) + nc * (pa.imag() - pb.imag())) / d;
    const double y = (na * (pc.real() - pb.real()) + nb * (pa.real() - pc.real()) + nc * (pb.real() - pa.real())) / d;
    const Complex center = o + Complex(x, y);
    const double r = std::max({std::abs(center - a), std::abs(center - b), std::abs(center - c)});
    return {center, r};
}

Circle with_two(const std::vector<Complex>& pts, std::size_t end, Complex p, Complex q) {
    const Circle circ = diameter(p, q);
    Circle left, right;
    const Complex pq = q - p;
    for (std::size_t i = 0; i < end; ++i) {
        const Complex r = pts[i];
        if (circ.contains(r)) continue;
        const double side = cross(pq, r - p);
        const Circle c = circumcircle(p, q, r);
        if (!c.valid()) continue;
        if (side > 0.0 && (!left.valid() || cross(pq, c.c - p) > cross(pq, left.c - p))) {
            left = c;
        } else if (side < 0.0 && (!right.valid() || cross(pq, c.c - p) < cross(pq, right.c - p))) {
            right = c;
        }
    }
    if (!left.valid() && !right.valid()) return circ;
    if (!left.valid()) return right;
    if (!right.valid()) return left;
    return left.r <= right.r ? left : right;
}

Circle with_one(const std::vector<Complex>& pts, std::size_t end, Complex p) {
    Circle c{p, 0.0};
    for (std::size_t i = 0; i < end; ++i) {
        const Complex q = pts[i];
        if (c.contains(q)) continue;
        c = c.r == 0.0 ? diameter(p, q) : with_two(pts, i + 1, p, q);
    }
    return c;
}

}  // namespace

VarianceResult sigma_inf(const RootSet& roots) {
    if (roots.empty()) throw InputError("sigma_inf: empty root set");

    const Complex origin = centroid(roots);
    double scale = 0.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z - origin));
    if (scale == 0.0) return {kInfinity, origin, 0.0, VarianceSolver::kWelzl, 0};

    std::vector<Complex> pts;
    pts.reserve(roots.size());
    for (const auto& z : roots) pts.push_back((z - origin) / scale);

    // Fixed-seed Fisher-Yates so results do not depend on the caller.
    std::mt19937_64 rng(0x5eed'c1c1eULL);
    for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng() % i]);

    Circle c;
    int updates = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!c.valid() || !c.contains(pts[i])) {
            c = with_one(pts, i + 1, pts[i]);
            ++updates;
        }
    }
    return {kInfinity, origin + scale * c.c, scale * c.r, VarianceSolver::kWelzl, updates};
}

}  // namespace critpoly
