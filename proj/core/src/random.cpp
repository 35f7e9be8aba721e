#include "critpoly/random.hpp"

#include <cmath>
#include <numbers>

namespace critpoly {

Complex Rng::in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
}

double Rng::exponential() { return -std::log1p(-uniform()); }

}  // namespace critpoly
