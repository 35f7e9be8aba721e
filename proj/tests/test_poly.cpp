#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "critpoly/errors.hpp"
#include "critpoly/poly.hpp"
#include "support/oracles.hpp"

using critpoly::Complex;
using critpoly::RootSet;

namespace {

const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

void expect_coeffs(std::span<const Complex> got, const std::vector<Complex>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        EXPECT_NEAR(got[k].real(), want[k].real(), tol) << "k=" << k;
        EXPECT_NEAR(got[k].imag(), want[k].imag(), tol) << "k=" << k;
    }
}

}  // namespace

TEST(FromRoots, SymmetricPair) {
    const auto f = critpoly::from_roots(RootSet{1.0, -1.0});
    expect_coeffs(f.coeffs(), {-1.0, 0.0, 1.0}, 0.0);
    ASSERT_TRUE(f.origin().has_value());
    EXPECT_EQ(f.origin()->size(), 2u);
}

TEST(FromRoots, ZeroAndCubeRootsOfUnityGiveZ4MinusZ) {
    const auto f = critpoly::from_roots(RootSet{0.0, 1.0, kOmega, kOmega * kOmega});
    expect_coeffs(f.coeffs(), {0.0, -1.0, 0.0, 0.0, 1.0}, 1e-15);
}

TEST(FromRoots, RepeatedRootMatchesHandExpansion) {
    // (z+1)^3 (z-1) = z^4 + 2z^3 - 2z - 1
    const auto f = critpoly::from_roots(RootSet{-1.0, -1.0, -1.0, 1.0});
    expect_coeffs(f.coeffs(), {-1.0, -2.0, 0.0, 2.0, 1.0}, 0.0);
}

TEST(FromRoots, MatchesLongDoubleExpansion) {
    oracle::TestRng rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto z = rng.disk_points(3 + t, 2.0);
        const auto f = critpoly::from_roots(RootSet(z));
        const auto ref = oracle::expand_ld(z);
        for (std::size_t k = 0; k < ref.size(); ++k) {
            const Complex r(static_cast<double>(ref[k].real()), static_cast<double>(ref[k].imag()));
            EXPECT_LE(std::abs(f[k] - r), 1e-12 * (1.0 + std::abs(r)));
        }
    }
}

TEST(FromRoots, RejectsNonFiniteRoots) {
    EXPECT_THROW(RootSet({Complex(1.0, 0.0), Complex(std::nan(""), 0.0)}), critpoly::InputError);
    EXPECT_THROW(RootSet({Complex(INFINITY, 0.0)}), critpoly::InputError);
}

TEST(FromRoots, RejectsDegreeAboveCap) {
    std::vector<Complex> z(critpoly::kMaxDegree + 1, Complex(0.5, 0.0));
    EXPECT_THROW(critpoly::from_roots(RootSet(z)), critpoly::InputError);
}

TEST(FromRoots, RootsAreZerosOfTheExpansion) {
    oracle::TestRng rng(5);
    for (std::size_t n : {2u, 7u, 20u, 35u, 50u}) {
        const auto z = rng.disk_points(n, 2.0);
        const auto f = critpoly::from_roots(RootSet(z));
        // Rounding in both the expansion and Horner is bounded in terms of
        // prod (x + |z_j|) evaluated at |r|.
        std::vector<Complex> moduli;
        for (auto r : z) moduli.emplace_back(-std::abs(r), 0.0);
        const auto majorant = oracle::expand_ld(moduli);
        for (auto r : z) {
            long double scale = 0.0L;
            for (std::size_t k = majorant.size(); k-- > 0;) scale = scale * std::abs(r) + std::abs(majorant[k]);
            const double tol = 8.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                               static_cast<double>(scale);
            EXPECT_LE(std::abs(critpoly::evaluate(f, r)), tol) << "n=" << n;
        }
    }
}

TEST(FromRoots, PermutationInvariant) {
    oracle::TestRng rng(9);
    auto z = rng.disk_points(12, 1.0);
    const auto f = critpoly::from_roots(RootSet(z));
    std::reverse(z.begin(), z.end());
    std::rotate(z.begin(), z.begin() + 5, z.end());
    const auto g = critpoly::from_roots(RootSet(z));
    for (std::size_t k = 0; k <= 12; ++k) EXPECT_LE(std::abs(f[k] - g[k]), 1e-13);
}

TEST(Derivative, PowerRule) {
    expect_coeffs(critpoly::derivative(critpoly::Polynomial({-1.0, 0.0, 1.0})), {0.0, 2.0}, 0.0);
    expect_coeffs(critpoly::derivative(critpoly::Polynomial({0.0, -1.0, 0.0, 0.0, 1.0})), {-1.0, 0.0, 0.0, 4.0}, 0.0);
    expect_coeffs(critpoly::derivative(critpoly::Polynomial({0.0, -1.0, 0.0, 1.0})), {-1.0, 0.0, 3.0}, 0.0);
}

TEST(Derivative, DegreeAndLeadingCoefficient) {
    oracle::TestRng rng(3);
    for (std::size_t n = 2; n <= 15; ++n) {
        const auto d = critpoly::derivative(critpoly::from_roots(RootSet(rng.disk_points(n, 1.0))));
        ASSERT_EQ(d.size(), n);
        EXPECT_EQ(d.back(), Complex(static_cast<double>(n), 0.0));
    }
}

TEST(Derivative, SubleadingCoefficientsShareTheCentroid) {
    // -a_{n-1}/n for F equals -(n-1) a_{n-1} / (n (n-1)) for F'.
    oracle::TestRng rng(4);
    for (std::size_t n = 2; n <= 12; ++n) {
        const RootSet r(rng.disk_points(n, 1.5));
        const auto f = critpoly::from_roots(r);
        const auto d = critpoly::derivative(f);
        const double dn = static_cast<double>(n);
        const Complex from_f = -f[n - 1] / dn;
        const Complex from_d = -d[n - 2] / (dn * (dn - 1.0));
        EXPECT_LE(std::abs(from_f - from_d), 1e-14);
        EXPECT_LE(std::abs(from_f - critpoly::centroid(r)), 1e-14);
    }
}

TEST(Polynomial, RejectsNonMonic) {
    EXPECT_THROW(critpoly::Polynomial({1.0, 2.0}), critpoly::InputError);
    EXPECT_THROW(critpoly::Polynomial({1.0}), critpoly::InputError);
    EXPECT_NO_THROW(critpoly::Polynomial({1.0, 1.0}));
}

TEST(Evaluate, Examples) {
    const critpoly::Polynomial f({-1.0, 0.0, 1.0});
    EXPECT_EQ(critpoly::evaluate(f, 1.0), Complex(0.0, 0.0));
    EXPECT_EQ(critpoly::evaluate(critpoly::Polynomial({0.0, -1.0, 0.0, 0.0, 1.0}), 0.0), Complex(0.0, 0.0));
    EXPECT_EQ(critpoly::evaluate(f, Complex(0.0, 1.0)), Complex(-2.0, 0.0));
}

TEST(Centroid, Examples) {
    EXPECT_EQ(critpoly::centroid(RootSet{1.0, -1.0}), Complex(0.0, 0.0));
    EXPECT_LE(std::abs(critpoly::centroid(RootSet{0.0, 1.0, kOmega, kOmega * kOmega})), 1e-16);
    EXPECT_EQ(critpoly::centroid(RootSet{1.0, 2.0, 3.0}), Complex(2.0, 0.0));
}

TEST(WeightedCentroid, Examples) {
    const RootSet pair{1.0, -1.0};
    EXPECT_EQ(critpoly::weighted_centroid(pair, critpoly::WeightVector::uniform(2)), Complex(0.0, 0.0));
    EXPECT_EQ(critpoly::weighted_centroid(pair, critpoly::WeightVector({1.0, 0.0})), Complex(1.0, 0.0));
    const RootSet four{0.0, 1.0, kOmega, kOmega * kOmega};
    EXPECT_LE(std::abs(critpoly::weighted_centroid(four, critpoly::WeightVector({0.25, 0.25, 0.25, 0.25}))), 1e-16);
}

TEST(WeightedCentroid, LengthMismatchIsInputError) {
    EXPECT_THROW(critpoly::weighted_centroid(RootSet{1.0, 2.0, 3.0}, critpoly::WeightVector::uniform(2)),
                 critpoly::InputError);
}

TEST(WeightVector, Validation) {
    EXPECT_THROW(critpoly::WeightVector({0.5, 0.6}), critpoly::InputError);
    EXPECT_THROW(critpoly::WeightVector({1.5, -0.5}), critpoly::InputError);
    EXPECT_NO_THROW(critpoly::WeightVector({0.5, 0.5 + 5e-13}));
}

TEST(RootSet, TransformedAppliesAffineMap) {
    const RootSet r{1.0, Complex(0.0, 1.0)};
    const RootSet t = r.transformed(Complex(0.0, 2.0), Complex(1.0, 1.0));
    EXPECT_EQ(t[0], Complex(1.0, 3.0));
    EXPECT_EQ(t[1], Complex(-1.0, 1.0));
    EXPECT_DOUBLE_EQ(RootSet({Complex(3.0, 4.0), 1.0}).max_modulus(), 5.0);
}
