#include <gtest/gtest.h>

#include <cmath>

#include "critpoly/errors.hpp"
#include "critpoly/fuzz.hpp"

using namespace critpoly;

namespace {

FuzzConfig small(std::vector<Suite> suites, std::size_t trials = 200) {
    FuzzConfig cfg;
    cfg.suites = std::move(suites);
    cfg.degrees = {2, 3, 4, 6, 9};
    cfg.trials = trials;
    cfg.seed = 1234;
    return cfg;
}

void expect_same(const FuzzReport& a, const FuzzReport& b) {
    ASSERT_EQ(a.buckets.size(), b.buckets.size());
    for (std::size_t i = 0; i < a.buckets.size(); ++i) {
        const auto& x = a.buckets[i];
        const auto& y = b.buckets[i];
        EXPECT_EQ(x.check, y.check);
        EXPECT_EQ(x.degree, y.degree);
        EXPECT_EQ(x.evaluated, y.evaluated);
        EXPECT_EQ(x.passed, y.passed);
        EXPECT_EQ(x.equalities, y.equalities);
        EXPECT_EQ(x.mismatches, y.mismatches);
        EXPECT_EQ(x.min_relative_slack, y.min_relative_slack);
        ASSERT_EQ(x.first.has_value(), y.first.has_value());
        if (x.first) EXPECT_EQ(x.first->lhs, y.first->lhs);
        ASSERT_EQ(x.records.size(), y.records.size());
        for (std::size_t r = 0; r < x.records.size(); ++r) EXPECT_EQ(x.records[r].trial, y.records[r].trial);
    }
}

}  // namespace

TEST(Sampling, DiskGeneratorStaysInDisk) {
    Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
        EXPECT_LE(sample_configuration(Generator::kDisk, 5, 1.0, rng).max_modulus(), 1.0);
        EXPECT_LE(sample_configuration(Generator::kCollinear, 5, 1.0, rng).max_modulus(), 1.0 + 1e-15);
    }
}

TEST(Sampling, GeneratorsProduceTheirClass) {
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        EXPECT_EQ(classify_configuration(sample_configuration(Generator::kAllEqual, 6, 1.0, rng)),
                  ConfigurationClass::kAllEqual);
        EXPECT_NE(classify_configuration(sample_configuration(Generator::kCollinear, 6, 1.0, rng)),
                  ConfigurationClass::kGeneric);
    }
}

TEST(Sampling, WeightsOnSimplex) {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto w = sample_weights(7, rng);
        double s = 0.0;
        for (double x : w.values()) {
            EXPECT_GE(x, 0.0);
            s += x;
        }
        EXPECT_NEAR(s, 1.0, 1e-15);
    }
}

TEST(Seeds, DerivedStreamsDiffer) {
    EXPECT_NE(derive_seed(1, 0, 3), derive_seed(1, 1, 3));
    EXPECT_NE(derive_seed(1, 0, 3), derive_seed(1, 0, 4));
    EXPECT_NE(derive_seed(1, 0, 3), derive_seed(2, 0, 3));
    Rng a(9), b(9);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(Fuzz, ProvenSuitesPassOnDiskCorpus) {
    auto cfg = small({Suite::kSchoenberg, Suite::kCentroidDisk, Suite::kVarianceBound, Suite::kRefinedRadius,
                      Suite::kPawlowski});
    const auto rep = run_fuzz(cfg);
    EXPECT_FALSE(rep.has_violations());
    for (const auto& b : rep.buckets) {
        EXPECT_EQ(b.evaluated, cfg.trials) << b.check << " n=" << b.degree;
        EXPECT_EQ(b.passed, cfg.trials) << b.check << " n=" << b.degree;
        EXPECT_EQ(b.solver_failures, 0u);
    }
}

TEST(Fuzz, ReportDoesNotDependOnThreadCount) {
    auto cfg = small({Suite::kSchoenberg, Suite::kVarianceBound, Suite::kBorcea}, 150);
    cfg.threads = 1;
    const auto one = run_fuzz(cfg);
    cfg.threads = 3;
    const auto three = run_fuzz(cfg);
    cfg.threads = 7;
    const auto seven = run_fuzz(cfg);
    expect_same(one, three);
    expect_same(one, seven);
}

TEST(Fuzz, CollinearCorpusIsAllEquality) {
    auto cfg = small({Suite::kSchoenberg}, 300);
    cfg.generator = Generator::kCollinear;
    const auto rep = run_fuzz(cfg);
    for (const auto& b : rep.buckets) {
        EXPECT_EQ(b.equalities, b.evaluated) << "n=" << b.degree;
        EXPECT_EQ(b.mismatches, 0u);
    }
}

TEST(Fuzz, VarianceBoundEqualityCases) {
    auto cfg = small({Suite::kVarianceBound}, 200);
    cfg.radius = 3.0;
    cfg.generator = Generator::kAllEqual;
    auto rep = run_fuzz(cfg);
    for (const auto& b : rep.buckets) EXPECT_EQ(b.equalities, b.evaluated);

    cfg.generator = Generator::kCollinear;
    cfg.degrees = {3};
    rep = run_fuzz(cfg);
    EXPECT_EQ(rep.buckets[0].equalities, rep.buckets[0].evaluated);
    EXPECT_EQ(rep.confirmed_mismatches(), 0u);
}

TEST(Fuzz, DiskSuitesRejectLargeRadius) {
    auto cfg = small({Suite::kRefinedRadius});
    cfg.radius = 3.0;
    EXPECT_THROW(run_fuzz(cfg), InputError);
    cfg.suites = {};
    EXPECT_THROW(run_fuzz(cfg), InputError);
}

TEST(Fuzz, SingleConfiguration) {
    const auto rep = run_checks_on(RootSet(std::vector<Complex>(5, 1.0)), {Suite::kCentroidDisk}, 2.0);
    ASSERT_EQ(rep.buckets.size(), 2u);
    EXPECT_EQ(rep.buckets[0].check, "centroid_disk");
    ASSERT_TRUE(rep.buckets[0].first);
    EXPECT_EQ(rep.buckets[0].first->lhs, 0.0);
    EXPECT_TRUE(rep.buckets[0].first->passed);
    EXPECT_FALSE(rep.has_violations());
    EXPECT_THROW(run_checks_on(RootSet{2.0, 0.0}, {Suite::kPawlowski}, 2.0), InputError);
}

TEST(Fuzz, SuiteNames) {
    EXPECT_EQ(to_string(Suite::kCentroidDisk), "thm11");
    EXPECT_EQ(to_string(Suite::kVarianceBound), "thm-mt");
    EXPECT_EQ(to_string(Suite::kRefinedRadius), "thm-mt1");
    EXPECT_FALSE(is_proven(Suite::kBorcea));
    EXPECT_TRUE(requires_unit_disk(Suite::kPawlowski));
    EXPECT_FALSE(requires_unit_disk(Suite::kVarianceBound));
}
