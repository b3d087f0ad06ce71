// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fockhrt/error.hpp"
#include "fockhrt/hrt.hpp"
#include "support/oracles.hpp"

namespace fockhrt {
namespace {

PointConfig random_config(std::mt19937_64& rng, std::size_t N, double radius) {
    PointConfig c;
    while (c.points.size() < N) {
        const cplx z = oracle::random_in_disc(rng, radius);
        bool ok = true;
        for (const auto& p : c.points) ok = ok && std::abs(p - z) > 1e-3;
        if (ok) c.points.push_back(z);
    }
    return c;
}

TEST(Gram, SinglePointUnitWindow) {
    PointConfig c{{cplx{1.3, -0.7}}, std::nullopt};
    const Certificate cert = gram_matrix(c, gaussian_window(64), 64);
    EXPECT_NEAR(std::abs(cert.gram(0, 0) - 1.0), 0.0, 1e-8);
    EXPECT_FALSE(cert.verdict.has_value());
}

TEST(Gram, ZeroAndOneModulus) {
    PointConfig c{{cplx{0.0}, cplx{1.0}}, std::nullopt};
    const Certificate cert = gram_matrix(c, gaussian_window(64), 64);
    EXPECT_NEAR(std::abs(cert.gram(0, 1)), std::exp(-0.5), 1e-12);
    EXPECT_NEAR(std::abs(cert.gram(0, 1)), 0.60653, 1e-5);
}

TEST(Gram, MatchesKernelOracle) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
        const PointConfig c = random_config(rng, 2 + t % 5, 2.0);
        const Certificate cert = gram_matrix(c, gaussian_window(64), 64);
        for (std::size_t j = 0; j < c.points.size(); ++j) {
            for (std::size_t k = 0; k < c.points.size(); ++k) {
                const cplx want = oracle::gaussian_gram_entry(c.points[j], c.points[k]);
                EXPECT_NEAR(std::abs(cert.gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) - want),
                            0.0, 1e-9);
            }
        }
    }
}

TEST(Gram, StableUnderTruncation) {
    std::mt19937_64 rng(13);
    const PointConfig c = random_config(rng, 5, 2.0);
    const Certificate a = gram_matrix(c, gaussian_window(64), 64);
    const Certificate b = gram_matrix(c, gaussian_window(96), 96);
    EXPECT_LE((a.gram - b.gram).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Gram, HermitianAndGeneralWindow) {
    std::mt19937_64 rng(14);
    const PointConfig c = random_config(rng, 4, 1.5);
    const FockVector w = FockVector::from_normalized(oracle::random_normalized_coords(rng, 8, 64));
    const Certificate cert = certify_independence(c, w, 64);
    EXPECT_LE((cert.gram - cert.gram.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    for (Eigen::Index j = 0; j < cert.gram.rows(); ++j) EXPECT_NEAR(cert.gram(j, j).real(), 1.0, 1e-8);
    EXPECT_GE(cert.min_eigenvalue, -cert.tail_slack);
}

TEST(Certify, SmallGenericSet) {
    std::mt19937_64 rng(15);
    const PointConfig c = random_config(rng, 3, 2.0);
    const Certificate cert = certify_independence(c, gaussian_window(64), 64);
    EXPECT_EQ(cert.verdict, Verdict::Independent);
    EXPECT_GT(cert.min_eigenvalue, 3.0 * cert.tail_slack);
}

TEST(Certify, SixthRoots) {
    const Certificate cert = certify_independence(roots_config(6), gaussian_window(64), 64);
    EXPECT_EQ(cert.verdict, Verdict::Independent);
}

TEST(Certify, RejectsNearCoincidentPoints) {
    PointConfig c{{cplx{0.5}, cplx{0.5 + 1e-13}}, std::nullopt};
    EXPECT_THROW((void)certify_independence(c, gaussian_window(64), 64), InputError);
}

TEST(Certify, PositiveOnRandomConfigs) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 10; ++t) {
        const std::size_t N = 2 + rng() % 7;
        const PointConfig c = random_config(rng, N, 2.0);
        const Certificate cert = certify_independence(c, gaussian_window(64), 64);
        EXPECT_GT(cert.min_eigenvalue, 0.0);
        EXPECT_GT(cert.min_eigenvalue, cert.tail_slack);
    }
}

TEST(Certify, TranslationCovariance) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 5; ++t) {
        const PointConfig c = random_config(rng, 5, 1.0);
        const cplx mu = oracle::random_in_disc(rng, 0.8);
        PointConfig shifted = c;
        for (auto& p : shifted.points) p += mu;
        const double a = certify_independence(c, gaussian_window(64), 64).min_eigenvalue;
        const double b = certify_independence(shifted, gaussian_window(64), 64).min_eigenvalue;
        EXPECT_NEAR(a, b, 1e-8);
    }
}

TEST(Certify, ReportsInconclusiveForNearlyDependent) {
    // Points 1e-6 apart give a Gram matrix that is singular to rounding.
    PointConfig c{{cplx{0.0}, cplx{1e-6}, cplx{2e-6}}, std::nullopt};
    const Certificate cert = certify_independence(c, gaussian_window(64), 64);
    EXPECT_EQ(cert.verdict, Verdict::Inconclusive);
}

TEST(Classify, SmallN) {
    std::mt19937_64 rng(18);
    EXPECT_EQ(classify_known_case(random_config(rng, 3, 2.0)), KnownCase::SmallN);
    EXPECT_EQ(classify_known_case(random_config(rng, 1, 2.0)), KnownCase::SmallN);
}

TEST(Classify, FourthRootsAreParallelPairs) {
    EXPECT_EQ(classify_known_case(roots_config(4)), KnownCase::ParallelPairs);
    PointConfig numeric = roots_config(4);
    numeric.exact.reset();
    EXPECT_EQ(classify_known_case(numeric), KnownCase::ParallelPairs);
}

TEST(Classify, PairingSearchCoversAllSplits) {
    // Only the split {0,3} / {1,2} is parallel: both pairs horizontal.
    const PointConfig c{{cplx{0.0, 0.0}, cplx{0.3, 1.0}, cplx{2.1, 1.0}, cplx{1.0, 0.0}}, std::nullopt};
    EXPECT_EQ(classify_known_case(c), KnownCase::ParallelPairs);
    // Four points on one line: pairs are parallel but the lines coincide.
    const PointConfig line{{cplx{0.0}, cplx{1.0}, cplx{2.0}, cplx{3.5}}, std::nullopt};
    EXPECT_THROW((void)classify_known_case(line), EngineError);
}

TEST(Classify, RootsOfUnity) {
    for (int d : {1, 2, 3, 4, 6}) EXPECT_NE(classify_known_case(roots_config(d)), KnownCase::Unknown) << d;
    for (int d : {5, 7, 8, 9, 10, 11, 12}) EXPECT_EQ(classify_known_case(roots_config(d)), KnownCase::Unknown) << d;
    EXPECT_EQ(classify_known_case(roots_config(6)), KnownCase::RegularLattice);
}

TEST(Classify, NeedsExactFormsForLatticeCase) {
    PointConfig c = roots_config(5);
    c.exact.reset();
    try {
        (void)classify_known_case(c);
        FAIL();
    } catch (const EngineError& e) {
        EXPECT_EQ(e.kind(), "exactness-required");
    }
}

TEST(RootsConfig, Examples) {
    const PointConfig one = roots_config(1, {0.3, 0.4});
    ASSERT_EQ(one.points.size(), 1u);
    EXPECT_EQ(one.points[0], cplx(0.3, 0.4));
    EXPECT_FALSE(one.exact.has_value());

    const PointConfig four = roots_config(4);
    const cplx want[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(four.points[k] - want[k]), 0.0, 1e-15);

    const PointConfig six = roots_config(6);
    ASSERT_TRUE(six.exact.has_value());
    const auto& w = (*six.exact)[1];
    EXPECT_EQ(w * w, w - exact::CycloElement::rational(6, 1));
    EXPECT_THROW((void)roots_config(3, 0.0), InputError);
    EXPECT_THROW((void)roots_config(0), InputError);
}

TEST(RootsConfig, ExactBeta) {
    using exact::CycloElement;
    const CycloElement beta(4, {exact::Rational(1, 2), exact::Rational(1)});
    const PointConfig c = roots_config(6, beta);
    ASSERT_EQ(c.exact->front().conductor(), 12);
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(classify_known_case(c), KnownCase::RegularLattice);
}

TEST(Label, EvidenceVersusProven) {
    EXPECT_EQ(evidence_label(roots_config(6)), "PROVEN-CASE");
    EXPECT_EQ(evidence_label(roots_config(5)), "EVIDENCE");
}

}  // namespace
}  // namespace fockhrt
