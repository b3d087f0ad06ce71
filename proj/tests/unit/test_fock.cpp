// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fockhrt/error.hpp"
#include "fockhrt/fock.hpp"
#include "fockhrt/quadrature.hpp"
#include "support/oracles.hpp"

namespace fockhrt {
namespace {

FockVector random_vector(std::mt19937_64& rng, std::size_t M, std::size_t support) {
    return FockVector::from_normalized(oracle::random_normalized_coords(rng, support, M));
}

TEST(FockVector, RejectsEmptyAndNonFinite) {
    EXPECT_THROW(FockVector(std::vector<cplx>{}), InputError);
    EXPECT_THROW(FockVector(std::vector<cplx>{{1.0, 0.0}, {NAN, 0.0}}), InputError);
    EXPECT_THROW(FockVector(std::vector<cplx>{{INFINITY, 0.0}}), InputError);
}

TEST(Norm, SmallExamples) {
    EXPECT_DOUBLE_EQ(norm(FockVector({cplx{1.0}})), 1.0);
    EXPECT_DOUBLE_EQ(norm(FockVector({cplx{0.0}, cplx{1.0}})), 1.0);
    EXPECT_NEAR(norm(FockVector({cplx{0.0}, cplx{0.0}, cplx{1.0 / std::sqrt(2.0)}})), 1.0, 1e-15);
}

TEST(Norm, MatchesDiscQuadrature) {
    // ||z^2 / sqrt 2||^2 by integrating over the disc of radius 8.
    const FockVector f({cplx{0.0}, cplx{0.0}, cplx{1.0 / std::sqrt(2.0)}});
    const cplx q = gaussian_disc_integral(
        [&](cplx z) { return cplx{std::norm(evaluate(f, z)), 0.0}; }, 8.0);
    EXPECT_NEAR(q.real() / std::numbers::pi, 1.0, 1e-10);
}

TEST(Norm, LargeIndexUsesLogWeights) {
    std::vector<cplx> c(250, cplx{});
    c[200] = std::exp(-0.5 * std::lgamma(201.0));
    EXPECT_NEAR(norm(FockVector(c)), 1.0, 1e-12);
    EXPECT_THROW((void)sqrt_factorials(400), EngineError);
}

TEST(Inner, Examples) {
    const FockVector f({cplx{1.0}, cplx{1.0}});
    const FockVector g({cplx{1.0}, cplx{-1.0}});
    EXPECT_EQ(inner(f, g), cplx(0.0, 0.0));
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t k = 0; k < 8; ++k) {
            const cplx v = inner(basis_vector(j, 8), basis_vector(k, 8));
            EXPECT_NEAR(std::abs(v - cplx(j == k ? 1.0 : 0.0)), 0.0, 1e-15);
        }
    }
}

TEST(Inner, ZeroPadsShorterArgument) {
    const FockVector f({cplx{1.0}, cplx{2.0}});
    const FockVector g({cplx{3.0}, cplx{1.0}, cplx{5.0}});
    EXPECT_EQ(inner(f, g), cplx(5.0, 0.0));
}

TEST(Inner, PropertiesOnRandomVectors) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const FockVector f = random_vector(rng, 40, 30);
        const FockVector g = random_vector(rng, 40, 30);
        const cplx fg = inner(f, g);
        EXPECT_NEAR(std::abs(fg - std::conj(inner(g, f))), 0.0, 1e-14);
        EXPECT_NEAR(inner(f, f).real(), std::pow(norm(f), 2), 1e-13);
        EXPECT_LE(std::abs(fg), norm(f) * norm(g) * (1 + 1e-14));

        // Parseval against the normalized basis.
        double sum = 0.0;
        for (std::size_t j = 0; j < 40; ++j) sum += std::norm(inner(f, basis_vector(j, 40)));
        EXPECT_NEAR(sum, std::pow(norm(f), 2), 1e-12 * sum);
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(evaluate(FockVector({cplx{1.0}}), {3.0, -2.0}), cplx(1.0));
    EXPECT_EQ(evaluate(FockVector({cplx{0.0}, cplx{1.0}}), {2.0, 1.0}), cplx(2.0, 1.0));
    EXPECT_EQ(evaluate(FockVector({cplx{1.0}, cplx{1.0}, cplx{1.0}}), 1.0), cplx(3.0));
}

TEST(Evaluate, BasisVectorsAreScaledMonomials) {
    std::mt19937_64 rng(3);
    for (std::size_t j = 0; j <= 40; ++j) {
        const FockVector e = basis_vector(j, 41);
        for (int t = 0; t < 5; ++t) {
            const cplx z = oracle::random_in_disc(rng, 4.0);
            const cplx want = std::pow(z, static_cast<int>(j)) * std::exp(-0.5 * std::lgamma(j + 1.0));
            EXPECT_LE(std::abs(evaluate(e, z) - want), 1e-12 * std::abs(want) + 1e-300);
        }
    }
}

TEST(BasisVector, Examples) {
    const FockVector e0 = basis_vector(0, 4);
    EXPECT_EQ(e0[0], cplx(1.0));
    const FockVector e2 = basis_vector(2, 4);
    EXPECT_NEAR(e2[2].real(), 1.0 / std::sqrt(2.0), 1e-16);
    EXPECT_NEAR(norm(e2), 1.0, 1e-15);
    EXPECT_THROW((void)basis_vector(4, 4), InputError);
}

TEST(TailReport, Examples) {
    const FockVector c({cplx{1.0}, cplx{}, cplx{}, cplx{}});
    EXPECT_EQ(tail_report(c, 0.25).guard_energy, 0.0);
    const FockVector top = basis_vector(7, 8);
    const TailReport r = tail_report(top, 0.25);
    EXPECT_DOUBLE_EQ(r.guard_energy, r.total_energy);

    std::mt19937_64 rng(5);
    const FockVector f = random_vector(rng, 16, 16);
    const TailReport all = tail_report(f, 1.0);
    EXPECT_DOUBLE_EQ(all.guard_energy, all.total_energy);
    EXPECT_THROW((void)tail_report(f, 0.0), InputError);
    EXPECT_THROW((void)tail_report(f, 1.5), InputError);
}

TEST(TailGuard, RefusesPollutedTail) {
    EXPECT_THROW(require_tail_clean(basis_vector(63, 64)), NeedsLargerTruncation);
    EXPECT_NO_THROW(require_tail_clean(basis_vector(10, 64)));
    TailGuard off;
    off.enabled = false;
    EXPECT_NO_THROW(require_tail_clean(basis_vector(63, 64), off));
}

TEST(GuardCount, Ceiling) {
    EXPECT_EQ(guard_count(64, 0.25), 16u);
    EXPECT_EQ(guard_count(10, 0.25), 3u);
}

}  // namespace
}  // namespace fockhrt
