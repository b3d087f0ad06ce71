// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "fockhrt/error.hpp"
#include "fockhrt/json_io.hpp"
#include "support/oracles.hpp"

namespace fockhrt::io {
namespace {

using exact::CycloElement;
using exact::Integer;
using exact::Rational;

TEST(Json, ComplexAndRational) {
    const cplx z(0.1, -3e-300);
    EXPECT_EQ(complex_from_json(json::parse(complex_to_json(z).dump())), z);
    EXPECT_THROW((void)complex_from_json(json::array({1.0})), InputError);

    const Rational back = rational_from_json(json::parse(rational_to_json(Rational(-3, 2)).dump()));
    EXPECT_EQ(back, Rational(-3, 2));
    EXPECT_EQ(rational_from_json(json::array({6, -4})), Rational(-3, 2));
    EXPECT_THROW((void)rational_from_json(json::array({1, 0})), InputError);

    Integer big;
    big.set_str("123456789012345678901234567890", 10);
    const json jb = integer_to_json(big);
    EXPECT_TRUE(jb.is_string());
    EXPECT_EQ(integer_from_json(jb), big);
}

TEST(Json, CycloAndFock) {
    const CycloElement e(5, {Rational(1, 3), Rational(-2), Rational(0), Rational(7, 9)});
    EXPECT_EQ(cyclo_from_json(json::parse(cyclo_to_json(e).dump())), e);

    std::mt19937_64 rng(1);
    const FockVector f = FockVector::from_normalized(oracle::random_normalized_coords(rng, 10, 12));
    EXPECT_EQ(fock_from_json(json::parse(fock_to_json(f).dump())), f);
}

TEST(Json, HrtInputRoundTrip) {
    HrtInput in{roots_config(6), gaussian_window(64), 64};
    const json j = json::parse(hrt_input_to_json(in).dump());
    EXPECT_EQ(j.at("window"), "gaussian");
    const HrtInput back = hrt_input_from_json(j);
    EXPECT_EQ(back.config.points, in.config.points);
    ASSERT_TRUE(back.config.exact.has_value());
    EXPECT_EQ(*back.config.exact, *in.config.exact);
    EXPECT_EQ(back.window, in.window);
    EXPECT_EQ(back.M, 64u);

    HrtInput custom{{{cplx{0.5}, cplx{0.0, 1.0}}, std::nullopt}, basis_vector(2, 8), 32};
    const HrtInput c2 = hrt_input_from_json(json::parse(hrt_input_to_json(custom).dump()));
    EXPECT_EQ(c2.window, custom.window);
    EXPECT_FALSE(c2.config.exact.has_value());
}

TEST(Json, CertificateRoundTrip) {
    const Certificate c = certify_independence(roots_config(5), gaussian_window(64), 64);
    const Certificate back = certificate_from_json(json::parse(certificate_to_json(c).dump()));
    EXPECT_EQ(back.gram, c.gram);
    EXPECT_EQ(back.min_eigenvalue, c.min_eigenvalue);
    EXPECT_EQ(back.condition_number, c.condition_number);
    EXPECT_EQ(back.tail_slack, c.tail_slack);
    EXPECT_EQ(back.verdict, c.verdict);
}

TEST(Json, MembershipRoundTrip) {
    for (int d : {5, 6, 2}) {
        const auto r = exact::roots_in_lattice(d);
        const auto back = membership_from_json(json::parse(membership_to_json(r).dump()));
        EXPECT_EQ(back.embeddable, r.embeddable);
        EXPECT_EQ(back.rank_certificate, r.rank_certificate);
        if (r.embeddable) EXPECT_EQ(back.coordinates, r.coordinates);
        EXPECT_EQ(back.witness.has_value(), r.witness.has_value());
        if (r.witness) {
            EXPECT_EQ(back.witness->e1, r.witness->e1);
            EXPECT_EQ(back.witness->e2, r.witness->e2);
            EXPECT_EQ(back.witness->offset, r.witness->offset);
        }
    }
}

TEST(Json, ProblemAndRows) {
    const DeepZeroProblem p{3, {0.5, -0.25}, 48, 20};
    const DeepZeroProblem q = problem_from_json(json::parse(problem_to_json(p).dump()));
    EXPECT_EQ(q.d, p.d);
    EXPECT_EQ(q.beta, p.beta);
    EXPECT_EQ(q.M, p.M);
    EXPECT_EQ(q.guard, p.guard);
    EXPECT_THROW((void)problem_from_json(json{{"d", 1}}), InputError);

    const DeepZeroRow r{p, 0.123456789, "EVIDENCE"};
    const DeepZeroRow back = deep_zero_row_from_json(json::parse(deep_zero_row_to_json(r).dump()));
    EXPECT_EQ(back.sigma_min, r.sigma_min);
    EXPECT_EQ(back.label, r.label);
}

TEST(Json, Signal) {
    const SampledSignal s({-1.0, 0.0, 2.0}, {cplx{1.0}, cplx{0.0, 1.0}, cplx{2.0}});
    const SampledSignal back = signal_from_json(json::parse(signal_to_json(s).dump()));
    EXPECT_EQ(back.grid(), s.grid());
    EXPECT_EQ(back.values(), s.values());
    EXPECT_EQ(back.weights(), s.weights());

    const SampledSignal atom = signal_from_json(json{{"atom", {{"a", 0.5}, {"b", -0.25}}}});
    EXPECT_EQ(atom.size(), kDefaultNodes);
    EXPECT_THROW((void)signal_from_json(json{{"grid", {1.0}}}), InputError);
}

}  // namespace
}  // namespace fockhrt::io
