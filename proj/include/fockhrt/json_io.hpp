// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file json_io.hpp
 * @brief JSON encodings of the engine types.
 *
 * Complex numbers are [re, im]; rationals are [num, den] with integers that
 * fall back to decimal strings beyond 64 bits. Every writer has a reader that
 * reconstructs the original value.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fockhrt/bargmann.hpp"
#include "fockhrt/deepzero.hpp"
#include "fockhrt/exact/lattice.hpp"
#include "fockhrt/hrt.hpp"

namespace fockhrt::io {

using json = nlohmann::json;

[[nodiscard]] json complex_to_json(cplx z);
[[nodiscard]] cplx complex_from_json(const json& j);

[[nodiscard]] json rational_to_json(const exact::Rational& q);
[[nodiscard]] exact::Rational rational_from_json(const json& j);

[[nodiscard]] json integer_to_json(const exact::Integer& z);
[[nodiscard]] exact::Integer integer_from_json(const json& j);

/// {conductor, coeffs: [[num, den], ...]}
[[nodiscard]] json cyclo_to_json(const exact::CycloElement& e);
[[nodiscard]] exact::CycloElement cyclo_from_json(const json& j);

[[nodiscard]] json fock_to_json(const FockVector& f);
[[nodiscard]] FockVector fock_from_json(const json& j);

/// Input of hrt-check.
struct HrtInput {
    PointConfig config;
    FockVector window;
    std::size_t M = kDefaultTruncation;
};

/// {points: [[re,im],...], exact?: {conductor, coeffs: [[[num,den],...] per point]},
///  window: "gaussian" | [[re,im],...], M}
[[nodiscard]] json hrt_input_to_json(const HrtInput& in);
[[nodiscard]] HrtInput hrt_input_from_json(const json& j);

[[nodiscard]] json certificate_to_json(const Certificate& c);
[[nodiscard]] Certificate certificate_from_json(const json& j);

[[nodiscard]] json membership_to_json(const exact::MembershipResult& r);
[[nodiscard]] exact::MembershipResult membership_from_json(const json& j);

/// {d, beta: [re, im], M, guard}
[[nodiscard]] json problem_to_json(const DeepZeroProblem& p);
[[nodiscard]] DeepZeroProblem problem_from_json(const json& j);

struct DeepZeroRow {
    DeepZeroProblem problem;
    double sigma_min = 0.0;
    std::string label;
};

[[nodiscard]] json deep_zero_row_to_json(const DeepZeroRow& r);
[[nodiscard]] DeepZeroRow deep_zero_row_from_json(const json& j);

/// {grid: [...], values: [[re,im],...], weights?: [...]}
/// or {atom: {a, b}} sampling the time-frequency shifted Gaussian.
[[nodiscard]] json signal_to_json(const SampledSignal& s);
[[nodiscard]] SampledSignal signal_from_json(const json& j);

}  // namespace fockhrt::io
