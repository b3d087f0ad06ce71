// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockhrt/exact/lattice.hpp"

namespace fockhrt {

/// d-th roots of unity on the unit circle, with the lines of the witness
/// lattice drawn when `lattice` is embeddable.
[[nodiscard]] std::string roots_figure_svg(int d, const exact::MembershipResult& lattice);

/// Polyline per series of (M, sigma_min) points, log-scaled vertical axis.
struct SigmaSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};
[[nodiscard]] std::string sigma_curve_svg(const std::vector<SigmaSeries>& series);

}  // namespace fockhrt
