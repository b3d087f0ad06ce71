// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace fockhrt {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/**
 * Gauss-Legendre nodes and weights on [lo, hi].
 *
 * Roots of P_n are refined by Newton's method on the three-term recurrence,
 * starting from the usual cosine guesses; only half the roots are computed
 * and the rest mirrored, so the rule is exactly symmetric about (lo+hi)/2.
 */
[[nodiscard]] QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);

/// Trapezoidal weights for an arbitrary strictly increasing grid.
[[nodiscard]] std::vector<double> trapezoid_weights(const std::vector<double>& grid);

/// int_{|z| <= radius} h(z) e^{-|z|^2} dA(z): Gauss-Legendre in r, periodic
/// trapezoid in the angle.
[[nodiscard]] std::complex<double> gaussian_disc_integral(
    const std::function<std::complex<double>(std::complex<double>)>& h, double radius,
    std::size_t radial_nodes = 200, std::size_t angular_nodes = 128);

}  // namespace fockhrt
