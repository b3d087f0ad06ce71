// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fockhrt/error.hpp"

namespace fockhrt {

QuadratureRule gauss_legendre(std::size_t n, double lo, double hi) {
    if (n < 2) throw invalid_argument("gauss_legendre: need at least 2 nodes");
    if (!(hi > lo)) throw invalid_argument("gauss_legendre: empty interval");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const std::size_t roots = (n + 1) / 2;

    for (std::size_t i = 0; i < roots; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(j) + 1.0) * x * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-16) break;
        }
        const double w = 2.0 * half / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = mid;
    return rule;
}

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
    const std::size_t n = grid.size();
    if (n < 2) throw invalid_argument("trapezoid_weights: need at least 2 nodes");
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = grid[i + 1] - grid[i];
        if (!(h > 0.0)) throw invalid_argument("trapezoid_weights: grid must be strictly increasing");
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
    }
    return w;
}

}  // namespace fockhrt

namespace fockhrt {

std::complex<double> gaussian_disc_integral(
    const std::function<std::complex<double>(std::complex<double>)>& h, double radius,
    std::size_t radial_nodes, std::size_t angular_nodes) {
    if (!(radius > 0.0) || angular_nodes == 0) {
        throw invalid_argument("gaussian_disc_integral: need radius > 0 and angular nodes");
    }
    const QuadratureRule rule = gauss_legendre(radial_nodes, 0.0, radius);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angular_nodes);
    std::complex<double> total(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        std::complex<double> ring(0.0, 0.0);
        for (std::size_t t = 0; t < angular_nodes; ++t) {
            ring += h(std::polar(r, dtheta * static_cast<double>(t)));
        }
        total += rule.weights[i] * r * std::exp(-r * r) * ring * dtheta;
    }
    return total;
}

}  // namespace fockhrt
