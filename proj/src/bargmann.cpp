// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fockhrt/error.hpp"

namespace fockhrt {

namespace {
constexpr double kEndpointDecay = 1e-14;
constexpr cplx kI{0.0, 1.0};
}  // namespace

SampledSignal::SampledSignal(std::vector<double> grid, std::vector<cplx> values,
                             std::vector<double> weights)
    : grid_(std::move(grid)), values_(std::move(values)), weights_(std::move(weights)) {
    validate();
}

SampledSignal::SampledSignal(std::vector<double> grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size()) {
        throw invalid_argument("SampledSignal: grid and values differ in length");
    }
    weights_ = trapezoid_weights(grid_);
    validate();
}

SampledSignal SampledSignal::sample(const QuadratureRule& rule, const std::function<cplx(double)>& g) {
    std::vector<cplx> values(rule.nodes.size());
    std::transform(rule.nodes.begin(), rule.nodes.end(), values.begin(), g);
    return SampledSignal(rule.nodes, std::move(values), rule.weights);
}

void SampledSignal::validate() const {
    if (grid_.size() < 2) throw invalid_argument("SampledSignal: need at least 2 nodes");
    if (grid_.size() != values_.size() || grid_.size() != weights_.size()) {
        throw invalid_argument("SampledSignal: grid, values and weights must have equal length");
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (!std::isfinite(grid_[i]) || !std::isfinite(values_[i].real()) ||
            !std::isfinite(values_[i].imag())) {
            throw invalid_argument("SampledSignal: non-finite sample at node " + std::to_string(i));
        }
        if (i > 0 && !(grid_[i] > grid_[i - 1])) {
            throw invalid_argument("SampledSignal: grid must be strictly increasing");
        }
        if (!(weights_[i] > 0.0)) throw invalid_argument("SampledSignal: weights must be positive");
    }
}

const QuadratureRule& default_rule() {
    static const QuadratureRule rule = gauss_legendre(kDefaultNodes, -kDefaultHalfWidth, kDefaultHalfWidth);
    return rule;
}

cplx normalized_gaussian(double x) {
    return std::pow(2.0 * std::numbers::pi, -0.25) * std::exp(-0.25 * x * x);
}

SampledSignal atom_signal(const TimeFrequencyAtom& atom, const std::function<cplx(double)>& g,
                          const QuadratureRule& rule) {
    return SampledSignal::sample(rule, [&](double x) {
        return std::polar(1.0, 2.0 * std::numbers::pi * atom.b * x) * g(x - atom.a);
    });
}

cplx tf_to_fock_point(const TimeFrequencyAtom& atom) {
    return {-2.0 * std::numbers::pi * atom.b, -0.5 * atom.a};
}

cplx tf_phase(const TimeFrequencyAtom& atom) {
    return std::polar(1.0, std::numbers::pi * atom.a * atom.b);
}

cplx bargmann_point(const SampledSignal& signal, cplx z) {
    const auto& x = signal.grid();
    const auto& g = signal.values();
    const auto& w = signal.weights();
    const std::size_t n = x.size();

    std::vector<cplx> integrand(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        integrand[i] = std::exp(-kI * z * x[i] + 0.5 * z * z - 0.25 * x[i] * x[i]) * g[i];
        peak = std::max(peak, std::abs(integrand[i]));
    }
    if (peak == 0.0) return {};
    const double ends = std::max(std::abs(integrand.front()), std::abs(integrand.back()));
    if (ends > kEndpointDecay * peak) {
        throw insufficient_grid("bargmann_point: integrand at grid ends is " +
                                std::to_string(ends / peak) + " of its peak; widen the grid");
    }
    cplx sum{};
    for (std::size_t i = 0; i < n; ++i) sum += w[i] * integrand[i];
    return std::pow(2.0 * std::numbers::pi, -0.25) * sum;
}

namespace {

std::vector<cplx> contour_coefficients(const SampledSignal& signal, std::size_t M, std::size_t N,
                                       double radius) {
    std::vector<cplx> samples(N);
    for (std::size_t k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N);
        samples[k] = bargmann_point(signal, std::polar(radius, theta));
    }
    std::vector<cplx> a(M);
    for (std::size_t j = 0; j < M; ++j) {
        cplx acc{};
        for (std::size_t k = 0; k < N; ++k) {
            const std::size_t phase_index = (j * k) % N;
            const double theta = -2.0 * std::numbers::pi * static_cast<double>(phase_index) / static_cast<double>(N);
            acc += samples[k] * std::polar(1.0, theta);
        }
        a[j] = acc / (static_cast<double>(N) * std::pow(radius, static_cast<double>(j)));
    }
    return a;
}

}  // namespace

FockVector bargmann_coefficients(const SampledSignal& signal, std::size_t M, const CoefficientOptions& options) {
    if (M == 0) throw invalid_argument("bargmann_coefficients: M must be positive");
    if (!(options.radius > 0.0)) throw invalid_argument("bargmann_coefficients: radius must be positive");
    const std::size_t N = 4 * M;
    const auto coarse = contour_coefficients(signal, M, N, options.radius);
    auto fine = contour_coefficients(signal, M, 2 * N, options.radius);
    double worst = 0.0;
    for (std::size_t j = 0; j < M; ++j) worst = std::max(worst, std::abs(fine[j] - coarse[j]));
    if (worst > options.aliasing_tolerance) {
        throw aliasing_not_converged("bargmann_coefficients: coefficients moved by " + std::to_string(worst) +
                                     " when doubling the contour samples");
    }
    return FockVector(std::move(fine));
}

bool map_preserves_lines(const TimeFrequencyAtom& p, const TimeFrequencyAtom& q, const TimeFrequencyAtom& r) {
    auto same = [](const TimeFrequencyAtom& u, const TimeFrequencyAtom& v) { return u.a == v.a && u.b == v.b; };
    if (same(p, q) || same(q, r) || same(p, r)) {
        throw InputError("degenerate-input", "map_preserves_lines: points must be distinct");
    }
    const cplx lp = tf_to_fock_point(p);
    const cplx u = tf_to_fock_point(q) - lp;
    const cplx v = tf_to_fock_point(r) - lp;
    const double cross = (u * std::conj(v)).imag();
    return std::abs(cross) <= 1e-12 * std::max(1.0, std::abs(u) * std::abs(v));
}

cplx l2_inner(const SampledSignal& f, const SampledSignal& g) {
    if (f.grid() != g.grid()) throw invalid_argument("l2_inner: signals live on different grids");
    cplx acc{};
    for (std::size_t i = 0; i < f.size(); ++i) acc += f.weights()[i] * f.values()[i] * std::conj(g.values()[i]);
    return acc;
}

std::vector<SampledSignal> hermite_modes(std::size_t K, const QuadratureRule& rule) {
    std::vector<SampledSignal> modes;
    modes.reserve(K);
    for (std::size_t n = 0; n < K; ++n) {
        auto candidate = SampledSignal::sample(rule, [n](double x) {
            return std::pow(x, static_cast<double>(n)) * normalized_gaussian(x);
        });
        std::vector<cplx> v = candidate.values();
        // Modified Gram-Schmidt, run twice for numerical orthogonality.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : modes) {
                const SampledSignal current(rule.nodes, v, rule.weights);
                const cplx c = l2_inner(current, e);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * e.values()[i];
            }
        }
        const double nrm = std::sqrt(l2_inner(SampledSignal(rule.nodes, v, rule.weights),
                                              SampledSignal(rule.nodes, v, rule.weights)).real());
        for (auto& x : v) x /= nrm;
        modes.emplace_back(rule.nodes, std::move(v), rule.weights);
    }
    return modes;
}

}  // namespace fockhrt
