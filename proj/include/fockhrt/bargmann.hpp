// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bargmann.hpp
 * @brief Bargmann transform from L^2(R) into F^2 and the time-frequency
 *        to Fock point map.
 *
 * The transform uses the kernel
 *
 *     (B g)(z) = (2 pi)^{-1/4} int exp(-i z x + z^2/2 - x^2/4) g(x) dx.
 *
 * Under this kernel the time-frequency shift g_{a,b}(x) = e^{2 pi i b x}
 * g(x - a) corresponds to e^{i pi a b} U_lambda with lambda = -2 pi b - i a/2.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "fockhrt/fock.hpp"
#include "fockhrt/quadrature.hpp"

namespace fockhrt {

struct TimeFrequencyAtom {
    double a = 0.0;  ///< time shift
    double b = 0.0;  ///< frequency shift
};

inline constexpr double kDefaultHalfWidth = 12.0;
inline constexpr std::size_t kDefaultNodes = 400;

/// Samples of g on quadrature nodes; integrals are sum_i weights[i] * (...).
class SampledSignal {
public:
    SampledSignal(std::vector<double> grid, std::vector<cplx> values, std::vector<double> weights);

    /// Trapezoidal weights are derived from the grid.
    SampledSignal(std::vector<double> grid, std::vector<cplx> values);

    /// Sample g on a quadrature rule.
    static SampledSignal sample(const QuadratureRule& rule, const std::function<cplx(double)>& g);

    [[nodiscard]] const std::vector<double>& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<cplx>& values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t size() const noexcept { return grid_.size(); }

private:
    void validate() const;

    std::vector<double> grid_;
    std::vector<cplx> values_;
    std::vector<double> weights_;
};

/// Gauss-Legendre on [-12, 12] with 400 nodes.
[[nodiscard]] const QuadratureRule& default_rule();

/// (2 pi)^{-1/4} e^{-x^2/4}: unit L^2 norm, Bargmann image identically 1.
[[nodiscard]] cplx normalized_gaussian(double x);

/// e^{2 pi i b x} g(x - a) sampled on `rule`.
[[nodiscard]] SampledSignal atom_signal(const TimeFrequencyAtom& atom,
                                        const std::function<cplx(double)>& g,
                                        const QuadratureRule& rule = default_rule());

[[nodiscard]] cplx tf_to_fock_point(const TimeFrequencyAtom& atom);

/// e^{i pi a b}.
[[nodiscard]] cplx tf_phase(const TimeFrequencyAtom& atom);

/// Throws insufficient-grid when the integrand at either end of the grid is
/// not below 1e-14 of its peak.
[[nodiscard]] cplx bargmann_point(const SampledSignal& signal, cplx z);

struct CoefficientOptions {
    double radius = 1.0;
    /// Absolute per-coefficient change allowed between N and 2N samples.
    double aliasing_tolerance = 1e-8;
};

/// Taylor coefficients of B g by contour averaging over N = 4M points on
/// |z| = radius, cross-checked against 2N points.
[[nodiscard]] FockVector bargmann_coefficients(const SampledSignal& signal, std::size_t M,
                                               const CoefficientOptions& options = {});

/// True iff the images of three collinear atoms are collinear in C.
[[nodiscard]] bool map_preserves_lines(const TimeFrequencyAtom& p, const TimeFrequencyAtom& q,
                                       const TimeFrequencyAtom& r);

/// L^2 inner product sum_i w_i f_i conj(g_i); both signals share one grid.
[[nodiscard]] cplx l2_inner(const SampledSignal& f, const SampledSignal& g);

/**
 * First K Hermite-type modes on `rule`. Mode 0 is the normalized Gaussian;
 * mode n is Gram-Schmidt of x^n h_0 against modes < n in the quadrature
 * L^2 inner product, with positive leading coefficient. No textbook Hermite
 * normalization is assumed; the correspondence with e_n is left to be
 * observed through the transform.
 */
[[nodiscard]] std::vector<SampledSignal> hermite_modes(std::size_t K,
                                                       const QuadratureRule& rule = default_rule());

}  // namespace fockhrt
