// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file deepzero.hpp
 * @brief Deep-zero constraint systems: f has vanishing Taylor coefficients on
 * E_0 = {dj} and U_beta f has vanishing coefficients on E_k = {k + dj},
 * k = 1..d-1.
 *
 * Rows act on normalized coordinates c_j = a_j sqrt(j!). Vanishing of
 * f^{(j)}(0) = j! a_j is equivalent to vanishing of c_j, so the kernel is
 * unchanged by the choice of coordinates.
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockhrt/fock.hpp"

namespace fockhrt {

struct DeepZeroProblem {
    int d = 2;
    cplx beta{1.0, 0.0};
    std::size_t M = kDefaultTruncation;
    std::size_t guard = 0;

    void validate() const;

    /// Guard = max(M/4, smallest guard at which the Weyl matrix of beta
    /// passes its column check).
    static DeepZeroProblem with_default_guard(int d, cplx beta, std::size_t M);
};

[[nodiscard]] std::size_t deep_zero_default_guard(cplx beta, std::size_t M);

struct RowLabel {
    int residue_class = 0;
    /// "identity" for selectors on E_0, "weyl" for rows of U_beta.
    std::string op;
    std::size_t index = 0;
};

struct ConstraintSystem {
    Eigen::MatrixXcd rows;
    std::vector<RowLabel> row_labels;
};

/// E_k intersected with [0, M), k = 0..d-1.
[[nodiscard]] std::vector<std::vector<std::size_t>> residue_classes(int d, std::size_t M);

[[nodiscard]] ConstraintSystem assemble_constraints(const DeepZeroProblem& p);

/// Class k uses U_{betas[k]}; a zero entry gives identity selectors. This
/// general form has no contract beyond its construction.
[[nodiscard]] ConstraintSystem assemble_constraints(int d, const std::vector<cplx>& betas,
                                                    std::size_t M, std::size_t guard);

/// Smallest singular value of the columns < M - guard.
[[nodiscard]] double min_singular_value(const ConstraintSystem& s, std::size_t guard);

/// Interior norm of P_0 U_{-beta} h - (1/d) sum_m U_{-beta omega^{-m}} h
/// for h supported on E_0.
[[nodiscard]] double reduction_identity_residual(int d, cplx beta, const FockVector& h,
                                                 std::size_t guard);
[[nodiscard]] double reduction_identity_residual(int d, cplx beta, const FockVector& h);

/// max over samples of |sum_{m<d} f(omega^m z)|.
[[nodiscard]] double filter_sum_residual(const FockVector& f, int d, std::span<const cplx> samples);

/// U_beta f(z) = exp(-|beta|^2/2 - conj(beta) z) f(z + beta) on the
/// truncated series.
[[nodiscard]] cplx weyl_evaluate(cplx beta, const FockVector& f, cplx z);

struct FunctionalEquationReport {
    double filter_residual = 0.0;
    std::optional<double> weyl_residual;
};

/// d = 4: max |f(z) + f(iz) + f(-z) + f(-iz)| and, given beta,
/// max |U_beta f(iz) - U_beta f(z)|.
[[nodiscard]] FunctionalEquationReport functional_equation_check(
    const FockVector& f, std::span<const cplx> samples, std::optional<cplx> beta = std::nullopt);

/// "EVIDENCE" for d in {2, 3, 4, 6}, "EXPLORATORY" otherwise.
[[nodiscard]] std::string deep_zero_label(int d);

}  // namespace fockhrt
