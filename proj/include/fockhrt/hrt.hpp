// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hrt.hpp
 * @brief Gram-matrix certificates of linear independence for finite sets of
 * Weyl translates U_{lambda_k} w, and a classifier for configurations whose
 * independence is already known.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockhrt/exact/cyclotomic.hpp"
#include "fockhrt/fock.hpp"

namespace fockhrt {

inline constexpr double kDistinctnessTolerance = 1e-12;
inline constexpr double kCollinearityTolerance = 1e-10;

struct PointConfig {
    std::vector<cplx> points;
    std::optional<std::vector<exact::CycloElement>> exact;

    /// Throws precondition-violation for coincident points and
    /// invalid-argument for malformed exact forms.
    void validate() const;
};

enum class Verdict { Independent, Inconclusive };
enum class KnownCase { SmallN, ParallelPairs, RegularLattice, Unknown };

[[nodiscard]] std::string to_string(Verdict v);
[[nodiscard]] std::string to_string(KnownCase k);
[[nodiscard]] Verdict verdict_from_string(const std::string& s);

struct Certificate {
    Eigen::MatrixXcd gram;
    double min_eigenvalue = 0.0;
    double condition_number = 0.0;
    /// Bound on Gram-entry perturbation caused by truncation.
    double tail_slack = 0.0;
    std::optional<Verdict> verdict;
};

/// The constant function 1 of dimension M (image of the normalized Gaussian).
[[nodiscard]] FockVector gaussian_window(std::size_t M);

[[nodiscard]] Certificate gram_matrix(const PointConfig& config, const FockVector& window,
                                      std::size_t M);

/// Gram matrix plus smallest eigenvalue; never concludes dependence.
[[nodiscard]] Certificate certify_independence(const PointConfig& config,
                                               const FockVector& window, std::size_t M);

/// First applicable of: N <= 3, two pairs on distinct parallel lines,
/// translate of a regular lattice (exact forms only).
[[nodiscard]] KnownCase classify_known_case(const PointConfig& config);

/// beta * omega^k, k = 0..d-1. Exact forms are attached when beta is given
/// exactly (beta = 1 by default).
[[nodiscard]] PointConfig roots_config(int d, cplx beta = {1.0, 0.0});
[[nodiscard]] PointConfig roots_config(int d, const exact::CycloElement& beta);

/// Cases backed by a proof are labelled PROVEN-CASE, all others EVIDENCE.
[[nodiscard]] std::string evidence_label(const PointConfig& config);

}  // namespace fockhrt
