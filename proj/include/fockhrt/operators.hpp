// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file operators.hpp
 * @brief Weyl operators, rotations and residue-class projections on F^2.
 *
 * The Weyl operator is U_a f(z) = exp(-|a|^2/2 - conj(a) z) f(z + a). Its
 * matrix in the normalized basis e_j is built by power-series composition:
 * (z + a)^m is expanded binomially, multiplied by the series of
 * exp(-conj(a) z), scaled by exp(-|a|^2/2) and rescaled to e_j coordinates.
 * Every entry of the M x M block is an exact matrix element of the unbounded
 * operator; truncation only shows up as mass that column m sends to rows
 * n >= M. That mass is measured directly from extra rows and is what the
 * guard checks use.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockhrt/fock.hpp"

namespace fockhrt {

/// Primitive d-th root of unity exp(2 pi i / d) with a cached power table.
class RootOfUnity {
public:
    explicit RootOfUnity(int d);

    [[nodiscard]] int order() const noexcept { return d_; }
    [[nodiscard]] cplx value() const noexcept { return powers_.size() > 1 ? powers_[1] : cplx{1.0}; }

    /// omega^k for any integer k, reduced modulo d.
    [[nodiscard]] cplx power(long long k) const;

private:
    int d_;
    std::vector<cplx> powers_;
};

struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    std::size_t guard_band = 0;
    std::string label;
    /// Per column: energy sum_{n >= M} |<U e_m, e_n>|^2 lost to truncation.
    /// Empty for operators that do not leak (rotations, projections).
    std::vector<double> column_leakage;

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries.rows());
    }
    [[nodiscard]] std::size_t interior() const noexcept { return dim() - guard_band; }
};

[[nodiscard]] inline std::size_t default_guard(std::size_t M) { return M / 4; }

struct WeylOptions {
    bool check_guard = true;
    /// Largest admissible deviation 1 - ||U e_m|| over interior columns.
    double column_tolerance = 1e-6;
};

[[nodiscard]] OperatorMatrix weyl_matrix(cplx alpha, std::size_t M, std::size_t guard,
                                         const WeylOptions& options = {});

/// Smallest guard band for which weyl_matrix(alpha, M, g) passes its column
/// check at `column_tolerance`. Returns M when not even column 0 passes.
[[nodiscard]] std::size_t minimal_guard(cplx alpha, std::size_t M,
                                        double column_tolerance = 1e-6);

struct ApplyOptions {
    TailGuard tail{};
    /// Upper bound allowed on ||truncated U f - true U f|| / ||f||.
    double truncation_tolerance = 1e-9;
};

/// U_alpha f on the same truncation. Throws NeedsLargerTruncation when the
/// rigorous truncation-error bound exceeds options.truncation_tolerance.
[[nodiscard]] FockVector apply_weyl(cplx alpha, const FockVector& f,
                                    const ApplyOptions& options = {});

/// f(omega^m z): coefficient j is multiplied by omega^{j m}.
[[nodiscard]] FockVector rotation_apply(const RootOfUnity& w, long long m, const FockVector& f);

/// Keeps the coefficients with index congruent to k modulo d.
[[nodiscard]] FockVector project(int k, int d, const FockVector& f);

/// (1/d) sum_m omega^{-k m} f(omega^m z).
[[nodiscard]] FockVector project_via_filter(int k, int d, const FockVector& f);

/// Interior norm of C U_beta f - U_{beta/omega} C f where C f(z) = f(omega z).
[[nodiscard]] double commutation_residual(int d, cplx beta, const FockVector& f,
                                          std::size_t guard, const ApplyOptions& options = {});
[[nodiscard]] double commutation_residual(int d, cplx beta, const FockVector& f);

}  // namespace fockhrt
