// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Truncated model of the Fock space F^2 of entire functions.
 *
 * A FockVector stores Taylor coefficients a_0..a_{M-1} at the origin. The
 * inner product is the one induced by the Gaussian measure e^{-|z|^2} dA with
 * dA = dx dy / pi, under which the monomials are orthogonal with
 *
 *     <z^j, z^k> = delta_{jk} j!
 *
 * so that <f, g> = sum_j a_j conj(b_j) j!. Every Gram entry, norm and
 * residual in the library is measured in this weighting. The normalized basis
 * is e_j = z^j / sqrt(j!).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fockhrt {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 64;
inline constexpr double kDefaultGuardFraction = 0.25;
inline constexpr double kDefaultTailTolerance = 1e-10;

class FockVector {
public:
    FockVector() = default;

    /// Zero vector of dimension M.
    explicit FockVector(std::size_t trunc_dim);

    /// Throws InputError on empty input or non-finite entries.
    explicit FockVector(std::vector<cplx> coeffs);

    /// Build from coordinates in the normalized basis e_j.
    static FockVector from_normalized(std::span<const cplx> coords);

    [[nodiscard]] std::size_t trunc_dim() const noexcept { return coeffs_.size(); }
    [[nodiscard]] const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] cplx operator[](std::size_t j) const { return coeffs_.at(j); }

    /// Coordinates c_j = a_j sqrt(j!) in the normalized basis.
    [[nodiscard]] std::vector<cplx> normalized() const;

    /// Copy truncated or zero-padded to dimension M.
    [[nodiscard]] FockVector resized(std::size_t M) const;

    friend FockVector operator+(const FockVector& a, const FockVector& b);
    friend FockVector operator-(const FockVector& a, const FockVector& b);
    friend FockVector operator*(cplx s, const FockVector& a);

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    std::vector<cplx> coeffs_;
};

struct TailReport {
    double total_energy = 0.0;
    double guard_energy = 0.0;
    double guard_fraction = kDefaultGuardFraction;
};

/// sqrt(j!) for j = 0..M-1. Throws arithmetic-overflow once j! leaves the
/// double range in square-root form (j > 300).
[[nodiscard]] std::vector<double> sqrt_factorials(std::size_t M);

/// Fock energy |a_j|^2 j! of a single coefficient, accumulated in log form
/// once j! overflows a double.
[[nodiscard]] double coefficient_energy(cplx a, std::size_t j);

[[nodiscard]] double norm(const FockVector& f);

/// sum_j a_j conj(b_j) j!, zero-padding the shorter argument.
[[nodiscard]] cplx inner(const FockVector& f, const FockVector& g);

/// Horner evaluation of the truncated Taylor series.
[[nodiscard]] cplx evaluate(const FockVector& f, cplx z);

/// e_j = z^j / sqrt(j!) in dimension M.
[[nodiscard]] FockVector basis_vector(std::size_t j, std::size_t M);

[[nodiscard]] TailReport tail_report(const FockVector& f, double guard_fraction);

/// Number of top indices covered by a guard fraction: ceil(fraction * M).
[[nodiscard]] std::size_t guard_count(std::size_t M, double guard_fraction);

struct TailGuard {
    bool enabled = true;
    double guard_fraction = kDefaultGuardFraction;
    double tolerance = kDefaultTailTolerance;
};

/// Throws NeedsLargerTruncation when the guard band carries more than
/// tolerance * total energy.
void require_tail_clean(const FockVector& f, const TailGuard& guard = {});

/// Norm restricted to the first `count` coefficients.
[[nodiscard]] double leading_norm(const FockVector& f, std::size_t count);

}  // namespace fockhrt
