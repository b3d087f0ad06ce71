// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(zeta_n).
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^{phi(n)-1}, i.e.
 * as polynomials reduced modulo the n-th cyclotomic polynomial. Rationals are
 * GMP mpq values, which are kept in lowest terms with a positive denominator.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fockhrt::exact {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<Integer>;

/**
 * Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d by exact division. The
 * result is memoized; its degree is checked against euler_phi(n).
 */
[[nodiscard]] IntPoly cyclotomic_polynomial(int n);

class CycloElement {
public:
    /// Zero of Q(zeta_n).
    explicit CycloElement(int conductor);

    /// Coefficients in the power basis; length must equal phi(n).
    CycloElement(int conductor, std::vector<Rational> coeffs);

    /// sum_j c_j zeta^j for arbitrary length, reduced modulo Phi_n.
    static CycloElement from_power_sum(int conductor, const std::vector<Rational>& c);
    static CycloElement zeta_power(int conductor, std::int64_t k);
    static CycloElement rational(int conductor, const Rational& q);

    [[nodiscard]] int conductor() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return c_; }
    [[nodiscard]] std::size_t degree() const noexcept { return c_.size(); }

    /// Numerical value with zeta = exp(2 pi i / n).
    [[nodiscard]] std::complex<double> to_complex() const;

    [[nodiscard]] bool is_zero() const;

    /// Returns the rational value when the element lies in Q.
    [[nodiscard]] bool is_rational() const;

    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const Rational& q, const CycloElement& a);

private:
    int n_;
    std::vector<Rational> c_;
};

[[nodiscard]] CycloElement add(const CycloElement& a, const CycloElement& b);
[[nodiscard]] CycloElement mul(const CycloElement& a, const CycloElement& b);
/// Complex conjugation: zeta -> zeta^{n-1}.
[[nodiscard]] CycloElement conj(const CycloElement& a);
[[nodiscard]] bool is_zero(const CycloElement& a);

/// Same element viewed in Q(zeta_m) for m a multiple of its conductor.
[[nodiscard]] CycloElement lift(const CycloElement& a, int m);

/// a conj(b) - conj(a) b, which is zero iff a and b are R-dependent.
[[nodiscard]] CycloElement real_cross(const CycloElement& a, const CycloElement& b);
[[nodiscard]] bool real_independent(const CycloElement& a, const CycloElement& b);

}  // namespace fockhrt::exact
