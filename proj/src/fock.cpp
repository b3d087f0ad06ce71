// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fockhrt/error.hpp"

namespace fockhrt {

FockVector::FockVector(std::size_t trunc_dim) : coeffs_(trunc_dim, cplx{}) {
    if (trunc_dim == 0) throw invalid_argument("FockVector: trunc_dim must be positive");
}

FockVector::FockVector(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw invalid_argument("FockVector: empty coefficient list");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!std::isfinite(coeffs_[j].real()) || !std::isfinite(coeffs_[j].imag())) {
            throw invalid_argument("FockVector: non-finite coefficient at index " +
                                   std::to_string(j));
        }
    }
}

FockVector FockVector::from_normalized(std::span<const cplx> coords) {
    const auto s = sqrt_factorials(coords.size());
    std::vector<cplx> a(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) a[j] = coords[j] / s[j];
    return FockVector(std::move(a));
}

std::vector<cplx> FockVector::normalized() const {
    const auto s = sqrt_factorials(coeffs_.size());
    std::vector<cplx> c(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = coeffs_[j] * s[j];
    return c;
}

FockVector FockVector::resized(std::size_t M) const {
    std::vector<cplx> c(M, cplx{});
    std::copy_n(coeffs_.begin(), std::min(M, coeffs_.size()), c.begin());
    return FockVector(std::move(c));
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    const std::size_t M = std::max(a.trunc_dim(), b.trunc_dim());
    FockVector out = a.resized(M);
    for (std::size_t j = 0; j < b.trunc_dim(); ++j) out.coeffs_[j] += b.coeffs_[j];
    return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
    const std::size_t M = std::max(a.trunc_dim(), b.trunc_dim());
    FockVector out = a.resized(M);
    for (std::size_t j = 0; j < b.trunc_dim(); ++j) out.coeffs_[j] -= b.coeffs_[j];
    return out;
}

FockVector operator*(cplx s, const FockVector& a) {
    FockVector out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

std::vector<double> sqrt_factorials(std::size_t M) {
    std::vector<double> s(M);
    double acc = 1.0;
    for (std::size_t j = 0; j < M; ++j) {
        if (j > 0) acc *= std::sqrt(static_cast<double>(j));
        if (!std::isfinite(acc)) {
            throw arithmetic_overflow("sqrt(j!) overflows double at j = " + std::to_string(j));
        }
        s[j] = acc;
    }
    return s;
}

double coefficient_energy(cplx a, std::size_t j) {
    const double mag = std::abs(a);
    if (mag == 0.0) return 0.0;
    const double log_e = 2.0 * std::log(mag) + std::lgamma(static_cast<double>(j) + 1.0);
    const double e = std::exp(log_e);
    if (!std::isfinite(e)) {
        throw arithmetic_overflow("coefficient energy |a_j|^2 j! overflows at j = " +
                                  std::to_string(j));
    }
    return e;
}

namespace {

// Products below this are recomputed in log form to avoid underflow.
constexpr double kSmallestDirect = 1e-280;

// Sum of |a_j|^2 j! over [first, last). Weights are built incrementally and
// the log form takes over only when j! itself leaves the double range.
double energy_range(const std::vector<cplx>& a, std::size_t first, std::size_t last) {
    double weight = 1.0;
    double total = 0.0;
    for (std::size_t j = 0; j < last; ++j) {
        if (j > 0) weight *= static_cast<double>(j);
        if (j < first) continue;
        if (a[j] == cplx{}) continue;
        const double m2 = std::norm(a[j]);
        const double term = (std::isfinite(weight) && m2 >= kSmallestDirect) ? m2 * weight
                                                                             : coefficient_energy(a[j], j);
        total += term;
    }
    if (!std::isfinite(total)) throw arithmetic_overflow("Fock energy overflows double");
    return total;
}

}  // namespace

double norm(const FockVector& f) {
    return std::sqrt(energy_range(f.coeffs(), 0, f.trunc_dim()));
}

double leading_norm(const FockVector& f, std::size_t count) {
    return std::sqrt(energy_range(f.coeffs(), 0, std::min(count, f.trunc_dim())));
}

cplx inner(const FockVector& f, const FockVector& g) {
    const std::size_t n = std::min(f.trunc_dim(), g.trunc_dim());
    double weight = 1.0;
    cplx total{};
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) weight *= static_cast<double>(j);
        const cplx a = f.coeffs()[j];
        const cplx b = g.coeffs()[j];
        if (a == cplx{} || b == cplx{}) continue;
        const cplx p = a * std::conj(b);
        if (std::isfinite(weight) && std::abs(p) >= kSmallestDirect) {
            total += p * weight;
        } else {
            const double scale = std::exp(std::log(std::abs(a)) + std::log(std::abs(b)) +
                                          std::lgamma(static_cast<double>(j) + 1.0));
            if (!std::isfinite(scale)) throw arithmetic_overflow("inner product overflows");
            total += (a / std::abs(a)) * std::conj(b / std::abs(b)) * scale;
        }
    }
    return total;
}

cplx evaluate(const FockVector& f, cplx z) {
    cplx acc{};
    const auto& a = f.coeffs();
    for (std::size_t j = a.size(); j-- > 0;) acc = acc * z + a[j];
    return acc;
}

FockVector basis_vector(std::size_t j, std::size_t M) {
    if (j >= M) {
        throw invalid_argument("basis_vector: index " + std::to_string(j) +
                               " out of range for dimension " + std::to_string(M));
    }
    std::vector<cplx> c(M, cplx{});
    c[j] = 1.0;
    return FockVector::from_normalized(c);
}

std::size_t guard_count(std::size_t M, double guard_fraction) {
    const auto n = static_cast<std::size_t>(std::ceil(guard_fraction * static_cast<double>(M)));
    return std::min(n, M);
}

TailReport tail_report(const FockVector& f, double guard_fraction) {
    if (!(guard_fraction > 0.0 && guard_fraction <= 1.0)) {
        throw invalid_argument("tail_report: guard_fraction must lie in (0, 1]");
    }
    const std::size_t M = f.trunc_dim();
    const std::size_t first = M - guard_count(M, guard_fraction);
    TailReport r;
    r.guard_fraction = guard_fraction;
    r.total_energy = energy_range(f.coeffs(), 0, M);
    r.guard_energy = std::min(energy_range(f.coeffs(), first, M), r.total_energy);
    return r;
}

void require_tail_clean(const FockVector& f, const TailGuard& guard) {
    if (!guard.enabled) return;
    const TailReport r = tail_report(f, guard.guard_fraction);
    if (r.guard_energy > guard.tolerance * r.total_energy) {
        const double ratio = r.guard_energy / r.total_energy;
        throw NeedsLargerTruncation(
            "vector carries " + std::to_string(ratio) +
                " of its energy in the truncation guard band; increase M",
            ratio);
    }
}

}  // namespace fockhrt
