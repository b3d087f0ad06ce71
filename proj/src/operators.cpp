// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/operators.hpp"

#include <cmath>
#include <limits>

#include <quadmath.h>
#include <numbers>
#include <string>

#include "fockhrt/error.hpp"

namespace fockhrt {

namespace {

using lcplx = std::complex<long double>;

// Quad-precision complex used inside the series composition. The
// binomial/exponential convolution cancels heavily once |alpha|^2 and m grow
// (terms reach 1e8 times the result at M = 96, |alpha| = 2), which long
// double cannot absorb.
struct QComplex {
    __float128 re = 0, im = 0;
    QComplex() = default;
    QComplex(__float128 r, __float128 i = 0) : re(r), im(i) {}
    QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator*(const QComplex& a, __float128 s) { return {a.re * s, a.im * s}; }
    friend QComplex operator/(const QComplex& a, __float128 s) { return {a.re / s, a.im / s}; }
    [[nodiscard]] __float128 norm() const { return re * re + im * im; }
};

// Relative energy below which trailing coefficients of an input vector are
// not propagated through the Weyl matrix; their contribution is still charged
// to the truncation bound.
constexpr double kNegligibleTailEnergy = 1e-32;

// Mass of a column that is missing even from the extended rows is only
// trusted above rounding level.
constexpr long double kUnresolvedFloor = 1e-12L;

struct WeylBlock {
    Eigen::MatrixXcd top;             // M x ncols
    Eigen::MatrixXcd below;           // rows M .. R-1
    std::vector<double> leakage;      // per column, energy in rows >= M
    std::vector<double> unresolved;   // per column, energy beyond row R
};

// Rows needed so that columns < ncols have decayed: a displaced e_m lives
// near radius sqrt(m) + |alpha| in phase space.
std::size_t row_extent(double abs_alpha, std::size_t M, std::size_t ncols) {
    const double reach = std::sqrt(static_cast<double>(ncols)) + abs_alpha;
    const auto rows = static_cast<std::size_t>(std::ceil(reach * reach + 12.0 * reach + 20.0));
    return std::max(M + 16, rows);
}

WeylBlock weyl_block(cplx alpha, std::size_t M, std::size_t ncols) {
    WeylBlock out;
    out.top = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(ncols));
    out.leakage.assign(ncols, 0.0);
    out.unresolved.assign(ncols, 0.0);
    if (alpha == cplx{}) {
        for (std::size_t m = 0; m < ncols; ++m) out.top(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) = 1.0;
        return out;
    }

    const std::size_t R = row_extent(std::abs(alpha), M, ncols);
    out.below = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(R - M), static_cast<Eigen::Index>(ncols));

    // Both precisions share the same three ingredients: sqrt(n!), the series
    // of exp(-conj(a) z) and the powers of a.
    const QComplex qa(alpha.real(), alpha.imag());
    const QComplex q_minus_abar(-alpha.real(), alpha.imag());
    const lcplx la(alpha.real(), alpha.imag());
    const lcplx l_minus_abar(-alpha.real(), alpha.imag());

    std::vector<__float128> q_sqrt_fact(R);
    std::vector<long double> l_sqrt_fact(R);
    q_sqrt_fact[0] = 1;
    l_sqrt_fact[0] = 1.0L;
    for (std::size_t j = 1; j < R; ++j) {
        q_sqrt_fact[j] = q_sqrt_fact[j - 1] * sqrtq(static_cast<__float128>(j));
        l_sqrt_fact[j] = l_sqrt_fact[j - 1] * std::sqrt(static_cast<long double>(j));
    }

    std::vector<QComplex> q_exp(R);
    std::vector<lcplx> l_exp(R);
    q_exp[0] = 1;
    l_exp[0] = 1.0L;
    for (std::size_t j = 1; j < R; ++j) {
        q_exp[j] = q_exp[j - 1] * q_minus_abar / static_cast<__float128>(j);
        l_exp[j] = l_exp[j - 1] * l_minus_abar / static_cast<long double>(j);
    }

    std::vector<QComplex> q_apow(ncols + 1);
    std::vector<lcplx> l_apow(ncols + 1);
    q_apow[0] = 1;
    l_apow[0] = 1.0L;
    for (std::size_t j = 1; j <= ncols; ++j) {
        q_apow[j] = q_apow[j - 1] * qa;
        l_apow[j] = l_apow[j - 1] * la;
    }

    const __float128 q_prefactor = expq(-qa.norm() / 2);
    const long double l_prefactor = std::exp(-0.5L * std::norm(la));

    std::vector<QComplex> q_poly;
    std::vector<lcplx> l_poly;
    for (std::size_t m = 0; m < ncols; ++m) {
        // (z + a)^m = sum_k C(m,k) a^{m-k} z^k
        q_poly.assign(m + 1, QComplex{});
        l_poly.assign(m + 1, lcplx{});
        __float128 binom = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            q_poly[k] = q_apow[m - k] * binom;
            l_poly[k] = static_cast<long double>(binom) * l_apow[m - k];
            binom = binom * static_cast<__float128>(m - k) / static_cast<__float128>(k + 1);
        }

        long double tail = 0.0L;
        long double total = 0.0L;
        for (std::size_t n = 0; n < R; ++n) {
            const std::size_t kmax = std::min(m, n);
            const long double l_scale = l_prefactor * l_sqrt_fact[n] / l_sqrt_fact[m];
            lcplx s{};
            long double magnitude = 0.0L;
            for (std::size_t k = 0; k <= kmax; ++k) {
                const lcplx t = l_poly[k] * l_exp[n - k];
                s += t;
                magnitude += std::abs(t);
            }
            lcplx entry = s * l_scale;
            // Rounding of the long double convolution is bounded by
            // (terms + 2) * eps * sum |terms|; redo in quad when that could
            // reach the last bits of a double entry.
            const long double bound = static_cast<long double>(kmax + 3) *
                                      std::numeric_limits<long double>::epsilon() * magnitude * l_scale;
            if (bound > 1e-17L) {
                QComplex qs;
                for (std::size_t k = 0; k <= kmax; ++k) qs += q_poly[k] * q_exp[n - k];
                const QComplex qe = qs * (q_prefactor * q_sqrt_fact[n] / q_sqrt_fact[m]);
                entry = lcplx(static_cast<long double>(qe.re), static_cast<long double>(qe.im));
            }
            const cplx e(static_cast<double>(entry.real()), static_cast<double>(entry.imag()));
            if (n < M) {
                out.top(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m)) = e;
            } else {
                out.below(static_cast<Eigen::Index>(n - M), static_cast<Eigen::Index>(m)) = e;
                tail += std::norm(entry);
            }
            total += std::norm(entry);
        }
        const long double unresolved = 1.0L - total;
        if (unresolved > kUnresolvedFloor) {
            tail += unresolved;
            out.unresolved[m] = static_cast<double>(unresolved);
        }
        out.leakage[m] = static_cast<double>(tail);
    }
    return out;
}

double norm_deviation(double leakage) {
    // 1 - sqrt(1 - t), evaluated without cancellation.
    const double t = std::min(std::max(leakage, 0.0), 1.0);
    return t / (1.0 + std::sqrt(1.0 - t));
}

}  // namespace

RootOfUnity::RootOfUnity(int d) : d_(d) {
    if (d < 1) throw invalid_argument("RootOfUnity: order must be >= 1, got " + std::to_string(d));
    const cplx base = std::polar(1.0, 2.0 * std::numbers::pi / d);
    powers_.resize(static_cast<std::size_t>(d));
    powers_[0] = 1.0;
    for (int r = 1; r < d; ++r) {
        powers_[r] = powers_[r - 1] * base;
        if (r % 64 == 0) powers_[r] /= std::abs(powers_[r]);
        // Quarter turns are exact.
        if ((4LL * r) % d == 0) {
            static const cplx kQuarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
            powers_[r] = kQuarter[(4LL * r) / d];
        }
    }
}

cplx RootOfUnity::power(long long k) const {
    long long r = k % d_;
    if (r < 0) r += d_;
    return powers_[static_cast<std::size_t>(r)];
}

OperatorMatrix weyl_matrix(cplx alpha, std::size_t M, std::size_t guard, const WeylOptions& options) {
    if (M < 4) throw invalid_argument("weyl_matrix: M must be >= 4");
    if (guard >= M) throw invalid_argument("weyl_matrix: guard band must be < M");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw invalid_argument("weyl_matrix: non-finite displacement");
    }

    WeylBlock block = weyl_block(alpha, M, M);
    OperatorMatrix U;
    U.entries = std::move(block.top);
    U.guard_band = guard;
    U.column_leakage = std::move(block.leakage);
    U.label = "weyl(" + std::to_string(alpha.real()) + "," + std::to_string(alpha.imag()) +
              ") M=" + std::to_string(M);

    if (options.check_guard) {
        double worst = 0.0;
        for (std::size_t m = 0; m < M - guard; ++m) worst = std::max(worst, norm_deviation(U.column_leakage[m]));
        if (worst > options.column_tolerance) {
            throw NeedsLargerTruncation("weyl_matrix: interior column norm deviates from 1 by " +
                                            std::to_string(worst) + "; increase M or the guard band",
                                        worst);
        }
    }
    return U;
}

std::size_t minimal_guard(cplx alpha, std::size_t M, double column_tolerance) {
    const OperatorMatrix U = weyl_matrix(alpha, M, 0, {.check_guard = false});
    for (std::size_t m = 0; m < M; ++m) {
        if (norm_deviation(U.column_leakage[m]) > column_tolerance) return M - m;
    }
    return 0;
}

FockVector apply_weyl(cplx alpha, const FockVector& f, const ApplyOptions& options) {
    require_tail_clean(f, options.tail);
    if (alpha == cplx{}) return f;

    const std::size_t M = f.trunc_dim();
    if (M < 4) throw invalid_argument("apply_weyl: M must be >= 4");
    const std::vector<cplx> c = f.normalized();

    double total = 0.0;
    for (const auto& x : c) total += std::norm(x);
    if (total == 0.0) return f;

    std::size_t support = M;
    double dropped = 0.0;
    while (support > 1 && dropped + std::norm(c[support - 1]) <= kNegligibleTailEnergy * total) {
        dropped += std::norm(c[support - 1]);
        --support;
    }

    const WeylBlock block = weyl_block(alpha, M, support);
    Eigen::VectorXcd x(static_cast<Eigen::Index>(support));
    for (std::size_t m = 0; m < support; ++m) x(static_cast<Eigen::Index>(m)) = c[m];
    const Eigen::VectorXcd y = block.top * x;

    // The truncation error is the part of U f that lands in rows >= M. Rows
    // up to R are computed; anything beyond is charged column by column,
    // together with the dropped input tail.
    double bound = std::sqrt(dropped) + (block.below * x).norm();
    for (std::size_t m = 0; m < support; ++m) bound += std::abs(c[m]) * std::sqrt(block.unresolved[m]);
    const double rel = bound / std::sqrt(total);
    if (rel > options.truncation_tolerance) {
        throw NeedsLargerTruncation("apply_weyl: truncation error bound " + std::to_string(rel) +
                                        " (relative) exceeds tolerance; increase M",
                                    rel);
    }
    return FockVector::from_normalized(std::span<const cplx>(y.data(), static_cast<std::size_t>(y.size())));
}

FockVector rotation_apply(const RootOfUnity& w, long long m, const FockVector& f) {
    const long long d = w.order();
    const long long mr = ((m % d) + d) % d;
    std::vector<cplx> out(f.coeffs());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const long long jr = static_cast<long long>(j % static_cast<std::size_t>(d));
        out[j] *= w.power((jr * mr) % d);
    }
    return FockVector(std::move(out));
}

namespace {
void check_residue(int k, int d, const char* who) {
    if (d < 1) throw invalid_argument(std::string(who) + ": modulus must be >= 1");
    if (k < 0 || k >= d) throw invalid_argument(std::string(who) + ": residue must satisfy 0 <= k < d");
}
}  // namespace

FockVector project(int k, int d, const FockVector& f) {
    check_residue(k, d, "project");
    std::vector<cplx> out(f.trunc_dim(), cplx{});
    for (std::size_t j = static_cast<std::size_t>(k); j < out.size(); j += static_cast<std::size_t>(d)) {
        out[j] = f.coeffs()[j];
    }
    return FockVector(std::move(out));
}

FockVector project_via_filter(int k, int d, const FockVector& f) {
    check_residue(k, d, "project_via_filter");
    const RootOfUnity w(d);
    std::vector<cplx> acc(f.trunc_dim(), cplx{});
    for (int m = 0; m < d; ++m) {
        const cplx weight = w.power(-static_cast<long long>(k) * m);
        const FockVector rotated = rotation_apply(w, m, f);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += weight * rotated.coeffs()[j];
    }
    for (auto& x : acc) x /= static_cast<double>(d);
    return FockVector(std::move(acc));
}

double commutation_residual(int d, cplx beta, const FockVector& f, std::size_t guard,
                            const ApplyOptions& options) {
    if (d < 1) throw invalid_argument("commutation_residual: d must be >= 1");
    if (guard >= f.trunc_dim()) throw invalid_argument("commutation_residual: guard must be < M");
    const RootOfUnity w(d);
    const FockVector lhs = rotation_apply(w, 1, apply_weyl(beta, f, options));
    const FockVector rhs = apply_weyl(beta * w.power(-1), rotation_apply(w, 1, f), options);
    return leading_norm(lhs - rhs, f.trunc_dim() - guard);
}

double commutation_residual(int d, cplx beta, const FockVector& f) {
    return commutation_residual(d, beta, f, default_guard(f.trunc_dim()));
}

}  // namespace fockhrt
