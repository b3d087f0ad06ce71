// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/hrt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "fockhrt/error.hpp"
#include "fockhrt/exact/lattice.hpp"
#include "fockhrt/operators.hpp"

namespace fockhrt {

namespace {

using exact::CycloElement;

bool parallel_distinct_numeric(cplx p0, cplx p1, cplx q0, cplx q1) {
    const cplx u = p1 - p0;
    const cplx v = q1 - q0;
    const cplx w = q0 - p0;
    const double tol = kCollinearityTolerance;
    if (std::abs((u * std::conj(v)).imag()) > tol * std::abs(u) * std::abs(v)) return false;
    return std::abs((w * std::conj(u)).imag()) > tol * std::abs(u) * std::max(std::abs(w), 1.0);
}

bool parallel_distinct_exact(const CycloElement& p0, const CycloElement& p1, const CycloElement& q0,
                             const CycloElement& q1) {
    const CycloElement u = p1 - p0;
    if (exact::real_independent(u, q1 - q0)) return false;
    return exact::real_independent(u, q0 - p0);
}

}  // namespace

void PointConfig::validate() const {
    if (points.empty()) throw invalid_argument("point configuration is empty");
    for (const auto& p : points) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw invalid_argument("point configuration has non-finite entries");
        }
    }
    if (exact) {
        if (exact->size() != points.size()) {
            throw invalid_argument("exact forms do not match the number of points");
        }
        const int n = exact->front().conductor();
        for (std::size_t k = 0; k < exact->size(); ++k) {
            const auto& e = (*exact)[k];
            if (e.conductor() != n) throw conductor_mismatch("exact forms have different conductors");
            if (std::abs(e.to_complex() - points[k]) > 1e-9 * std::max(1.0, std::abs(points[k]))) {
                throw invalid_argument("exact form " + std::to_string(k) + " disagrees with its point");
            }
            for (std::size_t j = 0; j < k; ++j) {
                if ((*exact)[j] == e) {
                    throw precondition_violation("points " + std::to_string(j) + " and " +
                                                 std::to_string(k) + " coincide");
                }
            }
        }
        return;
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(points[k] - points[j]) <= kDistinctnessTolerance) {
                throw precondition_violation("points " + std::to_string(j) + " and " +
                                             std::to_string(k) + " are not distinct");
            }
        }
    }
}

std::string to_string(Verdict v) {
    return v == Verdict::Independent ? "INDEPENDENT" : "INCONCLUSIVE";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "INDEPENDENT") return Verdict::Independent;
    if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
    throw invalid_argument("unknown verdict '" + s + "'");
}

std::string to_string(KnownCase k) {
    switch (k) {
        case KnownCase::SmallN: return "SmallN";
        case KnownCase::ParallelPairs: return "ParallelPairs";
        case KnownCase::RegularLattice: return "RegularLattice";
        case KnownCase::Unknown: return "Unknown";
    }
    return "Unknown";
}

FockVector gaussian_window(std::size_t M) {
    if (M == 0) throw invalid_argument("window dimension must be positive");
    std::vector<cplx> c(M, cplx{0.0, 0.0});
    c[0] = 1.0;
    return FockVector(std::move(c));
}

Certificate gram_matrix(const PointConfig& config, const FockVector& window, std::size_t M) {
    config.validate();
    if (window.trunc_dim() > M) {
        throw invalid_argument("window has more coefficients than the truncation M");
    }
    const FockVector w = window.resized(M);
    require_tail_clean(w);
    const double w2 = std::pow(norm(w), 2);
    if (!(w2 > 0.0)) throw invalid_argument("window is zero");

    const std::size_t N = config.points.size();
    std::vector<FockVector> translates;
    translates.reserve(N);
    for (const auto& lambda : config.points) translates.push_back(apply_weyl(lambda, w));

    Certificate cert;
    cert.gram.resize(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    double max_defect = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        const double diag = inner(translates[j], translates[j]).real();
        cert.gram(jj, jj) = diag;
        max_defect = std::max(max_defect, std::abs(diag - w2));
        for (std::size_t k = j + 1; k < N; ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            const cplx g = inner(translates[j], translates[k]);
            cert.gram(jj, kk) = g;
            cert.gram(kk, jj) = std::conj(g);
        }
    }
    if (max_defect > 1e-8 * w2) {
        throw NeedsLargerTruncation("Gram diagonal deviates from ||w||^2 by " +
                                        std::to_string(max_defect),
                                    max_defect / w2);
    }
    const double rounding = static_cast<double>(M) * std::numeric_limits<double>::epsilon() * w2;
    cert.tail_slack = static_cast<double>(N) * std::max(max_defect, rounding);
    return cert;
}

Certificate certify_independence(const PointConfig& config, const FockVector& window,
                                 std::size_t M) {
    Certificate cert = gram_matrix(config, window, M);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(cert.gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw verification_failure("Gram eigensolver failed");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    cert.min_eigenvalue = ev(0);
    const double top = ev(ev.size() - 1);
    cert.condition_number =
        cert.min_eigenvalue > 0.0 ? top / cert.min_eigenvalue : std::numeric_limits<double>::infinity();
    const double N = static_cast<double>(config.points.size());
    cert.verdict = cert.min_eigenvalue > N * cert.tail_slack ? Verdict::Independent
                                                               : Verdict::Inconclusive;
    return cert;
}

KnownCase classify_known_case(const PointConfig& config) {
    config.validate();
    const auto& p = config.points;
    const std::size_t N = p.size();
    if (N <= 3) return KnownCase::SmallN;

    if (N == 4) {
        static constexpr std::array<std::array<int, 4>, 3> kPairings{{
            {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& s : kPairings) {
            const bool hit =
                config.exact
                    ? parallel_distinct_exact((*config.exact)[s[0]], (*config.exact)[s[1]],
                                              (*config.exact)[s[2]], (*config.exact)[s[3]])
                    : parallel_distinct_numeric(p[s[0]], p[s[1]], p[s[2]], p[s[3]]);
            if (hit) return KnownCase::ParallelPairs;
        }
    }

    if (!config.exact) {
        throw exactness_required("lattice test needs exact cyclotomic forms for " +
                                 std::to_string(N) + " points");
    }
    const auto result = exact::lattice_membership_decision(*config.exact);
    return result.embeddable ? KnownCase::RegularLattice : KnownCase::Unknown;
}

PointConfig roots_config(int d, cplx beta) {
    if (d < 1) throw invalid_argument("roots_config: d must be >= 1");
    if (beta == cplx{0.0, 0.0}) throw invalid_argument("roots_config: beta = 0 makes the points coincide");
    PointConfig c;
    for (int k = 0; k < d; ++k) {
        c.points.push_back(beta * std::polar(1.0, 2.0 * std::numbers::pi * k / d));
    }
    if (beta == cplx{1.0, 0.0}) c.exact = exact::roots_of_unity_exact(d);
    return c;
}

PointConfig roots_config(int d, const CycloElement& beta) {
    if (d < 1) throw invalid_argument("roots_config: d must be >= 1");
    if (beta.is_zero()) throw invalid_argument("roots_config: beta = 0 makes the points coincide");
    const int m = std::lcm(beta.conductor(), d);
    const CycloElement b = exact::lift(beta, m);
    const CycloElement w = exact::lift(CycloElement::zeta_power(d, 1), m);
    PointConfig c;
    c.exact.emplace();
    CycloElement wk = CycloElement::rational(m, 1);
    for (int k = 0; k < d; ++k, wk = wk * w) {
        CycloElement e = b * wk;
        c.points.push_back(e.to_complex());
        c.exact->push_back(std::move(e));
    }
    return c;
}

std::string evidence_label(const PointConfig& config) {
    try {
        return classify_known_case(config) == KnownCase::Unknown ? "EVIDENCE" : "PROVEN-CASE";
    } catch (const EngineError&) {
        return "EVIDENCE";
    }
}

}  // namespace fockhrt
