// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/deepzero.hpp"

#include <algorithm>
#include <cmath>

#include "fockhrt/error.hpp"
#include "fockhrt/operators.hpp"

namespace fockhrt {

void DeepZeroProblem::validate() const {
    if (d < 2) throw invalid_argument("deep-zero: d must be >= 2");
    if (M < 4 * static_cast<std::size_t>(d)) throw invalid_argument("deep-zero: need M >= 4d");
    if (guard >= M) throw invalid_argument("deep-zero: guard must be < M");
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw invalid_argument("deep-zero: beta is not finite");
    }
}

std::size_t deep_zero_default_guard(cplx beta, std::size_t M) {
    if (beta == cplx{0.0, 0.0}) return default_guard(M);
    return std::max(default_guard(M), minimal_guard(beta, M));
}

DeepZeroProblem DeepZeroProblem::with_default_guard(int d, cplx beta, std::size_t M) {
    DeepZeroProblem p{d, beta, M, 0};
    p.guard = deep_zero_default_guard(beta, M);
    p.validate();
    return p;
}

std::vector<std::vector<std::size_t>> residue_classes(int d, std::size_t M) {
    if (d < 2) throw invalid_argument("residue_classes: d must be >= 2");
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(d));
    for (std::size_t n = 0; n < M; ++n) out[n % static_cast<std::size_t>(d)].push_back(n);
    return out;
}

ConstraintSystem assemble_constraints(int d, const std::vector<cplx>& betas, std::size_t M,
                                      std::size_t guard) {
    if (betas.size() != static_cast<std::size_t>(d)) {
        throw invalid_argument("assemble_constraints: need one beta per residue class");
    }
    DeepZeroProblem{d, betas.back(), M, guard}.validate();
    std::vector<std::optional<OperatorMatrix>> ops(betas.size());
    for (std::size_t k = 0; k < betas.size(); ++k) {
        if (betas[k] != cplx{0.0, 0.0}) ops[k] = weyl_matrix(betas[k], M, guard);
    }
    ConstraintSystem s;
    const auto m = static_cast<Eigen::Index>(M);
    s.rows = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t n = 0; n < M; ++n) {
        const std::size_t k = n % static_cast<std::size_t>(d);
        const auto r = static_cast<Eigen::Index>(n);
        if (ops[k]) {
            s.rows.row(r) = ops[k]->entries.row(r);
            s.row_labels.push_back({static_cast<int>(k), "weyl", n});
        } else {
            s.rows(r, r) = 1.0;
            s.row_labels.push_back({static_cast<int>(k), "identity", n});
        }
    }
    return s;
}

ConstraintSystem assemble_constraints(const DeepZeroProblem& p) {
    p.validate();
    std::vector<cplx> betas(static_cast<std::size_t>(p.d), p.beta);
    betas[0] = 0.0;
    return assemble_constraints(p.d, betas, p.M, p.guard);
}

double min_singular_value(const ConstraintSystem& s, std::size_t guard) {
    const auto cols = s.rows.cols();
    if (static_cast<Eigen::Index>(guard) >= cols) throw invalid_argument("guard leaves no interior");
    const auto interior = cols - static_cast<Eigen::Index>(guard);
    if (s.rows.rows() < interior) throw precondition_violation("fewer rows than interior columns");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.rows.leftCols(interior));
    return svd.singularValues()(interior - 1);
}

double reduction_identity_residual(int d, cplx beta, const FockVector& h, std::size_t guard) {
    if (d < 2) throw invalid_argument("reduction identity: d must be >= 2");
    const std::size_t M = h.trunc_dim();
    if (guard >= M) throw invalid_argument("reduction identity: guard must be < M");
    for (std::size_t j = 0; j < M; ++j) {
        if (j % static_cast<std::size_t>(d) != 0 && h[j] != cplx{0.0, 0.0}) {
            throw precondition_violation("h has a component outside E_0 at index " + std::to_string(j));
        }
    }
    if (norm(h) == 0.0) return 0.0;
    const FockVector lhs = project(0, d, apply_weyl(-beta, h));
    const RootOfUnity w(d);
    FockVector rhs(M);
    for (int m = 0; m < d; ++m) rhs = rhs + apply_weyl(-beta * w.power(-m), h);
    rhs = cplx{1.0 / d, 0.0} * rhs;
    return leading_norm(lhs - rhs, M - guard);
}

double reduction_identity_residual(int d, cplx beta, const FockVector& h) {
    return reduction_identity_residual(d, beta, h, default_guard(h.trunc_dim()));
}

double filter_sum_residual(const FockVector& f, int d, std::span<const cplx> samples) {
    if (d < 1) throw invalid_argument("filter_sum_residual: d must be >= 1");
    const RootOfUnity w(d);
    double worst = 0.0;
    for (const cplx z : samples) {
        cplx sum(0.0, 0.0);
        for (int m = 0; m < d; ++m) sum += evaluate(f, w.power(m) * z);
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

cplx weyl_evaluate(cplx beta, const FockVector& f, cplx z) {
    return std::exp(-0.5 * std::norm(beta) - std::conj(beta) * z) * evaluate(f, z + beta);
}

FunctionalEquationReport functional_equation_check(const FockVector& f,
                                                   std::span<const cplx> samples,
                                                   std::optional<cplx> beta) {
    if (samples.empty()) throw invalid_argument("functional_equation_check: no samples");
    const cplx i(0.0, 1.0);
    FunctionalEquationReport r;
    for (const cplx z : samples) {
        const cplx s = evaluate(f, z) + evaluate(f, i * z) + evaluate(f, -z) + evaluate(f, -i * z);
        r.filter_residual = std::max(r.filter_residual, std::abs(s));
    }
    if (beta) {
        double worst = 0.0;
        for (const cplx z : samples) {
            worst = std::max(worst, std::abs(weyl_evaluate(*beta, f, i * z) - weyl_evaluate(*beta, f, z)));
        }
        r.weyl_residual = worst;
    }
    return r;
}

std::string deep_zero_label(int d) {
    return (d == 2 || d == 3 || d == 4 || d == 6) ? "EVIDENCE" : "EXPLORATORY";
}

}  // namespace fockhrt
