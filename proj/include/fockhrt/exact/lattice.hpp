// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lattice.hpp
 * @brief Exact decision of whether points of Q(zeta_n) lie in a translate of
 * a rank-2 lattice Z e1 + Z e2 with e1, e2 linearly independent over R.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fockhrt/exact/cyclotomic.hpp"

namespace fockhrt::exact {

/// Rank over Q of rational vectors (fraction-free Bareiss elimination).
[[nodiscard]] std::size_t rational_rank(const std::vector<std::vector<Rational>>& vectors);

struct LatticeBasis {
    CycloElement e1;
    CycloElement e2;
    CycloElement offset;
};

struct MembershipResult {
    bool embeddable = false;
    std::optional<LatticeBasis> witness;
    /// Q-rank of the differences lambda_k - lambda_0.
    std::size_t rank_certificate = 0;
    /// Rank two, but both directions are real multiples of each other.
    bool collinear_incommensurable = false;
    /// Integer coordinates (m_k, n_k) of each point, present when embeddable.
    std::vector<std::pair<Integer, Integer>> coordinates;
};

/**
 * Points must share one conductor. Points of conductor 1 or 2 are rational;
 * their witness is reported in Q(zeta_4) so that e2 can be non-real.
 * Every positive answer is re-verified exactly before returning.
 */
[[nodiscard]] MembershipResult lattice_membership_decision(const std::vector<CycloElement>& points);

/// The d-th roots of unity zeta_d^k, k = 0..d-1, in Q(zeta_d).
[[nodiscard]] std::vector<CycloElement> roots_of_unity_exact(int d);

[[nodiscard]] MembershipResult roots_in_lattice(int d);

}  // namespace fockhrt::exact
