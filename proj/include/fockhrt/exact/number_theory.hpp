// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace fockhrt::exact {

/// Euler's totient via trial-division factorization. Throws for n < 1.
[[nodiscard]] std::int64_t euler_phi(std::int64_t n);

/// All n <= bound with phi(n) = 2. While scanning, asserts that phi(n) is
/// even for every n > 2 and raises internal-verification-failure otherwise.
[[nodiscard]] std::vector<std::int64_t> phi_equals_two_solutions(std::int64_t bound);

}  // namespace fockhrt::exact
