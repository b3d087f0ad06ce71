// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/exact/number_theory.hpp"

#include <string>

#include "fockhrt/error.hpp"

namespace fockhrt::exact {

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw invalid_argument("euler_phi: n must be >= 1, got " + std::to_string(n));
    std::int64_t result = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::vector<std::int64_t> phi_equals_two_solutions(std::int64_t bound) {
    if (bound < 1) throw invalid_argument("phi_equals_two_solutions: bound must be >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= bound; ++n) {
        const std::int64_t phi = euler_phi(n);
        if (n > 2 && phi % 2 != 0) {
            throw verification_failure("phi(" + std::to_string(n) + ") = " + std::to_string(phi) +
                                       " is odd");
        }
        if (phi == 2) out.push_back(n);
    }
    return out;
}

}  // namespace fockhrt::exact
