// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "fockhrt/error.hpp"
#include "fockhrt/exact/number_theory.hpp"

namespace fockhrt::exact {

namespace {

void check_conductor(int n) {
    if (n < 1) throw invalid_argument("conductor must be >= 1, got " + std::to_string(n));
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) throw verification_failure("cyclotomic division: degree too small");
    IntPoly q(num.size() - dd);
    for (std::size_t k = num.size(); k-- > dd;) {
        const Integer c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (num[i] != 0) throw verification_failure("cyclotomic division left a remainder");
    }
    return q;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<int, IntPoly>& cache() {
    static std::map<int, IntPoly> c;
    return c;
}

IntPoly compute_cyclotomic(int n) {
    IntPoly p(static_cast<std::size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    if (static_cast<std::int64_t>(p.size()) - 1 != euler_phi(n)) {
        throw verification_failure("cyclotomic polynomial " + std::to_string(n) + " has wrong degree");
    }
    return p;
}

void require_same(const CycloElement& a, const CycloElement& b) {
    if (a.conductor() != b.conductor()) {
        throw conductor_mismatch("conductors differ: " + std::to_string(a.conductor()) + " vs " +
                                 std::to_string(b.conductor()));
    }
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
    check_conductor(n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache().find(n);
        if (it != cache().end()) return it->second;
    }
    IntPoly p = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().emplace(n, p);
    return p;
}

CycloElement::CycloElement(int conductor) : n_(conductor) {
    check_conductor(conductor);
    c_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
}

CycloElement::CycloElement(int conductor, std::vector<Rational> coeffs)
    : n_(conductor), c_(std::move(coeffs)) {
    check_conductor(conductor);
    if (static_cast<std::int64_t>(c_.size()) != euler_phi(conductor)) {
        throw invalid_argument("cyclotomic element needs " + std::to_string(euler_phi(conductor)) +
                               " coefficients, got " + std::to_string(c_.size()));
    }
    for (auto& q : c_) q.canonicalize();
}

CycloElement CycloElement::from_power_sum(int conductor, const std::vector<Rational>& c) {
    check_conductor(conductor);
    const IntPoly phi = cyclotomic_polynomial(conductor);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> r = c;
    if (r.size() < deg) r.resize(deg, Rational(0));
    for (std::size_t k = r.size(); k-- > deg;) {
        const Rational lead = r[k];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) r[k - deg + i] -= lead * phi[i];
    }
    r.resize(deg);
    return CycloElement(conductor, std::move(r));
}

CycloElement CycloElement::zeta_power(int conductor, std::int64_t k) {
    check_conductor(conductor);
    const std::int64_t e = ((k % conductor) + conductor) % conductor;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c[static_cast<std::size_t>(e)] = 1;
    return from_power_sum(conductor, c);
}

CycloElement CycloElement::rational(int conductor, const Rational& q) {
    CycloElement out(conductor);
    out.c_[0] = q;
    out.c_[0].canonicalize();
    return out;
}

std::complex<double> CycloElement::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n_;
        acc += c_[j].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

bool CycloElement::is_zero() const {
    for (const auto& q : c_) {
        if (q != 0) return false;
    }
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) return false;
    }
    return true;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same(a, b);
    CycloElement out = a;
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += b.c_[j];
    return out;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same(a, b);
    CycloElement out = a;
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] -= b.c_[j];
    return out;
}

CycloElement operator-(const CycloElement& a) {
    CycloElement out = a;
    for (auto& q : out.c_) q = -q;
    return out;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same(a, b);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloElement::from_power_sum(a.n_, prod);
}

CycloElement operator*(const Rational& q, const CycloElement& a) {
    CycloElement out = a;
    for (auto& c : out.c_) c *= q;
    return out;
}

CycloElement add(const CycloElement& a, const CycloElement& b) { return a + b; }
CycloElement mul(const CycloElement& a, const CycloElement& b) { return a * b; }
bool is_zero(const CycloElement& a) { return a.is_zero(); }

CycloElement conj(const CycloElement& a) {
    const int n = a.conductor();
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        c[(static_cast<std::size_t>(n) - j) % static_cast<std::size_t>(n)] += a.coeffs()[j];
    }
    return CycloElement::from_power_sum(n, c);
}

CycloElement lift(const CycloElement& a, int m) {
    check_conductor(m);
    const int n = a.conductor();
    if (m % n != 0) {
        throw conductor_mismatch("cannot lift conductor " + std::to_string(n) + " to " +
                                 std::to_string(m));
    }
    const std::size_t step = static_cast<std::size_t>(m / n);
    std::vector<Rational> c(a.coeffs().size() * step, Rational(0));
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) c[j * step] = a.coeffs()[j];
    return CycloElement::from_power_sum(m, c);
}

CycloElement real_cross(const CycloElement& a, const CycloElement& b) {
    return a * conj(b) - conj(a) * b;
}

bool real_independent(const CycloElement& a, const CycloElement& b) {
    return !real_cross(a, b).is_zero();
}

}  // namespace fockhrt::exact
