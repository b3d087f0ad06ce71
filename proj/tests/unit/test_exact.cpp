// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fockhrt/error.hpp"
#include "fockhrt/exact/cyclotomic.hpp"
#include "fockhrt/exact/lattice.hpp"
#include "fockhrt/exact/number_theory.hpp"
#include "support/oracles.hpp"

namespace fockhrt::exact {
namespace {

bool in_known_set(int d) { return d == 1 || d == 2 || d == 3 || d == 4 || d == 6; }

std::vector<std::vector<Rational>> coordinate_vectors(const std::vector<CycloElement>& xs) {
    std::vector<std::vector<Rational>> out;
    for (const auto& x : xs) out.push_back(x.coeffs());
    return out;
}

TEST(Totient, Examples) {
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(euler_phi(6), 2);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(euler_phi(97), 96);
    EXPECT_THROW((void)euler_phi(0), InputError);
}

TEST(Totient, MatchesCoprimeCount) {
    for (long long n = 1; n <= 2000; ++n) EXPECT_EQ(euler_phi(n), oracle::coprime_count(n)) << n;
}

TEST(Totient, PhiEqualsTwo) {
    EXPECT_EQ(phi_equals_two_solutions(10), (std::vector<std::int64_t>{3, 4, 6}));
    EXPECT_TRUE(phi_equals_two_solutions(2).empty());
    EXPECT_EQ(phi_equals_two_solutions(100000), (std::vector<std::int64_t>{3, 4, 6}));
}

TEST(Cyclotomic, SmallPolynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
    // Phi_105 is the first with a coefficient of absolute value 2.
    const IntPoly p = cyclotomic_polynomial(105);
    Integer worst = 0;
    for (const auto& c : p) worst = std::max(worst, Integer(abs(c)));
    EXPECT_EQ(worst, 2);
    EXPECT_THROW((void)cyclotomic_polynomial(0), InputError);
}

TEST(Cyclotomic, DegreeIsTotient) {
    for (int n = 1; n <= 200; ++n) {
        EXPECT_EQ(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n)) << n;
    }
}

TEST(CycloElement, FieldIdentities) {
    const CycloElement i = CycloElement::zeta_power(4, 1);
    EXPECT_EQ(i * i, CycloElement::rational(4, -1));
    const CycloElement w = CycloElement::zeta_power(6, 1);
    EXPECT_EQ(w * w, w - CycloElement::rational(6, 1));
    for (int n = 1; n <= 30; ++n) {
        const CycloElement z = CycloElement::zeta_power(n, 1);
        EXPECT_EQ(conj(z) * z, CycloElement::rational(n, 1)) << n;
        EXPECT_EQ(CycloElement::zeta_power(n, n), CycloElement::rational(n, 1));
        EXPECT_EQ(conj(conj(z)), z);
    }
}

TEST(CycloElement, NumericValueAndRing) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng() % 24);
        const auto phi = static_cast<std::size_t>(euler_phi(n));
        std::vector<Rational> ca(phi), cb(phi);
        for (std::size_t j = 0; j < phi; ++j) {
            ca[j] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
            cb[j] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
        }
        const CycloElement a(n, ca), b(n, cb);
        EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0.0, 1e-9);
        EXPECT_NEAR(std::abs((a + b).to_complex() - a.to_complex() - b.to_complex()), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(conj(a).to_complex() - std::conj(a.to_complex())), 0.0, 1e-12);
        EXPECT_TRUE(is_zero(a - a));
        EXPECT_EQ(mul(a, b), mul(b, a));
        EXPECT_EQ(add(a, b), add(b, a));
    }
}

TEST(CycloElement, Errors) {
    EXPECT_THROW(CycloElement(5, std::vector<Rational>(3)), InputError);
    EXPECT_THROW((void)(CycloElement(5) + CycloElement(7)), InputError);
    EXPECT_THROW((void)lift(CycloElement(5), 7), InputError);
}

TEST(CycloElement, RationalsAreCanonical) {
    const CycloElement a(3, {Rational(2, 4), Rational(0, 5)});
    EXPECT_EQ(a.coeffs()[0].get_num(), 1);
    EXPECT_EQ(a.coeffs()[0].get_den(), 2);
    EXPECT_EQ(a.coeffs()[1].get_den(), 1);
}

TEST(RationalRank, Examples) {
    EXPECT_EQ(rational_rank({}), 0u);
    EXPECT_EQ(rational_rank({{1, 0}, {0, 1}, {1, 1}}), 2u);
    EXPECT_EQ(rational_rank({{Rational(1, 2), 1}, {1, 2}}), 1u);
    EXPECT_EQ(rational_rank({{0, 0, 0}}), 0u);
    EXPECT_EQ(rational_rank(coordinate_vectors(roots_of_unity_exact(5))), 4u);
}

TEST(RationalRank, RootsSpanTheField) {
    for (int d = 1; d <= 60; ++d) {
        EXPECT_EQ(static_cast<std::int64_t>(rational_rank(coordinate_vectors(roots_of_unity_exact(d)))),
                  euler_phi(d))
            << d;
    }
}

TEST(RationalRank, AgreesWithFloatingEliminationOnSmallIntegers) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5, planted = 1 + rng() % 3;
        // rows built as integer combinations of `planted` random vectors
        std::vector<std::vector<long>> basis(planted, std::vector<long>(cols));
        for (auto& b : basis)
            for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
        std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
        for (auto& row : m) {
            for (const auto& b : basis) {
                const long k = static_cast<long>(rng() % 5) - 2;
                for (std::size_t j = 0; j < cols; ++j) row[j] += Rational(k * b[j], 3);
            }
        }
        const std::size_t r = rational_rank(m);
        EXPECT_LE(r, std::min({rows, cols, planted}));
        // Brute-force rank by exact Gaussian elimination on rationals.
        auto a = m;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t p = rank;
            while (p < rows && a[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(a[p], a[rank]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == rank || a[i][c] == 0) continue;
                const Rational f = a[i][c] / a[rank][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
            }
            ++rank;
        }
        EXPECT_EQ(r, rank);
    }
}

void expect_sound(const std::vector<CycloElement>& pts, const MembershipResult& r) {
    ASSERT_TRUE(r.embeddable);
    ASSERT_TRUE(r.witness.has_value());
    const auto& w = *r.witness;
    EXPECT_FALSE(real_cross(w.e1, w.e2).is_zero());
    ASSERT_EQ(r.coordinates.size(), pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& [m, n] = r.coordinates[k];
        CycloElement recon = Rational(m) * w.e1 + Rational(n) * w.e2 + w.offset;
        if (recon.conductor() != pts[k].conductor()) {
            EXPECT_EQ(recon, lift(pts[k], recon.conductor()));
        } else {
            EXPECT_EQ(recon, pts[k]);
        }
    }
}

TEST(Lattice, Examples) {
    const auto five = roots_in_lattice(5);
    EXPECT_FALSE(five.embeddable);
    EXPECT_EQ(five.rank_certificate, 4u);
    EXPECT_FALSE(five.witness.has_value());

    const auto six_pts = roots_of_unity_exact(6);
    expect_sound(six_pts, lattice_membership_decision(six_pts));

    const std::vector<CycloElement> two = {CycloElement(7), CycloElement::zeta_power(7, 3)};
    expect_sound(two, lattice_membership_decision(two));

    const auto d2 = roots_in_lattice(2);
    EXPECT_TRUE(d2.embeddable);
    EXPECT_EQ(d2.rank_certificate, 1u);
    expect_sound(roots_of_unity_exact(2), d2);
    expect_sound(roots_of_unity_exact(1), roots_in_lattice(1));
}

TEST(Lattice, RootsEmbeddableExactlyForKnownSet) {
    for (int d = 1; d <= 60; ++d) {
        const auto r = roots_in_lattice(d);
        EXPECT_EQ(r.embeddable, in_known_set(d)) << d;
        if (r.embeddable) expect_sound(roots_of_unity_exact(d), r);
        EXPECT_EQ(r.witness.has_value(), r.embeddable);
    }
}

TEST(Lattice, ScalingCovariance) {
    std::mt19937_64 rng(9);
    for (int d : {3, 4, 5, 6, 8, 12}) {
        for (int t = 0; t < 3; ++t) {
            const auto phi = static_cast<std::size_t>(euler_phi(d));
            std::vector<Rational> c(phi);
            for (auto& x : c) x = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
            if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; })) c[0] = 1;
            const CycloElement beta(d, c);
            std::vector<CycloElement> pts;
            for (const auto& z : roots_of_unity_exact(d)) pts.push_back(beta * z);
            const auto r = lattice_membership_decision(pts);
            EXPECT_EQ(r.embeddable, roots_in_lattice(d).embeddable) << d;
            if (r.embeddable) expect_sound(pts, r);
        }
    }
}

TEST(Lattice, CollinearIncommensurableFlag) {
    // 0, 1 and 2 cos(2 pi / 5) = zeta + zeta^4 are collinear but Q-independent.
    const CycloElement z = CycloElement::zeta_power(5, 1);
    const std::vector<CycloElement> pts = {CycloElement(5), CycloElement::rational(5, 1),
                                           z + CycloElement::zeta_power(5, 4)};
    const auto r = lattice_membership_decision(pts);
    EXPECT_FALSE(r.embeddable);
    EXPECT_EQ(r.rank_certificate, 2u);
    EXPECT_TRUE(r.collinear_incommensurable);
}

TEST(Lattice, CollinearCommensurableIsEmbeddable) {
    const std::vector<CycloElement> pts = {CycloElement::rational(3, Rational(1, 2)),
                                           CycloElement::rational(3, Rational(5, 6)),
                                           CycloElement::rational(3, Rational(-7, 3))};
    expect_sound(pts, lattice_membership_decision(pts));
}

TEST(Lattice, ConductorMismatch) {
    EXPECT_THROW((void)lattice_membership_decision({CycloElement(3), CycloElement(4)}), InputError);
    EXPECT_THROW((void)lattice_membership_decision({}), InputError);
}

}  // namespace
}  // namespace fockhrt::exact
