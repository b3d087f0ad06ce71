// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/exact/lattice.hpp"

#include <string>

#include "fockhrt/error.hpp"

namespace fockhrt::exact {

namespace {

using Vec = std::vector<Rational>;

Integer lcm_denominators(const std::vector<Rational>& qs) {
    Integer l = 1;
    for (const auto& q : qs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

// Scalars q with v_k = q_k u for every v_k, or nullopt if some v_k is not on Q u.
std::optional<Vec> proportional(const std::vector<Vec>& vs, const Vec& u) {
    std::size_t p = 0;
    while (p < u.size() && u[p] == 0) ++p;
    if (p == u.size()) return std::nullopt;
    Vec qs;
    for (const auto& v : vs) {
        Rational q = v[p] / u[p];
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (v[i] != q * u[i]) return std::nullopt;
        }
        qs.push_back(q);
    }
    return qs;
}

// Writes each v_k as x_k a + y_k b (a, b Q-independent).
std::optional<std::pair<Vec, Vec>> decompose(const std::vector<Vec>& vs, const Vec& a, const Vec& b) {
    std::size_t p = 0, q = 0;
    Rational det = 0;
    for (std::size_t i = 0; i < a.size() && det == 0; ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            det = a[i] * b[j] - a[j] * b[i];
            if (det != 0) {
                p = i;
                q = j;
                break;
            }
        }
    }
    if (det == 0) return std::nullopt;
    Vec xs, ys;
    for (const auto& v : vs) {
        Rational x = (v[p] * b[q] - v[q] * b[p]) / det;
        Rational y = (a[p] * v[q] - a[q] * v[p]) / det;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (v[i] != x * a[i] + y * b[i]) return std::nullopt;
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    return std::make_pair(xs, ys);
}

// Primitive generator for {q_k u}: returns (scale s, integer coordinates m_k) with q_k = m_k s.
std::pair<Rational, std::vector<Integer>> primitive(const Vec& qs) {
    const Integer D = lcm_denominators(qs);
    Integer g = 0;
    for (const auto& q : qs) {
        Integer num = q.get_num() * (D / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) g = 1;
    std::vector<Integer> ms;
    for (const auto& q : qs) ms.push_back(q.get_num() * (D / q.get_den()) / g);
    Rational s(g, D);
    s.canonicalize();
    return {s, ms};
}

void verify(const std::vector<CycloElement>& points, const MembershipResult& r) {
    const LatticeBasis& w = *r.witness;
    if (!real_independent(w.e1, w.e2)) throw verification_failure("lattice witness is degenerate");
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& [m, n] = r.coordinates[k];
        const CycloElement recon = Rational(m) * w.e1 + Rational(n) * w.e2 + w.offset;
        if (!(recon == points[k])) {
            throw verification_failure("lattice witness does not reproduce point " + std::to_string(k));
        }
    }
}

}  // namespace

std::size_t rational_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t cols = vectors.front().size();
    std::vector<std::vector<Integer>> a;
    for (const auto& v : vectors) {
        if (v.size() != cols) throw invalid_argument("rational_rank: ragged input");
        const Integer D = lcm_denominators(v);
        std::vector<Integer> row;
        for (const auto& q : v) row.push_back(q.get_num() * (D / q.get_den()));
        a.push_back(std::move(row));
    }
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

MembershipResult lattice_membership_decision(const std::vector<CycloElement>& input) {
    if (input.empty()) throw invalid_argument("lattice decision needs at least one point");
    const int n0 = input.front().conductor();
    for (const auto& p : input) {
        if (p.conductor() != n0) throw conductor_mismatch("points have different conductors");
    }
    std::vector<CycloElement> points = input;
    int n = n0;
    if (n <= 2) {
        n = 4;
        for (auto& p : points) p = lift(p, 4);
    }

    std::vector<Vec> diffs;
    for (std::size_t k = 1; k < points.size(); ++k) diffs.push_back((points[k] - points[0]).coeffs());

    MembershipResult r;
    r.rank_certificate = rational_rank(diffs);
    const CycloElement zero(n);
    r.coordinates.assign(points.size(), {Integer(0), Integer(0)});

    if (r.rank_certificate >= 3) return r;

    if (r.rank_certificate <= 1) {
        CycloElement e1 = CycloElement::rational(n, 1);
        if (r.rank_certificate == 1) {
            std::size_t idx = 0;
            while (CycloElement(n, diffs[idx]).is_zero()) ++idx;
            const Vec& u = diffs[idx];
            auto qs = proportional(diffs, u);
            if (!qs) throw verification_failure("rank-1 differences are not proportional");
            auto [s, ms] = primitive(*qs);
            e1 = s * CycloElement(n, u);
            for (std::size_t k = 1; k < points.size(); ++k) r.coordinates[k].first = ms[k - 1];
        }
        const CycloElement e2 = CycloElement::zeta_power(n, 1) * e1;
        r.embeddable = true;
        r.witness = LatticeBasis{e1, e2, points[0]};
        verify(points, r);
        return r;
    }

    // Rank two: first Q-independent pair of differences.
    std::size_t i = 0, j = 0;
    for (std::size_t a = 0; a < diffs.size() && j == 0; ++a) {
        for (std::size_t b = a + 1; b < diffs.size(); ++b) {
            if (rational_rank({diffs[a], diffs[b]}) == 2) {
                i = a;
                j = b;
                break;
            }
        }
    }
    const CycloElement va(n, diffs[i]), vb(n, diffs[j]);
    if (!real_independent(va, vb)) {
        r.collinear_incommensurable = true;
        return r;
    }
    auto xy = decompose(diffs, diffs[i], diffs[j]);
    if (!xy) throw verification_failure("rank-2 differences do not decompose");
    auto [s1, ms] = primitive(xy->first);
    auto [s2, ns] = primitive(xy->second);
    for (std::size_t k = 1; k < points.size(); ++k) r.coordinates[k] = {ms[k - 1], ns[k - 1]};
    r.embeddable = true;
    r.witness = LatticeBasis{s1 * va, s2 * vb, points[0]};
    verify(points, r);
    return r;
}

std::vector<CycloElement> roots_of_unity_exact(int d) {
    if (d < 1) throw invalid_argument("d must be >= 1");
    std::vector<CycloElement> out;
    for (int k = 0; k < d; ++k) out.push_back(CycloElement::zeta_power(d, k));
    return out;
}

MembershipResult roots_in_lattice(int d) { return lattice_membership_decision(roots_of_unity_exact(d)); }

}  // namespace fockhrt::exact
