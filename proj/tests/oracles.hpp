#pragma once

// Brute-force reference implementations used only by the tests. They work
// straight from the definitions with plain loops and share no code with the
// library beyond the Rational type.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "quadric/bundle.hpp"
#include "quadric/rational.hpp"

namespace oracle {

using quadric::Rational;

// Every value of the five candidate forms that falls in
// [d - (n-1) dL / 2, d / n], scanning sub-degrees over a generous range.
inline std::set<Rational> critical_values(std::int64_t n, std::int64_t d, std::int64_t dL) {
    const Rational lo = Rational(d) - Rational((n - 1) * dL, 2);
    const Rational hi(d, n);
    std::set<Rational> out;
    auto keep = [&](const Rational& v) {
        if (lo <= v && v <= hi) out.insert(v);
    };
    keep(hi);
    const std::int64_t span = 4 * (std::abs(d) + std::abs(dL) + 4) * n;
    for (std::int64_t a = 1; a < n; ++a) {
        for (std::int64_t e = -span; e <= span; ++e) {
            keep(Rational(d - e, n - a));
            keep(Rational(e, a));
            if (2 * a != n) keep(Rational(d - 2 * e, n - 2 * a));
        }
        for (std::int64_t b = a + 1; b < n; ++b) {
            if (a + b == n) continue;
            for (std::int64_t s = -2 * span; s <= 2 * span; ++s) keep(Rational(d - s, n - a - b));
        }
    }
    return out;
}

struct Pattern {
    std::vector<std::int64_t> deg;
    std::vector<std::vector<bool>> g;
    std::int64_t dL;
};

inline Pattern from(const quadric::PatternQuadricBundle& b) {
    Pattern p{b.degrees(), {}, b.twist_degree()};
    const auto n = static_cast<std::size_t>(b.rank());
    p.g.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.g[i][j] = b.generic(i, j);
    return p;
}

// Reading of the semistability conditions on coordinate subbundles V_I and
// coordinate flags V_I < V_J. Returns -1 unstable, 0 semistable with some
// equality, 1 stable.
inline int semistability(const Pattern& p, const Rational& alpha) {
    const int n = static_cast<int>(p.deg.size());
    std::int64_t d = 0;
    for (auto x : p.deg) d += x;
    if (alpha > Rational(d, n)) return -1;

    auto members = [&](unsigned m) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) v.push_back(i);
        return v;
    };
    auto any = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        for (int i : rows)
            for (int j : cols)
                if (p.g[i][j]) return true;
        return false;
    };
    auto deg_of = [&](const std::vector<int>& v) {
        std::int64_t s = 0;
        for (int i : v) s += p.deg[i];
        return s;
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;

    int result = 1;
    auto test = [&](const Rational& lhs, const Rational& rhs) {
        if (lhs > rhs) result = -1;
        else if (lhs == rhs && result == 1) result = 0;
    };
    const unsigned full = (1u << n) - 1;
    for (unsigned m = 1; m < full; ++m) {
        const auto I = members(m);
        const std::int64_t r = static_cast<std::int64_t>(I.size());
        const Rational deg(deg_of(I));
        const bool killed = !any(I, all);
        const bool isotropic = !any(I, I);
        if (!isotropic) test(deg, Rational(d) + alpha * (r - n));
        if (isotropic) test(deg, Rational(d, 2) + alpha * (Rational(r) - Rational(n, 2)));
        if (killed) test(deg, alpha * r);
        for (unsigned m2 = m + 1; m2 < full; ++m2) {
            if ((m2 & m) != m) continue;
            const auto J = members(m2);
            if (any(I, J) || !any(J, J)) continue;
            const std::int64_t r2 = static_cast<std::int64_t>(J.size());
            test(deg + deg_of(J), Rational(d) + alpha * (r + r2 - n));
        }
    }
    return result;
}

// Rank over Q of a random integer specialization by exact elimination;
// maximum over a few draws.
inline std::int64_t generic_rank(const Pattern& p, std::uint32_t seed = 7) {
    const std::size_t n = p.deg.size();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-97, 97);
    std::int64_t best = 0;
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (p.g[i][j]) m[i][j] = m[j][i] = Rational(dist(rng) | 1);
        std::int64_t rank = 0;
        std::size_t row = 0;
        for (std::size_t c = 0; c < n && row < n; ++c) {
            std::size_t piv = row;
            while (piv < n && m[piv][c].numerator() == 0) ++piv;
            if (piv == n) continue;
            std::swap(m[piv], m[row]);
            for (std::size_t r = row + 1; r < n; ++r) {
                const Rational f = m[r][c] / m[row][c];
                for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[row][k];
            }
            ++row;
            ++rank;
        }
        best = std::max(best, rank);
    }
    return best;
}

}  // namespace oracle
