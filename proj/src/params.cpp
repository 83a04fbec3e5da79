#include "quadric/params.hpp"

#include <algorithm>
#include <map>

#include "quadric/errors.hpp"

namespace quadric {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_feasible(const ModuliParams& p) {
    if (p.rank < 1) throw InfeasibleParams("rank must be at least 1");
    if (!p.feasible())
        throw InfeasibleParams("d = " + std::to_string(p.degree) + " exceeds n d_L / 2 = " +
                               to_string(Rational(p.rank * p.twist_degree, 2)));
}

// Integers t with lo <= t * scale <= hi for scale != 0, returned as [first, last].
std::pair<std::int64_t, std::int64_t> integer_range(Rational lo, Rational hi, std::int64_t scale) {
    Rational a = lo / scale;
    Rational b = hi / scale;
    if (a > b) std::swap(a, b);
    return {ceil(a), floor(b)};
}

}  // namespace

std::string provenance_tag(const WallProvenance& p) {
    return std::visit(overloaded{
                          [](const wall::Top&) { return "top"; },
                          [](const wall::SubCaseA&) { return "sub_a"; },
                          [](const wall::SubCaseB&) { return "sub_b"; },
                          [](const wall::SubCaseC&) { return "sub_c"; },
                          [](const wall::Filtration&) { return "filtration"; },
                      },
                      p);
}

Rational provenance_value(const WallProvenance& p, std::int64_t n, std::int64_t d) {
    return std::visit(
        overloaded{
            [&](const wall::Top&) { return Rational(d, n); },
            [&](const wall::SubCaseA& w) { return Rational(d - w.sub_degree, n - w.sub_rank); },
            [&](const wall::SubCaseB& w) {
                return Rational(d - 2 * w.sub_degree, n - 2 * w.sub_rank);
            },
            [&](const wall::SubCaseC& w) { return Rational(w.sub_degree, w.sub_rank); },
            [&](const wall::Filtration& w) {
                return Rational(d - w.degree1 - w.degree2, n - w.rank1 - w.rank2);
            },
        },
        p);
}

std::pair<Rational, Rational> alpha_extremes(const ModuliParams& params) {
    const auto n = params.rank;
    const Rational alpha_m = Rational(params.degree) - Rational((n - 1) * params.twist_degree, 2);
    return {alpha_m, Rational(params.degree, n)};
}

std::vector<CriticalValue> enumerate_critical_values(const ModuliParams& params) {
    require_feasible(params);
    const auto n = params.rank;
    const auto d = params.degree;
    const auto [lo, hi] = alpha_extremes(params);

    std::map<Rational, std::vector<WallProvenance>> found;
    auto add = [&](WallProvenance p) {
        const Rational v = provenance_value(p, n, d);
        if (v < lo || v > hi) return;
        found[v].push_back(std::move(p));
    };

    add(wall::Top{});
    for (std::int64_t r = 1; r < n; ++r) {
        // d - d' = alpha (n - r)
        {
            auto [first, last] = integer_range(Rational(d) - hi * (n - r), Rational(d) - lo * (n - r), 1);
            for (auto dp = first; dp <= last; ++dp) add(wall::SubCaseA{r, dp});
        }
        // d - 2 d' = alpha (n - 2r)
        if (n != 2 * r) {
            const auto m = n - 2 * r;
            auto [first, last] = integer_range(Rational(d) - hi * m, Rational(d) - lo * m, 2);
            for (auto dp = first; dp <= last; ++dp) add(wall::SubCaseB{r, dp});
        }
        // d' = alpha r
        {
            auto [first, last] = integer_range(lo * r, hi * r, 1);
            for (auto dp = first; dp <= last; ++dp) add(wall::SubCaseC{r, dp});
        }
        // d - (d' + d'') = alpha (n - r - r2)
        for (std::int64_t r2 = r + 1; r2 < n; ++r2) {
            const auto m = n - r - r2;
            if (m == 0) continue;
            auto [first, last] = integer_range(Rational(d) - hi * m, Rational(d) - lo * m, 1);
            for (auto s = first; s <= last; ++s) {
                const auto d1 = floor(Rational(s * r, r + r2));
                add(wall::Filtration{r, r2, d1, s - d1});
            }
        }
    }

    std::vector<CriticalValue> out;
    out.reserve(found.size());
    for (auto& [v, ws] : found) out.push_back({v, std::move(ws)});
    return out;
}

std::vector<Chamber> chambers_from_walls(const std::vector<CriticalValue>& walls) {
    std::vector<Chamber> out;
    if (walls.empty()) return out;
    out.push_back({std::nullopt, walls.front().value});
    for (std::size_t i = 1; i < walls.size(); ++i) out.push_back({walls[i - 1].value, walls[i].value});
    return out;
}

std::vector<Chamber> chambers(const ModuliParams& params) {
    return chambers_from_walls(enumerate_critical_values(params));
}

std::vector<Rational> chamber_samples(const Chamber& c) {
    const Rational lower = c.lower.value_or(c.upper - 1);
    const Rational width = c.upper - lower;
    return {lower + width / 4, lower + width / 2, lower + width * 3 / 4};
}

std::pair<Rational, Rational> degree_window(std::int64_t n, std::int64_t twist_degree,
                                            const Rational& alpha, std::int64_t gamma_rank) {
    if (gamma_rank < 0 || gamma_rank > n)
        throw RankOutOfRange("rk(gamma) = " + std::to_string(gamma_rank) + " outside 0.." +
                             std::to_string(n));
    return {alpha * n, Rational(gamma_rank * twist_degree, 2) + alpha * (n - gamma_rank)};
}

std::int64_t minimum_gamma_rank(const ModuliParams& params, const Rational& alpha) {
    const auto n = params.rank;
    const Rational d(params.degree);
    if (n < 1) throw InfeasibleParams("rank must be at least 1");
    if (alpha > Rational(params.twist_degree, 2))
        throw InfeasibleParams("alpha = " + to_string(alpha) + " exceeds d_L / 2");
    if (alpha * n > d || !params.feasible())
        throw InfeasibleParams("degree outside [n alpha, n d_L / 2]");
    std::int64_t best = 0;
    for (std::int64_t r = 0; r <= n; ++r) {
        if (degree_window(n, params.twist_degree, alpha, r).second <= d) best = r;
    }
    return best;
}

}  // namespace quadric
