#include "quadric/sweep.hpp"

#include <optional>

#include "quadric/errors.hpp"
#include "quadric/params.hpp"

namespace quadric {

std::string property_name(Property p) {
    switch (p) {
        case Property::ChamberConstancy: return "chamber_constancy";
        case Property::GammaRankBound: return "gamma_rank_degree_bound";
        case Property::TopChamberVectorBundle: return "top_chamber_vector_bundle_semistable";
        case Property::MaximalDegreeRank: return "maximal_degree_full_rank";
        case Property::WallLocality: return "wall_locality";
        case Property::AlphaIndependentNeverStable: return "alpha_independent_never_stable";
    }
    return "?";
}

std::string property_citation(Property p) {
    switch (p) {
        case Property::ChamberConstancy:
            return "alpha-semistability is constant on open intervals between consecutive critical values";
        case Property::GammaRankBound:
            return "alpha-semistable implies n alpha <= d <= rk(gamma) d_L / 2 + (n - rk(gamma)) alpha";
        case Property::TopChamberVectorBundle:
            return "semistable just below alpha_M = d/n implies V is semistable as a vector bundle";
        case Property::MaximalDegreeRank:
            return "at maximal degree d = n d_L / 2 a semistable gamma is a symmetric isomorphism";
        case Property::WallLocality:
            return "semistability can only change across a wall where some inequality becomes an equality";
        case Property::AlphaIndependentNeverStable:
            return "alpha-independently strictly semistable bundles are never stable";
    }
    return "?";
}

std::uint64_t SweepResult::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& t : tallies) total += t.violations;
    return total;
}

std::uint64_t sweep_grid_size(const SweepConfig& c) {
    if (c.n_max < 1 || c.deg_bound < 0 || c.dL_max < c.dL_min) return 0;
    const long double limit = static_cast<long double>(kMaxSweepBundles) * 16;
    long double total = 0;
    const long double twists = static_cast<long double>(c.dL_max - c.dL_min + 1);
    for (std::int64_t n = 1; n <= c.n_max; ++n) {
        long double term = twists;
        for (std::int64_t i = 0; i < n && term <= limit; ++i) term *= static_cast<long double>(2 * c.deg_bound + 1);
        for (std::int64_t i = 0; i < n * (n + 1) / 2 && term <= limit; ++i) term *= 2;
        total += term;
        if (total > limit) break;
    }
    return total > limit ? static_cast<std::uint64_t>(limit) : static_cast<std::uint64_t>(total);
}

void for_each_grid_bundle(const SweepConfig& c, const std::function<void(const PatternQuadricBundle&)>& visit) {
    if (c.n_max > kMaxRank) throw GridTooLarge("n_max exceeds " + std::to_string(kMaxRank));
    if (c.genus < 2) throw InvalidBundle("genus must be at least 2");
    const auto size = sweep_grid_size(c);
    if (size > kMaxSweepBundles)
        throw GridTooLarge("grid has about " + std::to_string(size) + " bundles, limit is " +
                           std::to_string(kMaxSweepBundles));

    for (std::int64_t n = 1; n <= c.n_max; ++n) {
        // upper-triangle positions, row-major
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            for (std::size_t j = i; j < static_cast<std::size_t>(n); ++j) cells.emplace_back(i, j);
        const std::uint64_t pattern_count = std::uint64_t{1} << cells.size();

        for (std::int64_t dl = c.dL_min; dl <= c.dL_max; ++dl) {
            std::vector<std::int64_t> degrees(n, -c.deg_bound);
            while (true) {
                for (std::uint64_t mask = 1; mask < pattern_count; ++mask) {
                    bool ok = true;
                    std::vector<std::vector<bool>> pattern(n, std::vector<bool>(n, false));
                    for (std::size_t k = 0; k < cells.size() && ok; ++k) {
                        if (!(mask >> k & 1u)) continue;
                        const auto [i, j] = cells[k];
                        if (dl - degrees[i] - degrees[j] < 0) ok = false;
                        pattern[i][j] = pattern[j][i] = true;
                    }
                    if (!ok) continue;
                    visit(PatternQuadricBundle(degrees, std::move(pattern), dl, c.genus));
                }
                std::int64_t pos = n - 1;
                while (pos >= 0 && degrees[pos] == c.deg_bound) degrees[pos--] = -c.deg_bound;
                if (pos < 0) break;
                ++degrees[pos];
            }
        }
    }
}

BundleCheck check_bundle(const PatternQuadricBundle& bundle, const RankOptions& rank_options,
                         std::size_t max_counterexamples) {
    BundleCheck out;
    for (auto p : kAllProperties) out.tallies.push_back(PropertyTally{p, 0, 0, {}});
    auto tally = [&](Property p) -> PropertyTally& { return out.tallies[static_cast<std::size_t>(p)]; };
    auto record = [&](Property p, bool ok, const std::optional<Rational>& alpha, std::string detail) {
        auto& t = tally(p);
        ++t.checked;
        if (ok) return;
        ++t.violations;
        if (t.counterexamples.size() < max_counterexamples)
            t.counterexamples.push_back({bundle.to_spec(), alpha ? to_string(*alpha) : "", std::move(detail)});
    };

    const auto params = bundle.params();
    if (!params.feasible()) return out;

    const auto walls = enumerate_critical_values(params);
    const auto cells = chambers_from_walls(walls);
    const auto n = bundle.rank();
    const auto d = bundle.degree();
    const StabilityProfile profile(bundle);
    const bool independent = profile.alpha_independent();
    std::optional<std::int64_t> gamma_rank;
    auto rank = [&] {
        if (!gamma_rank) gamma_rank = generic_rank(bundle, rank_options);
        return *gamma_rank;
    };

    std::vector<StabilityClass> middle;  // class at each chamber midpoint
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const bool top = ci + 1 == cells.size();
        const auto samples = chamber_samples(cells[ci]);
        std::vector<StabilityClass> classes;
        for (const auto& alpha : samples) {
            const auto cls = profile.class_at(alpha);
            ++out.evaluations;
            classes.push_back(cls);

            if (independent)
                record(Property::AlphaIndependentNeverStable, cls != StabilityClass::Stable, alpha,
                       "alpha-independent bundle classified stable");

            if (!is_semistable(cls)) continue;
            const auto r = rank();
            const auto [lo, hi] = degree_window(n, bundle.twist_degree(), alpha, r);
            record(Property::GammaRankBound, lo <= d && Rational(d) <= hi, alpha,
                   "d = " + std::to_string(d) + " outside [" + to_string(lo) + ", " + to_string(hi) +
                       "] with rk(gamma) = " + std::to_string(r));
            if (top) {
                record(Property::TopChamberVectorBundle, underlying_bundle_semistable(bundle), alpha,
                       "semistable in the top chamber but V is not semistable");
                if (2 * d == n * bundle.twist_degree())
                    record(Property::MaximalDegreeRank, r == n, alpha,
                           "maximal degree with rk(gamma) = " + std::to_string(r) + " < n");
            }
        }
        const bool constant = classes[0] == classes[1] && classes[1] == classes[2];
        record(Property::ChamberConstancy, constant, samples[1],
               "classes " + class_name(classes[0]) + ", " + class_name(classes[1]) + ", " +
                   class_name(classes[2]) + " inside one chamber");
        middle.push_back(classes[1]);
    }

    for (std::size_t ci = 0; ci + 1 < cells.size(); ++ci) {
        if (middle[ci] == middle[ci + 1]) continue;
        const Rational wall_value = cells[ci].upper;
        ++out.evaluations;
        record(Property::WallLocality, profile.has_zero_slack(wall_value), wall_value,
               class_name(middle[ci]) + " -> " + class_name(middle[ci + 1]) + " with no zero-slack subobject");
    }
    return out;
}

void merge_tallies(std::vector<PropertyTally>& into, const std::vector<PropertyTally>& from,
                   std::size_t max_counterexamples) {
    if (into.empty())
        for (auto p : kAllProperties) into.push_back(PropertyTally{p, 0, 0, {}});
    for (std::size_t i = 0; i < from.size(); ++i) {
        into[i].checked += from[i].checked;
        into[i].violations += from[i].violations;
        for (const auto& ce : from[i].counterexamples)
            if (into[i].counterexamples.size() < max_counterexamples) into[i].counterexamples.push_back(ce);
    }
}

SweepResult run_sweep(const SweepConfig& config, std::size_t max_counterexamples) {
    SweepResult result;
    result.config = config;
    for (auto p : kAllProperties) result.tallies.push_back(PropertyTally{p, 0, 0, {}});
    const RankOptions rank_options{config.seed, config.rank_trials};
    for_each_grid_bundle(config, [&](const PatternQuadricBundle& b) {
        ++result.bundles;
        if (b.params().feasible()) ++result.feasible_bundles;
        const auto check = check_bundle(b, rank_options, max_counterexamples);
        result.evaluations += check.evaluations;
        merge_tallies(result.tallies, check.tallies, max_counterexamples);
    });
    return result;
}

}  // namespace quadric
