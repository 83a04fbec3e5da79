#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quadric/bundle.hpp"

namespace quadric {

struct SweepConfig {
    std::int64_t n_max = 2;
    std::int64_t deg_bound = 2;  // summand degrees range over [-deg_bound, deg_bound]
    std::int64_t dL_min = 1;
    std::int64_t dL_max = 4;
    std::int64_t genus = 2;
    std::uint64_t seed = 0;
    int rank_trials = 8;
};

inline constexpr std::uint64_t kMaxSweepBundles = 10'000'000;

/// Upper bound on the number of (degrees, pattern, d_L) triples a sweep visits.
std::uint64_t sweep_grid_size(const SweepConfig& config);

/// Calls `visit` for every valid pattern bundle of the grid, in a fixed order
/// (rank, d_L, degree tuple lexicographic, pattern bitmask).
/// Throws GridTooLarge when sweep_grid_size exceeds kMaxSweepBundles.
void for_each_grid_bundle(const SweepConfig& config,
                          const std::function<void(const PatternQuadricBundle&)>& visit);

enum class Property {
    ChamberConstancy,
    GammaRankBound,
    TopChamberVectorBundle,
    MaximalDegreeRank,
    WallLocality,
    AlphaIndependentNeverStable,
};

inline constexpr Property kAllProperties[] = {
    Property::ChamberConstancy,       Property::GammaRankBound, Property::TopChamberVectorBundle,
    Property::MaximalDegreeRank,      Property::WallLocality,   Property::AlphaIndependentNeverStable,
};

std::string property_name(Property p);
std::string property_citation(Property p);

struct Counterexample {
    std::string bundle;  // bundle-spec text
    std::string alpha;   // rational, or empty when not tied to one alpha
    std::string detail;
};

struct PropertyTally {
    Property property;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<Counterexample> counterexamples;  // first few, in visit order
};

struct BundleCheck {
    std::vector<PropertyTally> tallies;  // indexed like kAllProperties
    std::uint64_t evaluations = 0;       // classify() calls
};

/// Runs every property on one bundle. Bundles with d > n d_L / 2 have no
/// chambers and are checked for nothing.
BundleCheck check_bundle(const PatternQuadricBundle& bundle, const RankOptions& rank_options,
                         std::size_t max_counterexamples = 5);

struct SweepResult {
    SweepConfig config;
    std::uint64_t bundles = 0;
    std::uint64_t feasible_bundles = 0;
    std::uint64_t evaluations = 0;
    std::vector<PropertyTally> tallies;

    std::uint64_t total_violations() const;
};

SweepResult run_sweep(const SweepConfig& config, std::size_t max_counterexamples = 5);

/// Accumulates `from` into `into`, keeping at most `max_counterexamples`.
void merge_tallies(std::vector<PropertyTally>& into, const std::vector<PropertyTally>& from,
                   std::size_t max_counterexamples);

}  // namespace quadric
