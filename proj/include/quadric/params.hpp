#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quadric/rational.hpp"

namespace quadric {

/// Discrete data (g, n, d, d_L) fixing a moduli problem of L-quadric bundles.
struct ModuliParams {
    std::int64_t genus = 2;
    std::int64_t rank = 1;
    std::int64_t degree = 0;
    std::int64_t twist_degree = 0;

    /// d <= n d_L / 2. Outside this range no alpha admits semistable objects.
    bool feasible() const noexcept { return 2 * degree <= rank * twist_degree; }

    friend bool operator==(const ModuliParams&, const ModuliParams&) = default;
};

// Provenance of a candidate wall. Each alternative records the integers that
// make its formula land on the wall value.
namespace wall {
struct Top {
    friend bool operator==(const Top&, const Top&) = default;
};
/// (d - d') / (n - n'): non-isotropic subbundle of rank n', degree d'.
struct SubCaseA {
    std::int64_t sub_rank, sub_degree;
    friend bool operator==(const SubCaseA&, const SubCaseA&) = default;
};
/// (d - 2d') / (n - 2n'), n != 2n': isotropic subbundle.
struct SubCaseB {
    std::int64_t sub_rank, sub_degree;
    friend bool operator==(const SubCaseB&, const SubCaseB&) = default;
};
/// d' / n': subbundle killed by gamma.
struct SubCaseC {
    std::int64_t sub_rank, sub_degree;
    friend bool operator==(const SubCaseC&, const SubCaseC&) = default;
};
/// (d - d' - d'') / (n - n' - n''), n' < n'' < n, n' + n'' != n.
/// Only d' + d'' is determined by the wall; the split recorded is the one
/// proportional to the ranks (d' = floor((d'+d'') n' / (n'+n''))).
struct Filtration {
    std::int64_t rank1, rank2, degree1, degree2;
    friend bool operator==(const Filtration&, const Filtration&) = default;
};
}  // namespace wall

using WallProvenance =
    std::variant<wall::Top, wall::SubCaseA, wall::SubCaseB, wall::SubCaseC, wall::Filtration>;

/// Short tag for a provenance: "top", "sub_a", "sub_b", "sub_c", "filtration".
std::string provenance_tag(const WallProvenance& p);

/// Value the provenance formula produces for the given (n, d).
Rational provenance_value(const WallProvenance& p, std::int64_t n, std::int64_t d);

struct CriticalValue {
    Rational value;
    std::vector<WallProvenance> witnesses;
};

/// Open chamber (lower, upper). lower == nullopt means the unbounded tail.
struct Chamber {
    std::optional<Rational> lower;
    Rational upper;

    bool is_tail() const noexcept { return !lower.has_value(); }
    bool contains(const Rational& a) const { return a < upper && (!lower || *lower < a); }
};

/// (alpha_m, alpha_M) = (d - (n-1) d_L / 2, d / n).
std::pair<Rational, Rational> alpha_extremes(const ModuliParams& params);

/// Every rational of one of the wall forms inside [alpha_m, alpha_M], sorted
/// ascending, one entry per value with all witnesses. This is a candidate set:
/// it contains every true critical value but realizability is not decided.
/// Throws InfeasibleParams when d > n d_L / 2.
std::vector<CriticalValue> enumerate_critical_values(const ModuliParams& params);

/// Tail below the first wall, then the open intervals between consecutive
/// walls, ending at alpha_M. Below alpha_m all moduli spaces are isomorphic,
/// so the tail is a single chamber.
std::vector<Chamber> chambers(const ModuliParams& params);
std::vector<Chamber> chambers_from_walls(const std::vector<CriticalValue>& walls);

/// Three interior points at 1/4, 1/2, 3/4 of the chamber. The tail is sampled
/// as if it were the interval (w - 1, w) below its upper wall w.
std::vector<Rational> chamber_samples(const Chamber& c);

/// Closed interval [n alpha, r d_L / 2 + (n - r) alpha] of degrees compatible
/// with alpha-semistability and rk(gamma) = r. Empty when lower > upper.
std::pair<Rational, Rational> degree_window(std::int64_t n, std::int64_t twist_degree,
                                            const Rational& alpha, std::int64_t gamma_rank);

/// Largest r in 0..n with r d_L / 2 + (n - r) alpha <= d.
std::int64_t minimum_gamma_rank(const ModuliParams& params, const Rational& alpha);

}  // namespace quadric
