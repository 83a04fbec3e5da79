#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadric/params.hpp"
#include "quadric/rational.hpp"

namespace quadric {

// Rank 2, non-maximal degree (2 alpha <= d < d_L).

/// {d/2} together with every integer in [d - d_L/2, d/2], sorted.
/// Throws MaximalDegree when d >= d_L.
std::vector<Rational> rank2_walls(std::int64_t degree, std::int64_t twist_degree);

/// 3 (d_L - d) + g - 1. Throws PreconditionFailed unless d < d_L - g + 1.
std::int64_t expected_dimension(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree);

/// g - 1: every flip locus has codimension strictly greater than this.
/// Throws PreconditionFailed for g < 2.
std::int64_t flip_codim_bound(std::int64_t genus);

enum class Connectedness { ConnectedNonempty, NotEstablished };
std::string connectedness_name(Connectedness c);

/// ConnectedNonempty exactly when d < d_L - g + 1 and alpha <= d/2. Outside
/// that range nothing is asserted.
Connectedness connectedness_verdict(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                                    const Rational& alpha);

struct NamedFlag {
    std::string name;
    bool value;
};

struct Rank2Report {
    ModuliParams params;
    std::vector<Rational> walls;
    std::optional<std::int64_t> expected_dim;
    std::int64_t flip_codim_lower_bound;
    /// For every alpha <= d/2 (or the given alpha when one was supplied).
    Connectedness connectedness;
    std::optional<Rational> alpha;
    std::vector<NamedFlag> preconditions_met;
};

Rank2Report rank2_report(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                         std::optional<Rational> alpha = std::nullopt);

// Higgs bundles for Sp(2n, R) and SO_0(2,3).

enum class HiggsGroup { Sp2n, SO023 };
std::string group_name(HiggsGroup g);

struct HiggsReport {
    HiggsGroup group;
    std::int64_t n;
    std::int64_t genus;
    std::int64_t toledo;
    std::optional<int> stiefel_whitney;  // SO_0(2,3) only, carried through untouched

    std::int64_t milnor_wood_bound;  // n (g - 1)
    bool empty;                      // |d| > n (g - 1)
    std::int64_t twist_degree;       // 2g - 2 for K, 2g - 1 for L_0 K
    bool minima_beta_vanishes;       // 0 < d < n (g - 1): minima are K-quadric bundles
    bool minima_gamma_vanishes;      // n (1 - g) < d < 0: the dual side
    bool minima_are_quadric_bundles;
    std::int64_t dual_toledo;        // M_d and M_{-d} are isomorphic
    std::optional<bool> connected;   // set only in the rank-2 connectedness range
};

/// Throws PreconditionFailed for n < 1, g < 2, or SO_0(2,3) with n != 2.
HiggsReport higgs_report(HiggsGroup group, std::int64_t n, std::int64_t genus, std::int64_t toledo,
                         std::optional<int> stiefel_whitney = std::nullopt);

// Geometry of the large-parameter and fixed-determinant moduli spaces.

struct GeometryFacts {
    std::optional<std::int64_t> fiber_dim;
    std::optional<bool> surjective;
    std::optional<std::array<std::int64_t, 3>> betti;  // torsion-free ranks of H^1, H^2, H^3
    std::optional<std::int64_t> picard_rank;
    std::optional<bool> irreducible;
    std::optional<bool> smooth_locus_simply_connected;
    std::optional<bool> torelli_applies;
};

/// Forgetful map N_{alpha_M^-}(n, d) -> M(n, d): fiber P^N with
/// N = (-d + (n/2)(d_L + 1 - g))(n + 1) - 1 over the stable locus, and
/// surjectivity when d < (n/2)(d_L + 1 - g).
/// Throws PreconditionFailed unless d < (n/2)(d_L + 2 - 2g).
GeometryFacts fiber_dimension(std::int64_t n, std::int64_t genus, std::int64_t degree, std::int64_t twist_degree);

/// Rank-2 fixed-determinant fiber exponent 3 (d_L - d + 1 - g) - 1.
/// Throws PreconditionFailed unless d < d_L + 2 - 2g.
std::int64_t fixed_determinant_fiber_dimension(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree);

/// Rank-2 fixed-determinant facts, each present only under its own hypotheses.
GeometryFacts cohomology_report(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree);

enum class MaxDegreeKind { Orthogonal, LTwistedOrthogonal };
std::string max_degree_kind_name(MaxDegreeKind k);

struct MaxDegreeReport {
    std::int64_t n;
    std::int64_t twist_degree;
    std::int64_t genus;
    std::int64_t degree;  // n d_L / 2
    MaxDegreeKind kind;
    /// 2 * 2^(2g) when d_L is even and n >= 3.
    std::optional<std::int64_t> component_lower_bound;
};

/// Throws NonIntegralDegree when n d_L is odd.
MaxDegreeReport max_degree_report(std::int64_t n, std::int64_t twist_degree, std::int64_t genus);

}  // namespace quadric
