#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quadric/params.hpp"
#include "quadric/rational.hpp"

namespace quadric {

/// Bitmask over the summands L_1..L_n (bit i set means L_{i+1} is included).
using IndexSet = std::uint32_t;

inline constexpr std::int64_t kMaxRank = 16;

/// Split quadric bundle V = L_1 + ... + L_n together with the support pattern
/// of gamma: entry (i, j) is true when the (i, j) component of gamma is a
/// section in general position, false when it vanishes identically.
class PatternQuadricBundle {
public:
    /// Validates symmetry, the degree constraint d_L - a_i - a_j >= 0 on
    /// generic entries, and gamma != 0. Throws InvalidBundle.
    PatternQuadricBundle(std::vector<std::int64_t> degrees, std::vector<std::vector<bool>> pattern,
                         std::int64_t twist_degree, std::int64_t genus = 2);

    std::int64_t rank() const noexcept { return static_cast<std::int64_t>(degrees_.size()); }
    std::int64_t degree() const noexcept { return total_degree_; }
    std::int64_t twist_degree() const noexcept { return twist_degree_; }
    std::int64_t genus() const noexcept { return genus_; }
    const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
    bool generic(std::size_t i, std::size_t j) const { return rows_[i] >> j & 1u; }
    ModuliParams params() const { return {genus_, rank(), total_degree_, twist_degree_}; }

    IndexSet full_set() const noexcept { return (IndexSet{1} << rank()) - 1; }
    std::int64_t degree_of(IndexSet s) const noexcept;
    /// Some (i, j) with i in a, j in b is generic.
    bool block_nonzero(IndexSet a, IndexSet b) const noexcept;
    /// Union of the supports of the rows in s.
    IndexSet row_support(IndexSet s) const noexcept;

    /// Text form in the bundle-spec file format.
    std::string to_spec() const;

    friend bool operator==(const PatternQuadricBundle&, const PatternQuadricBundle&) = default;

private:
    std::vector<std::int64_t> degrees_;
    std::vector<IndexSet> rows_;
    std::int64_t twist_degree_;
    std::int64_t genus_;
    std::int64_t total_degree_;
};

/// Reads the bundle-spec format:
///   genus <int>
///   dL <int>
///   degrees <int> <int> ...
///   then n rows of n symbols from {0, *}
/// `#` starts a comment. Throws InvalidBundle with a line-specific message.
PatternQuadricBundle parse_bundle_spec(std::istream& in);
PatternQuadricBundle parse_bundle_spec_string(const std::string& text);

/// Which semistability inequality governs a subbundle.
enum class Clause {
    NonIsotropic,  // gamma(V') not inside V'^perp (x) L
    Isotropic,     // gamma(V') inside V'^perp (x) L, gamma(V') != 0
    Killed,        // gamma(V') = 0
    Filtration,    // 0 < V' < V'' < V with gamma(V') inside V''^perp (x) L
};

std::string clause_name(Clause c);

Clause subobject_class(const PatternQuadricBundle& bundle, IndexSet subset);

/// A coordinate subbundle (second empty) or a coordinate filtration
/// first < second.
struct CoordinateSubobject {
    IndexSet first = 0;
    IndexSet second = 0;

    bool is_filtration() const noexcept { return second != 0; }
    friend bool operator==(const CoordinateSubobject&, const CoordinateSubobject&) = default;
};

/// 1-based index lists, e.g. "{1,3}" or "{1} < {1,2}".
std::string to_string(const CoordinateSubobject& s);

struct Witness {
    CoordinateSubobject subobject;
    Clause clause;
    /// Right-hand side minus left-hand side of the governing inequality.
    Rational slack;
    /// For zero slack only: whether gamma splits in the block shape the
    /// polystability clause asks for.
    bool decomposes = false;
};

enum class StabilityClass { Stable, StrictlySemistable, Polystable, Unstable };

std::string class_name(StabilityClass c);
inline bool is_semistable(StabilityClass c) { return c != StabilityClass::Unstable; }

struct StabilityVerdict {
    StabilityClass cls = StabilityClass::Stable;
    /// Every subobject whose inequality holds with slack <= 0, ordered by slack
    /// then subobject. Empty exactly when the verdict is Stable, except when
    /// alpha > d/n.
    std::vector<Witness> witnesses;
    bool alpha_above_slope = false;
    bool alpha_independent = false;
};

/// Evaluates every inequality of the alpha-semistability condition over all
/// coordinate subbundles and coordinate filtrations, then decides
/// polystability on the zero-slack ones from the pattern. A verdict of
/// semistable here is necessary for, but does not imply, semistability of
/// the geometric bundle, since only coordinate subobjects are tested.
StabilityVerdict classify(const PatternQuadricBundle& bundle, const Rational& alpha);

/// One inequality of the semistability condition, stored as
/// 2 * slack(alpha) = constant + slope * alpha with integer coefficients.
struct Inequality {
    CoordinateSubobject subobject;
    Clause clause;
    std::int64_t constant;
    std::int64_t slope;
    bool decomposes;  // polystability block shape holds for this subobject

    Rational slack(const Rational& alpha) const { return (Rational(constant) + alpha * slope) / 2; }
    /// Sign of the slack at alpha: -1, 0 or 1.
    int sign(const Rational& alpha) const;
    /// Alpha at which the slack vanishes; nullopt when it is constant in alpha.
    std::optional<Rational> root() const;
};

/// The full inequality system of one bundle, built once and evaluated at
/// any number of parameters. classify() is a thin wrapper around it.
class StabilityProfile {
public:
    explicit StabilityProfile(const PatternQuadricBundle& bundle);

    const std::vector<Inequality>& inequalities() const noexcept { return inequalities_; }
    bool alpha_independent() const noexcept { return alpha_independent_; }

    StabilityVerdict classify(const Rational& alpha) const;
    /// Same class as classify(alpha).cls without building witnesses.
    StabilityClass class_at(const Rational& alpha) const;
    bool has_zero_slack(const Rational& alpha) const;

private:
    std::vector<Inequality> inequalities_;
    Rational slope_;  // d / n
    bool alpha_independent_;
};

/// Signed slack of a single subobject at alpha, using the clause the
/// subobject falls under.
Rational slack_at(const PatternQuadricBundle& bundle, const CoordinateSubobject& s, const Rational& alpha);

/// Whether the filtration first < second satisfies the hypotheses of the
/// filtration clause (gamma(V') inside V''^perp, gamma(V'') not inside V''^perp).
bool admissible_filtration(const PatternQuadricBundle& bundle, IndexSet first, IndexSet second);

/// Strictly semistable for every alpha: an isotropic half-rank subbundle of
/// half degree, or an admissible filtration with ranks and degrees summing
/// to (n, d).
bool is_alpha_independent(const PatternQuadricBundle& bundle);

struct RankOptions {
    std::uint64_t seed = 0;
    int trials = 8;
};

/// Generic rank of gamma over the pattern. Entries are drawn uniformly from
/// F_p with p = 2^31 - 1; the maximum over `trials` instantiations is
/// returned. Per-call randomness derives from the seed and the pattern, so
/// results are deterministic.
std::int64_t generic_rank(const PatternQuadricBundle& bundle, const RankOptions& options = {});

/// Semistability of V = L_1 + ... + L_n as a vector bundle: the k largest
/// degrees sum to at most k d / n for every k.
bool underlying_bundle_semistable(const PatternQuadricBundle& bundle);

}  // namespace quadric
