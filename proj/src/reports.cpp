#include "quadric/reports.hpp"

#include <cstdlib>
#include <set>

#include "quadric/errors.hpp"

namespace quadric {

std::vector<Rational> rank2_walls(std::int64_t degree, std::int64_t twist_degree) {
    if (degree >= twist_degree)
        throw MaximalDegree("rank-2 walls need d < d_L, got d = " + std::to_string(degree) +
                            ", d_L = " + std::to_string(twist_degree));
    const Rational top(degree, 2);
    const Rational bottom = Rational(degree) - Rational(twist_degree, 2);
    std::set<Rational> walls{top};
    for (auto k = ceil(bottom); k <= floor(top); ++k) walls.insert(Rational(k));
    return {walls.begin(), walls.end()};
}

std::int64_t expected_dimension(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree) {
    if (degree >= twist_degree - genus + 1)
        throw PreconditionFailed("dimension formula needs d < d_L - g + 1 = " +
                                 std::to_string(twist_degree - genus + 1));
    return 3 * (twist_degree - degree) + genus - 1;
}

std::int64_t flip_codim_bound(std::int64_t genus) {
    if (genus < 2) throw PreconditionFailed("genus must be at least 2");
    return genus - 1;
}

std::string connectedness_name(Connectedness c) {
    return c == Connectedness::ConnectedNonempty ? "connected_nonempty" : "not_established";
}

Connectedness connectedness_verdict(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                                    const Rational& alpha) {
    if (degree < twist_degree - genus + 1 && alpha <= Rational(degree, 2)) return Connectedness::ConnectedNonempty;
    return Connectedness::NotEstablished;
}

Rank2Report rank2_report(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                         std::optional<Rational> alpha) {
    if (genus < 2) throw PreconditionFailed("genus must be at least 2");
    Rank2Report r;
    r.params = {genus, 2, degree, twist_degree};
    r.walls = rank2_walls(degree, twist_degree);
    const bool dim_range = degree < twist_degree - genus + 1;
    if (dim_range) r.expected_dim = expected_dimension(genus, degree, twist_degree);
    r.flip_codim_lower_bound = flip_codim_bound(genus);
    r.alpha = alpha;
    r.connectedness = connectedness_verdict(genus, degree, twist_degree, alpha.value_or(Rational(degree, 2)));
    r.preconditions_met = {
        {"non_maximal_degree", true},
        {"d_below_dL_minus_g_plus_1", dim_range},
    };
    if (alpha) r.preconditions_met.push_back({"alpha_at_most_d_over_2", *alpha <= Rational(degree, 2)});
    return r;
}

std::string group_name(HiggsGroup g) { return g == HiggsGroup::Sp2n ? "Sp(2n,R)" : "SO0(2,3)"; }

HiggsReport higgs_report(HiggsGroup group, std::int64_t n, std::int64_t genus, std::int64_t toledo,
                         std::optional<int> stiefel_whitney) {
    if (n < 1) throw PreconditionFailed("n must be at least 1");
    if (genus < 2) throw PreconditionFailed("genus must be at least 2");
    if (group == HiggsGroup::SO023 && n != 2) throw PreconditionFailed("SO0(2,3) corresponds to n = 2");
    if (stiefel_whitney && (group != HiggsGroup::SO023 || (*stiefel_whitney != 0 && *stiefel_whitney != 1)))
        throw PreconditionFailed("a class w in Z/2 is only defined for SO0(2,3)");

    HiggsReport r{};
    r.group = group;
    r.n = n;
    r.genus = genus;
    r.toledo = toledo;
    r.stiefel_whitney = stiefel_whitney;
    r.milnor_wood_bound = n * (genus - 1);
    r.empty = std::llabs(toledo) > r.milnor_wood_bound;
    r.twist_degree = group == HiggsGroup::Sp2n ? 2 * genus - 2 : 2 * genus - 1;
    r.minima_beta_vanishes = 0 < toledo && toledo < r.milnor_wood_bound;
    r.minima_gamma_vanishes = -r.milnor_wood_bound < toledo && toledo < 0;
    r.minima_are_quadric_bundles = r.minima_beta_vanishes || r.minima_gamma_vanishes;
    r.dual_toledo = -toledo;
    if (n == 2 && toledo != 0 && std::llabs(toledo) < 2 * genus - 2) r.connected = true;
    return r;
}

GeometryFacts fiber_dimension(std::int64_t n, std::int64_t genus, std::int64_t degree, std::int64_t twist_degree) {
    if (n < 1) throw PreconditionFailed("n must be at least 1");
    if (2 * degree >= n * (twist_degree + 2 - 2 * genus))
        throw PreconditionFailed("projective-bundle structure needs d < (n/2)(d_L + 2 - 2g) = " +
                                 to_string(Rational(n * (twist_degree + 2 - 2 * genus), 2)));
    const Rational sections_per = Rational(-degree) + Rational(n * (twist_degree + 1 - genus), 2);
    const Rational dim = sections_per * (n + 1) - 1;
    GeometryFacts f;
    f.fiber_dim = dim.numerator();  // n (n + 1) / 2 is integral, so dim is too
    f.surjective = 2 * degree < n * (twist_degree + 1 - genus);
    return f;
}

std::int64_t fixed_determinant_fiber_dimension(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree) {
    if (degree >= twist_degree + 2 - 2 * genus)
        throw PreconditionFailed("fixed-determinant fiber needs d < d_L + 2 - 2g");
    return 3 * (twist_degree - degree + 1 - genus) - 1;
}

GeometryFacts cohomology_report(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree) {
    const bool low_degree = degree < twist_degree + 2 - 2 * genus;
    GeometryFacts f;
    if (genus >= 4 && low_degree) {
        f.betti = std::array<std::int64_t, 3>{0, 2, 2 * genus};
        f.picard_rank = 2;
    }
    f.irreducible = genus >= 2 && low_degree;
    f.smooth_locus_simply_connected = (genus >= 3 || (genus == 2 && degree % 2 != 0)) && low_degree;
    f.torelli_applies = genus >= 5 && low_degree;
    return f;
}

std::string max_degree_kind_name(MaxDegreeKind k) {
    return k == MaxDegreeKind::Orthogonal ? "orthogonal" : "L_twisted_orthogonal";
}

MaxDegreeReport max_degree_report(std::int64_t n, std::int64_t twist_degree, std::int64_t genus) {
    if (n < 1) throw PreconditionFailed("n must be at least 1");
    if (genus < 2) throw PreconditionFailed("genus must be at least 2");
    if ((n * twist_degree) % 2 != 0)
        throw NonIntegralDegree("n d_L / 2 = " + to_string(Rational(n * twist_degree, 2)) + " is not an integer");
    MaxDegreeReport r{n, twist_degree, genus, n * twist_degree / 2, MaxDegreeKind::Orthogonal, std::nullopt};
    if (twist_degree % 2 != 0) {
        r.kind = MaxDegreeKind::LTwistedOrthogonal;
    } else if (n >= 3) {
        if (2 * genus + 1 >= 63) throw PreconditionFailed("component bound 2^(2g+1) overflows 64 bits");
        r.component_lower_bound = std::int64_t{2} << (2 * genus);
    }
    return r;
}

}  // namespace quadric
