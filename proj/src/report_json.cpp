#include "quadric/report_json.hpp"

#include <map>
#include <set>

#include "quadric/errors.hpp"

namespace quadric {

namespace {

const std::map<std::string, std::string>& catalog() {
    static const std::map<std::string, std::string> c = {
        {"alpha_semistability",
         "alpha-semistability: alpha <= d/n and, for every proper subbundle V', deg V' <= d + alpha(rk V' - n) "
         "if V' is not isotropic, deg V' <= d/2 + alpha(rk V' - n/2) if it is, deg V' <= alpha rk V' if "
         "gamma(V') = 0; for admissible filtrations V' < V'', deg V' + deg V'' <= d + alpha(rk V' + rk V'' - n)"},
        {"alpha_independent",
         "alpha-independently strictly semistable: isotropic V' with rk = n/2, deg = d/2, or an admissible "
         "filtration with rk V' + rk V'' = n and deg V' + deg V'' = d"},
        {"critical_forms",
         "critical values are d/n, (d - d')/(n - n'), (d - 2d')/(n - 2n'), d'/n' or "
         "(d - d' - d'')/(n - n' - n'')"},
        {"critical_window", "every critical value lies in [alpha_m, alpha_M] = [d - (n-1) d_L / 2, d / n]"},
        {"chamber_constancy", "alpha-semistability does not change between consecutive critical values"},
        {"tail_isomorphism", "for alpha_1, alpha_2 < alpha_m the moduli spaces are isomorphic"},
        {"degree_bound", "alpha-semistable implies n alpha <= d <= rk(gamma) d_L / 2 + (n - rk(gamma)) alpha"},
        {"large_parameter", "semistable just below alpha_M implies the underlying bundle is semistable"},
        {"forgetful_fiber",
         "over stable bundles the forgetful map is a P^N bundle, N = (-d + (n/2)(d_L + 1 - g))(n + 1) - 1, "
         "when d < (n/2)(d_L + 2 - 2g)"},
        {"forgetful_surjective", "the forgetful map is surjective when d < (n/2)(d_L + 1 - g)"},
        {"orthogonal_max_degree", "for d_L even and d = n d_L / 2 the moduli space is M_O(n,C) for any alpha < alpha_M"},
        {"component_bound", "for n >= 3 and d_L even the maximal-degree moduli space has at least 2 * 2^(2g) components"},
        {"twisted_orthogonal",
         "for d_L odd and d = n d_L / 2 the moduli space is that of L-twisted orthogonal bundles"},
        {"rank2_walls", "in rank 2 every critical value other than d/2 is an integer"},
        {"rank2_dimension", "for d < d_L - g + 1, dim N_alpha(d) = 3(d_L - d) + g - 1"},
        {"flip_codim", "for d < d_L - g + 1 the flip loci at every wall have codimension > g - 1"},
        {"rank2_connected", "for d < d_L - g + 1 and alpha <= d/2, N_alpha(d) is connected and non-empty"},
        {"milnor_wood", "M_d(Sp(2n,R)) is empty unless |d| <= n(g - 1)"},
        {"minima_quadric",
         "for 0 < d < n(g - 1) the local minima of the Hitchin function are exactly the beta = 0 locus, "
         "i.e. K-quadric bundles; for n(1 - g) < d < 0 it is gamma that vanishes"},
        {"toledo_duality", "(V, beta, gamma) -> (V*, gamma, beta) identifies M_d and M_{-d}"},
        {"sp4_connected", "for 0 < |d| < 2g - 2, M_d(Sp(4,R)) and R_d(Sp(4,R)) are connected"},
        {"so23_connected", "for 0 < |d| < 2g - 2 and any w, M_{d,w}(SO0(2,3)) and R_{d,w}(SO0(2,3)) are connected"},
        {"so23_twist", "SO0(2,3)-Higgs bundles are studied through L_0 K-quadric bundles with deg L_0 = 1"},
        {"fixed_det_fiber",
         "rank 2, fixed determinant: the forgetful map is a P^{3(d_L - d + 1 - g) - 1} bundle over the stable "
         "locus when d < d_L + 2 - 2g"},
        {"irreducible", "for g >= 2 and d < d_L + 2 - 2g, N_alpha(Lambda) is irreducible"},
        {"simply_connected",
         "for g >= 3, or g = 2 and d odd, and d < d_L + 2 - 2g, the smooth locus of N_alpha(Lambda) is "
         "simply connected for alpha < alpha_M"},
        {"cohomology",
         "for g >= 4 and d < d_L + 2 - 2g the torsion-free parts are H^1 = 0, H^2 = Z + Z, H^3 = H^1(X, Z) "
         "(rank 2g), and Pic = Z + Z"},
        {"torelli", "for g >= 5 and d < d_L + 2 - 2g, N_alpha(Lambda) determines the curve X"},
        {"coordinate_model",
         "pattern model: V is a sum of line bundles with generic gamma entries; only coordinate subbundles and "
         "filtrations are tested, so a semistable verdict is necessary, not sufficient"},
    };
    return c;
}

json envelope(const std::string& command, json inputs, json results, std::set<std::string> cites,
              std::uint64_t seed) {
    json c = json::array();
    for (const auto& id : cites) c.push_back({{"id", id}, {"statement", citation_statement(id)}});
    return {{"tool_version", kToolVersion}, {"command", command},  {"inputs", std::move(inputs)},
            {"results", std::move(results)}, {"citations", std::move(c)}, {"seed", seed}};
}

json fact(json value, const std::string& cite) { return {{"value", std::move(value)}, {"cite", cite}}; }

json params_json(const ModuliParams& p) {
    return {{"genus", p.genus}, {"rank", p.rank}, {"degree", p.degree}, {"twist_degree", p.twist_degree}};
}

json witness_json(const Witness& w) {
    return {{"subobject", to_string(w.subobject)},
            {"clause", clause_name(w.clause)},
            {"slack", to_json(w.slack)},
            {"decomposes", w.decomposes}};
}

}  // namespace

const std::string& citation_statement(const std::string& id) { return catalog().at(id); }

json to_json(const Rational& x) {
    return {{"num", x.numerator()}, {"den", x.denominator()}, {"decimal", to_decimal(x)}};
}

Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json to_json(const CriticalValue& w) {
    json witnesses = json::array();
    for (const auto& p : w.witnesses) {
        json entry = {{"form", provenance_tag(p)}};
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, wall::Filtration>) {
                    entry["sub_ranks"] = {v.rank1, v.rank2};
                    entry["sub_degrees"] = {v.degree1, v.degree2};
                } else if constexpr (!std::is_same_v<T, wall::Top>) {
                    entry["sub_rank"] = v.sub_rank;
                    entry["sub_degree"] = v.sub_degree;
                }
            },
            p);
        witnesses.push_back(std::move(entry));
    }
    return {{"value", to_json(w.value)}, {"witnesses", std::move(witnesses)}};
}

json to_json(const Chamber& c) {
    return {{"lower", c.lower ? to_json(*c.lower) : json(nullptr)},
            {"upper", to_json(c.upper)},
            {"kind", c.is_tail() ? "tail" : "interval"}};
}

json to_json(const StabilityVerdict& v) {
    json w = json::array();
    for (const auto& x : v.witnesses) w.push_back(witness_json(x));
    return {{"class", class_name(v.cls)},
            {"alpha_above_slope", v.alpha_above_slope},
            {"alpha_independent", v.alpha_independent},
            {"witnesses", std::move(w)}};
}

json to_json(const PatternQuadricBundle& b) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.degrees().size(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < b.degrees().size(); ++j) {
            if (j) row += ' ';
            row += b.generic(i, j) ? '*' : '0';
        }
        rows.push_back(row);
    }
    return {{"genus", b.genus()}, {"twist_degree", b.twist_degree()}, {"degrees", b.degrees()}, {"pattern", rows}};
}

json chambers_document(const ModuliParams& params, std::uint64_t seed) {
    const auto walls = enumerate_critical_values(params);
    const auto cells = chambers_from_walls(walls);
    const auto [lo, hi] = alpha_extremes(params);
    json w = json::array();
    for (const auto& x : walls) w.push_back(to_json(x));
    json c = json::array();
    for (const auto& x : cells) {
        auto entry = to_json(x);
        entry["cite"] = x.is_tail() ? "tail_isomorphism" : "chamber_constancy";
        c.push_back(std::move(entry));
    }
    json results = {{"alpha_m", to_json(lo)},
                    {"alpha_M", to_json(hi)},
                    {"walls", fact(std::move(w), "critical_forms")},
                    {"window", fact("every wall lies in [alpha_m, alpha_M]", "critical_window")},
                    {"chambers", std::move(c)},
                    {"candidate_set", true}};
    return envelope("chambers", params_json(params), std::move(results),
                    {"critical_forms", "critical_window", "chamber_constancy", "tail_isomorphism"}, seed);
}

json check_document(const PatternQuadricBundle& bundle, const Rational& alpha, std::uint64_t seed) {
    const auto verdict = classify(bundle, alpha);
    json results = to_json(verdict);
    results["alpha"] = to_json(alpha);
    results["cite"] = "alpha_semistability";
    results["generic_rank"] = generic_rank(bundle, {seed});
    results["vector_bundle_semistable"] = underlying_bundle_semistable(bundle);
    json inputs = {{"bundle", to_json(bundle)}, {"alpha", to_json(alpha)}};
    return envelope("check", std::move(inputs), std::move(results),
                    {"alpha_semistability", "alpha_independent", "coordinate_model"}, seed);
}

json check_all_chambers_document(const PatternQuadricBundle& bundle, std::uint64_t seed) {
    const StabilityProfile profile(bundle);
    const auto walls = enumerate_critical_values(bundle.params());
    const auto cells = chambers_from_walls(walls);

    json chamber_list = json::array();
    std::vector<StabilityClass> middle;
    for (const auto& c : cells) {
        json samples = json::array();
        std::vector<StabilityClass> classes;
        for (const auto& a : chamber_samples(c)) {
            classes.push_back(profile.class_at(a));
            samples.push_back({{"alpha", to_json(a)}, {"class", class_name(classes.back())}});
        }
        const bool constant = classes[0] == classes[1] && classes[1] == classes[2];
        auto entry = to_json(c);
        entry["samples"] = std::move(samples);
        entry["class"] = constant ? json(class_name(classes[1])) : json(nullptr);
        entry["cite"] = "chamber_constancy";
        chamber_list.push_back(std::move(entry));
        middle.push_back(classes[1]);
    }

    json crossings = json::array();
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (middle[i] == middle[i + 1]) continue;
        const auto at_wall = profile.classify(cells[i].upper);
        json zero = json::array();
        for (const auto& w : at_wall.witnesses)
            if (w.slack == Rational(0)) zero.push_back(witness_json(w));
        crossings.push_back({{"wall", to_json(cells[i].upper)},
                             {"below", class_name(middle[i])},
                             {"above", class_name(middle[i + 1])},
                             {"at_wall", class_name(at_wall.cls)},
                             {"zero_slack_witnesses", std::move(zero)}});
    }

    json wall_list = json::array();
    for (const auto& w : walls) wall_list.push_back(to_json(w.value));
    json results = {{"walls", std::move(wall_list)},
                    {"chambers", std::move(chamber_list)},
                    {"wall_crossings", std::move(crossings)},
                    {"alpha_independent", profile.alpha_independent()},
                    {"generic_rank", generic_rank(bundle, {seed})},
                    {"vector_bundle_semistable", underlying_bundle_semistable(bundle)}};
    json inputs = {{"bundle", to_json(bundle)}, {"all_chambers", true}};
    return envelope("check", std::move(inputs), std::move(results),
                    {"alpha_semistability", "chamber_constancy", "critical_forms", "coordinate_model"}, seed);
}

json sweep_document(const SweepResult& r) {
    json props = json::array();
    for (const auto& t : r.tallies) {
        json ces = json::array();
        for (const auto& ce : t.counterexamples)
            ces.push_back({{"bundle", ce.bundle}, {"alpha", ce.alpha}, {"detail", ce.detail}});
        props.push_back({{"name", property_name(t.property)},
                         {"statement", property_citation(t.property)},
                         {"checked", t.checked},
                         {"violations", t.violations},
                         {"counterexamples", std::move(ces)}});
    }
    json inputs = {{"n_max", r.config.n_max},       {"deg_bound", r.config.deg_bound},
                   {"dL_min", r.config.dL_min},     {"dL_max", r.config.dL_max},
                   {"genus", r.config.genus},       {"rank_trials", r.config.rank_trials}};
    json results = {{"bundles", r.bundles},
                    {"feasible_bundles", r.feasible_bundles},
                    {"evaluations", r.evaluations},
                    {"properties", std::move(props)},
                    {"total_violations", r.total_violations()},
                    {"cite", "coordinate_model"}};
    return envelope("sweep", std::move(inputs), std::move(results), {"coordinate_model"}, r.config.seed);
}

json rank2_document(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                    std::optional<Rational> alpha, std::uint64_t seed) {
    const auto r = rank2_report(genus, degree, twist_degree, alpha);
    json walls = json::array();
    for (const auto& w : r.walls) walls.push_back(to_json(w));
    json flags = json::object();
    for (const auto& f : r.preconditions_met) flags[f.name] = f.value;
    json results = {
        {"walls", fact(std::move(walls), "rank2_walls")},
        {"expected_dim", r.expected_dim ? fact(*r.expected_dim, "rank2_dimension") : json(nullptr)},
        {"flip_codim_lower_bound", fact(r.flip_codim_lower_bound, "flip_codim")},
        {"connectedness", fact(connectedness_name(r.connectedness), "rank2_connected")},
        {"preconditions_met", std::move(flags)},
    };
    json inputs = {{"genus", genus}, {"degree", degree}, {"twist_degree", twist_degree}, {"rank", 2},
                   {"alpha", alpha ? to_json(*alpha) : json(nullptr)}};
    return envelope("report rank2", std::move(inputs), std::move(results),
                    {"rank2_walls", "rank2_dimension", "flip_codim", "rank2_connected"}, seed);
}

json higgs_document(HiggsGroup group, std::int64_t n, std::int64_t genus, std::int64_t toledo,
                    std::optional<int> stiefel_whitney, std::uint64_t seed) {
    const auto r = higgs_report(group, n, genus, toledo, stiefel_whitney);
    const std::string connected_cite = group == HiggsGroup::Sp2n ? "sp4_connected" : "so23_connected";
    json results = {
        {"milnor_wood_bound", fact(r.milnor_wood_bound, "milnor_wood")},
        {"empty", fact(r.empty, "milnor_wood")},
        {"twist_degree", fact(r.twist_degree, group == HiggsGroup::Sp2n ? "minima_quadric" : "so23_twist")},
        {"minima_beta_vanishes", fact(r.minima_beta_vanishes, "minima_quadric")},
        {"minima_gamma_vanishes", fact(r.minima_gamma_vanishes, "minima_quadric")},
        {"minima_are_quadric_bundles", fact(r.minima_are_quadric_bundles, "minima_quadric")},
        {"dual_toledo", fact(r.dual_toledo, "toledo_duality")},
        {"connected", r.connected ? fact(*r.connected, connected_cite) : json(nullptr)},
    };
    json inputs = {{"group", group_name(group)}, {"n", n}, {"genus", genus}, {"toledo", toledo},
                   {"w", stiefel_whitney ? json(*stiefel_whitney) : json(nullptr)}};
    std::set<std::string> cites = {"milnor_wood", "minima_quadric", "toledo_duality", connected_cite};
    if (group == HiggsGroup::SO023) cites.insert("so23_twist");
    return envelope("report higgs", std::move(inputs), std::move(results), std::move(cites), seed);
}

json geometry_document(std::optional<std::int64_t> n, std::int64_t genus, std::int64_t degree,
                       std::int64_t twist_degree, std::uint64_t seed) {
    const std::int64_t rank = n.value_or(2);
    json fiber = nullptr;
    std::string fiber_note;
    try {
        const auto f = fiber_dimension(rank, genus, degree, twist_degree);
        fiber = {{"fiber_dim", fact(*f.fiber_dim, "forgetful_fiber")},
                 {"surjective", fact(*f.surjective, "forgetful_surjective")}};
        if (rank == 2)
            fiber["fixed_determinant_fiber_dim"] =
                fact(fixed_determinant_fiber_dimension(genus, degree, twist_degree), "fixed_det_fiber");
    } catch (const PreconditionFailed& e) {
        fiber_note = e.what();
    }

    json results = {{"forgetful_map", fiber}};
    if (!fiber_note.empty()) results["forgetful_map_precondition"] = fiber_note;
    if (rank == 2) {
        const auto c = cohomology_report(genus, degree, twist_degree);
        results["betti"] = c.betti ? fact(*c.betti, "cohomology") : json(nullptr);
        results["picard_rank"] = c.picard_rank ? fact(*c.picard_rank, "cohomology") : json(nullptr);
        results["irreducible"] = fact(*c.irreducible, "irreducible");
        results["smooth_locus_simply_connected"] = fact(*c.smooth_locus_simply_connected, "simply_connected");
        results["torelli_applies"] = fact(*c.torelli_applies, "torelli");
    }
    json inputs = {{"n", rank}, {"genus", genus}, {"degree", degree}, {"twist_degree", twist_degree}};
    std::set<std::string> cites = {"forgetful_fiber", "forgetful_surjective"};
    if (rank == 2) cites.insert({"fixed_det_fiber", "cohomology", "irreducible", "simply_connected", "torelli"});
    return envelope("report geometry", std::move(inputs), std::move(results), std::move(cites), seed);
}

json maxdeg_document(std::int64_t n, std::int64_t twist_degree, std::int64_t genus, std::uint64_t seed) {
    const auto r = max_degree_report(n, twist_degree, genus);
    const bool orth = r.kind == MaxDegreeKind::Orthogonal;
    json results = {
        {"degree", r.degree},
        {"classification", fact(max_degree_kind_name(r.kind), orth ? "orthogonal_max_degree" : "twisted_orthogonal")},
        {"component_lower_bound",
         r.component_lower_bound ? fact(*r.component_lower_bound, "component_bound") : json(nullptr)},
        {"isomorphic_for_all_alpha_below_alpha_M", fact(true, "tail_isomorphism")},
    };
    json inputs = {{"n", n}, {"twist_degree", twist_degree}, {"genus", genus}};
    std::set<std::string> cites = {"tail_isomorphism", orth ? "orthogonal_max_degree" : "twisted_orthogonal"};
    if (r.component_lower_bound) cites.insert("component_bound");
    return envelope("report maxdeg", std::move(inputs), std::move(results), std::move(cites), seed);
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace quadric
