// quadric: critical values, chambers, stability checks and invariant reports
// for L-quadric bundles on a curve.
//
// Exit codes: 0 success, 1 sweep found a property violation, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadric/errors.hpp"
#include "quadric/report_json.hpp"

namespace {

using quadric::json;

std::string rat(const json& r) {
    if (r.is_null()) return "-inf";
    const auto num = r.at("num").get<std::int64_t>();
    const auto den = r.at("den").get<std::int64_t>();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string value_text(const json& v) {
    if (v.is_null()) return "n/a";
    if (v.is_object() && v.contains("value")) return value_text(v.at("value"));
    if (v.is_object() && v.contains("num")) return rat(v);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + value_text(v[i]);
        return out + ")";
    }
    return v.dump();
}

void print_citations(std::ostream& os, const json& doc) {
    os << "\nreferences:\n";
    for (const auto& c : doc.at("citations"))
        os << "  [" << c.at("id").get<std::string>() << "] " << c.at("statement").get<std::string>() << "\n";
}

void text_chambers(std::ostream& os, const json& doc) {
    const auto& in = doc.at("inputs");
    const auto& res = doc.at("results");
    os << "n = " << in.at("rank") << ", d = " << in.at("degree") << ", d_L = " << in.at("twist_degree") << "\n";
    os << "alpha_m = " << rat(res.at("alpha_m")) << ", alpha_M = " << rat(res.at("alpha_M")) << "\n\n";
    os << "candidate walls:\n";
    for (const auto& w : res.at("walls").at("value")) {
        os << "  " << std::left << std::setw(8) << rat(w.at("value")) << " ";
        bool first = true;
        for (const auto& p : w.at("witnesses")) {
            os << (first ? "" : ", ") << p.at("form").get<std::string>();
            if (p.contains("sub_rank")) os << "(n'=" << p.at("sub_rank") << ",d'=" << p.at("sub_degree") << ")";
            if (p.contains("sub_ranks"))
                os << "(n'=" << p.at("sub_ranks")[0] << ",n''=" << p.at("sub_ranks")[1]
                   << ",d'+d''=" << (p.at("sub_degrees")[0].get<std::int64_t>() + p.at("sub_degrees")[1].get<std::int64_t>())
                   << ")";
            first = false;
        }
        os << "\n";
    }
    os << "\nchambers:\n";
    for (const auto& c : res.at("chambers"))
        os << "  (" << rat(c.at("lower")) << ", " << rat(c.at("upper")) << ")"
           << (c.at("kind") == "tail" ? "  all moduli spaces isomorphic here" : "") << "\n";
}

void text_check(std::ostream& os, const json& doc) {
    const auto& res = doc.at("results");
    if (res.contains("class")) {
        os << "alpha = " << rat(res.at("alpha")) << ": " << res.at("class").get<std::string>();
        if (res.at("alpha_above_slope").get<bool>()) os << " (alpha > d/n)";
        os << "\n";
        for (const auto& w : res.at("witnesses"))
            os << "  " << std::left << std::setw(14) << w.at("subobject").get<std::string>() << " clause "
               << std::setw(3) << w.at("clause").get<std::string>() << " slack " << rat(w.at("slack"))
               << (w.at("decomposes").get<bool>() ? "  splits" : "") << "\n";
    } else {
        for (const auto& c : res.at("chambers"))
            os << "  (" << rat(c.at("lower")) << ", " << rat(c.at("upper")) << ")  "
               << (c.at("class").is_null() ? std::string("not constant") : c.at("class").get<std::string>()) << "\n";
        for (const auto& x : res.at("wall_crossings")) {
            os << "  wall " << rat(x.at("wall")) << ": " << x.at("below").get<std::string>() << " -> "
               << x.at("above").get<std::string>() << ", at wall " << x.at("at_wall").get<std::string>() << "\n";
            for (const auto& w : x.at("zero_slack_witnesses"))
                os << "    " << w.at("subobject").get<std::string>() << " clause " << w.at("clause").get<std::string>()
                   << "\n";
        }
    }
    os << "generic rank of gamma: " << res.at("generic_rank") << "\n";
    os << "alpha-independent: " << (res.at("alpha_independent").get<bool>() ? "yes" : "no") << "\n";
    os << "underlying bundle semistable: " << (res.at("vector_bundle_semistable").get<bool>() ? "yes" : "no") << "\n";
}

void text_sweep(std::ostream& os, const json& doc) {
    const auto& res = doc.at("results");
    os << "bundles " << res.at("bundles") << ", feasible " << res.at("feasible_bundles") << ", evaluations "
       << res.at("evaluations") << "\n";
    for (const auto& p : res.at("properties")) {
        os << "  " << std::left << std::setw(40) << p.at("name").get<std::string>() << " checked "
           << std::setw(10) << p.at("checked").get<std::uint64_t>() << " violations " << p.at("violations") << "\n";
        for (const auto& ce : p.at("counterexamples")) {
            os << "    alpha " << ce.at("alpha").get<std::string>() << ": " << ce.at("detail").get<std::string>() << "\n";
            std::istringstream spec(ce.at("bundle").get<std::string>());
            for (std::string line; std::getline(spec, line);) os << "      " << line << "\n";
        }
    }
    os << "total violations: " << res.at("total_violations") << "\n";
}

void text_report(std::ostream& os, const json& doc) {
    os << doc.at("command").get<std::string>() << "\n";
    for (const auto& [key, value] : doc.at("results").items()) {
        if (key == "forgetful_map" && value.is_object()) {
            for (const auto& [k, v] : value.items()) os << "  " << std::left << std::setw(34) << k << value_text(v) << "\n";
            continue;
        }
        if (key == "preconditions_met") {
            for (const auto& [k, v] : value.items()) os << "  precondition " << k << ": " << v.dump() << "\n";
            continue;
        }
        os << "  " << std::left << std::setw(34) << key << value_text(value) << "\n";
    }
}

struct Output {
    bool json = false;
    bool text = false;
    std::uint64_t seed = 0;
};

void add_output_flags(CLI::App* cmd, Output& out) {
    auto* j = cmd->add_flag("--json", out.json, "Emit the JSON report");
    auto* t = cmd->add_flag("--text", out.text, "Emit a text summary (default)");
    j->excludes(t);
    cmd->add_option("--seed", out.seed, "Master seed for randomized generic rank")->capture_default_str();
}

void emit(const json& doc, const Output& out, void (*text)(std::ostream&, const json&)) {
    if (out.json) {
        std::cout << quadric::dump_document(doc);
        return;
    }
    text(std::cout, doc);
    print_citations(std::cout, doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability chambers and invariants of L-quadric bundles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", quadric::kToolVersion);

    Output out;
    std::function<int()> run;

    // chambers
    std::int64_t n = 1, d = 0, dl = 0, genus = 2;
    auto* chambers = app.add_subcommand("chambers", "Candidate walls and chambers for (n, d, d_L)");
    chambers->add_option("-n,--n", n, "Rank")->required();
    chambers->add_option("-d,--d", d, "Degree")->required()->allow_extra_args(false);
    chambers->add_option("--dL", dl, "Degree of the twisting line bundle")->required();
    chambers->add_option("-g,--genus", genus, "Genus")->capture_default_str();
    add_output_flags(chambers, out);
    chambers->callback([&] {
        run = [&] {
            emit(quadric::chambers_document({genus, n, d, dl}, out.seed), out, text_chambers);
            return 0;
        };
    });

    // check
    std::string bundle_file, alpha_text;
    bool all_chambers = false;
    auto* check = app.add_subcommand("check", "Classify a pattern bundle at alpha or on every chamber");
    check->add_option("bundle", bundle_file, "Bundle-spec file")->required();
    auto* alpha_opt = check->add_option("--alpha", alpha_text, "Stability parameter, e.g. -1 or 3/2");
    auto* all_opt = check->add_flag("--all-chambers", all_chambers, "Sample every chamber");
    alpha_opt->excludes(all_opt);
    add_output_flags(check, out);
    check->callback([&] {
        run = [&] {
            std::ifstream in(bundle_file);
            if (!in) throw quadric::InvalidBundle("cannot open '" + bundle_file + "'");
            const auto bundle = quadric::parse_bundle_spec(in);
            if (all_chambers) {
                emit(quadric::check_all_chambers_document(bundle, out.seed), out, text_check);
            } else {
                if (alpha_text.empty()) throw std::invalid_argument("pass --alpha or --all-chambers");
                emit(quadric::check_document(bundle, quadric::parse_rational(alpha_text), out.seed), out, text_check);
            }
            return 0;
        };
    });

    // sweep
    quadric::SweepConfig sweep_cfg;
    std::size_t max_ce = 5;
    auto* sweep = app.add_subcommand("sweep", "Check model properties over an exhaustive bundle grid");
    sweep->add_option("--n-max", sweep_cfg.n_max, "Largest rank")->required();
    sweep->add_option("--deg-bound", sweep_cfg.deg_bound, "Summand degrees range over [-b, b]")->required();
    sweep->add_option("--dL-max", sweep_cfg.dL_max, "Largest d_L")->required();
    sweep->add_option("--dL-min", sweep_cfg.dL_min, "Smallest d_L")->capture_default_str();
    sweep->add_option("-g,--genus", sweep_cfg.genus, "Genus")->capture_default_str();
    sweep->add_option("--trials", sweep_cfg.rank_trials, "Trials for generic rank")->capture_default_str();
    sweep->add_option("--max-counterexamples", max_ce, "Counterexamples kept per property")->capture_default_str();
    add_output_flags(sweep, out);
    sweep->callback([&] {
        run = [&] {
            sweep_cfg.seed = out.seed;
            const auto result = quadric::run_sweep(sweep_cfg, max_ce);
            emit(quadric::sweep_document(result), out, text_sweep);
            return result.total_violations() == 0 ? 0 : 1;
        };
    });

    // report
    auto* report = app.add_subcommand("report", "Cited invariant reports");
    report->require_subcommand(1);

    std::string report_alpha;
    auto* rank2 = report->add_subcommand("rank2", "Rank-2 walls, dimension and connectedness");
    rank2->add_option("-d,--d", d, "Degree")->required();
    rank2->add_option("--dL", dl, "Degree of L")->required();
    rank2->add_option("-g,--genus", genus, "Genus")->required();
    rank2->add_option("--alpha", report_alpha, "Stability parameter");
    add_output_flags(rank2, out);
    rank2->callback([&] {
        run = [&] {
            std::optional<quadric::Rational> a;
            if (!report_alpha.empty()) a = quadric::parse_rational(report_alpha);
            emit(quadric::rank2_document(genus, d, dl, a, out.seed), out, text_report);
            return 0;
        };
    });

    std::string group = "sp";
    std::optional<int> w;
    auto* higgs = report->add_subcommand("higgs", "Sp(2n,R) / SO0(2,3) Higgs bundle facts");
    higgs->add_option("--group", group, "sp or so023")
        ->check(CLI::IsMember({"sp", "so023"}))
        ->capture_default_str();
    higgs->add_option("-n,--n", n, "n")->required();
    higgs->add_option("-g,--genus", genus, "Genus")->required();
    higgs->add_option("-d,--d", d, "Toledo invariant")->required();
    higgs->add_option("-w,--w", w, "Second Stiefel-Whitney class (SO0(2,3))");
    add_output_flags(higgs, out);
    higgs->callback([&] {
        run = [&] {
            const auto g = group == "sp" ? quadric::HiggsGroup::Sp2n : quadric::HiggsGroup::SO023;
            emit(quadric::higgs_document(g, n, genus, d, w, out.seed), out, text_report);
            return 0;
        };
    });

    std::optional<std::int64_t> geo_n;
    auto* geometry = report->add_subcommand("geometry", "Forgetful-map fiber and fixed-determinant topology");
    geometry->add_option("-n,--n", geo_n, "Rank (default 2)");
    geometry->add_option("-g,--genus", genus, "Genus")->required();
    geometry->add_option("-d,--d", d, "Degree")->required();
    geometry->add_option("--dL", dl, "Degree of L")->required();
    add_output_flags(geometry, out);
    geometry->callback([&] {
        run = [&] {
            emit(quadric::geometry_document(geo_n, genus, d, dl, out.seed), out, text_report);
            return 0;
        };
    });

    auto* maxdeg = report->add_subcommand("maxdeg", "Maximal-degree classification");
    maxdeg->add_option("-n,--n", n, "Rank")->required();
    maxdeg->add_option("--dL", dl, "Degree of L")->required();
    maxdeg->add_option("-g,--genus", genus, "Genus")->required();
    add_output_flags(maxdeg, out);
    maxdeg->callback([&] {
        run = [&] {
            emit(quadric::maxdeg_document(n, dl, genus, out.seed), out, text_report);
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const quadric::error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
