// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quadric/bundle.hpp"
#include "quadric/errors.hpp"
#include "quadric/params.hpp"
#include "quadric/report_json.hpp"
#include "quadric/reports.hpp"
#include "quadric/sweep.hpp"

using namespace quadric;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-34s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

// The grid shared by criteria 2-4 and 9: n <= 3, degrees in [-3, 3],
// 1 <= d_L <= 6, g = 2.
const SweepConfig kGrid{3, 3, 1, 6, 2, 0, 8};

struct GridTally {
    std::uint64_t bundles = 0;
    std::uint64_t constancy_checked = 0, constancy_bad = 0;
    std::uint64_t bound_checked = 0, bound_bad = 0;
    std::uint64_t top_checked = 0, top_bad = 0;
    std::uint64_t indep_checked = 0, indep_bad = 0;
    std::string first_bad;
};

// Walks the grid once using the witness-building classifier and direct
// inequality checks, independent of the sweep driver's bookkeeping.
const GridTally& grid_tally() {
    static const GridTally tally = [] {
        GridTally t;
        for_each_grid_bundle(kGrid, [&](const PatternQuadricBundle& b) {
            const auto params = b.params();
            if (!params.feasible()) return;
            ++t.bundles;
            const StabilityProfile profile(b);
            const auto cells = chambers(params);
            const auto n = b.rank();
            const auto d = b.degree();
            const auto dL = b.twist_degree();
            std::int64_t rk = -1;
            const bool indep = is_alpha_independent(b);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const auto samples = chamber_samples(cells[c]);
                std::vector<StabilityClass> cls;
                for (const auto& a : samples) {
                    const auto v = profile.classify(a);
                    cls.push_back(v.cls);
                    if (indep) {
                        ++t.indep_checked;
                        if (v.cls == StabilityClass::Stable) {
                            ++t.indep_bad;
                            if (t.first_bad.empty()) t.first_bad = "indep: " + b.to_spec();
                        }
                    }
                    if (!is_semistable(v.cls)) continue;
                    if (rk < 0) rk = generic_rank(b, {kGrid.seed, kGrid.rank_trials});
                    ++t.bound_checked;
                    const Rational lhs = a * n;
                    const Rational rhs = Rational(rk * dL, 2) + a * (n - rk);
                    if (lhs > Rational(d) || Rational(d) > rhs) {
                        ++t.bound_bad;
                        if (t.first_bad.empty()) t.first_bad = "bound at " + to_string(a) + ": " + b.to_spec();
                    }
                    if (c + 1 == cells.size()) {
                        ++t.top_checked;
                        if (!underlying_bundle_semistable(b)) {
                            ++t.top_bad;
                            if (t.first_bad.empty()) t.first_bad = "top: " + b.to_spec();
                        }
                    }
                }
                ++t.constancy_checked;
                if (cls[0] != cls[1] || cls[1] != cls[2]) {
                    ++t.constancy_bad;
                    if (t.first_bad.empty()) t.first_bad = "constancy: " + b.to_spec();
                }
            }
        });
        return t;
    }();
    return tally;
}

std::string counts(std::uint64_t checked, std::uint64_t bad) {
    return std::to_string(checked) + " checked, " + std::to_string(bad) + " violations";
}

Outcome criterion_walls() {
    std::uint64_t cases = 0;
    for (std::int64_t dL = 1; dL <= 8; ++dL)
        for (std::int64_t d = -8; d < dL; ++d) {
            const auto w = rank2_walls(d, dL);
            std::set<Rational> from_enum;
            for (const auto& cv : enumerate_critical_values({2, 2, d, dL})) from_enum.insert(cv.value);
            ++cases;
            if (std::set<Rational>(w.begin(), w.end()) != from_enum || w.size() != from_enum.size())
                return {false, "mismatch at d=" + std::to_string(d) + " dL=" + std::to_string(dL)};
        }
    return {true, std::to_string(cases) + " (d, dL) pairs agree"};
}

Outcome criterion_constancy() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& t = grid_tally();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string detail = std::to_string(t.bundles) + " bundles, " + counts(t.constancy_checked, t.constancy_bad);
    if (t.constancy_bad) detail += "; " + t.first_bad;
    return {t.constancy_bad == 0 && secs < 60.0, detail};
}

Outcome criterion_rank_bound() {
    const auto& t = grid_tally();
    return {t.bound_bad == 0 && t.bound_checked > 0, counts(t.bound_checked, t.bound_bad)};
}

Outcome criterion_top_chamber() {
    const auto& t = grid_tally();
    return {t.top_bad == 0 && t.top_checked > 0, counts(t.top_checked, t.top_bad)};
}

Outcome criterion_maximal_degree() {
    std::uint64_t checked = 0, bad = 0;
    for (std::int64_t dL = 1; dL <= 6; ++dL) {
        SweepConfig cfg{3, 6, dL, dL, 2, 0, 8};
        for_each_grid_bundle(cfg, [&](const PatternQuadricBundle& b) {
            if (2 * b.degree() != b.rank() * b.twist_degree()) return;
            const auto cells = chambers(b.params());
            const StabilityProfile profile(b);
            for (const auto& a : chamber_samples(cells.back())) {
                if (!is_semistable(profile.classify(a).cls)) continue;
                ++checked;
                const auto rk = generic_rank(b);
                if (rk != b.rank() || oracle::generic_rank(oracle::from(b)) != b.rank()) ++bad;
            }
        });
    }
    return {bad == 0 && checked > 0, counts(checked, bad)};
}

Outcome criterion_fiber_identity() {
    std::uint64_t cases = 0;
    for (std::int64_t g = 2; g <= 6; ++g)
        for (std::int64_t dL = -4; dL <= 12; ++dL)
            for (std::int64_t d = -24; d < dL + 2 - 2 * g; ++d) {
                const auto f = fiber_dimension(2, g, d, dL);
                const std::int64_t lhs = (-d + (dL + 1 - g)) * 3 - 1;
                const std::int64_t rhs = 3 * (dL - d + 1 - g) - 1;
                ++cases;
                if (lhs != rhs || *f.fiber_dim != lhs || fixed_determinant_fiber_dimension(g, d, dL) != rhs)
                    return {false, "g=" + std::to_string(g) + " d=" + std::to_string(d) + " dL=" + std::to_string(dL)};
            }
    return {cases > 0, std::to_string(cases) + " (g, d, dL) triples equal"};
}

Outcome criterion_milnor_wood() {
    std::uint64_t cases = 0;
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t g = 2; g <= 6; ++g)
            for (std::int64_t d = -12; d <= 12; ++d) {
                const auto r = higgs_report(HiggsGroup::Sp2n, n, g, d);
                ++cases;
                if (r.empty != (std::llabs(d) > n * (g - 1)) ||
                    r.empty != higgs_report(HiggsGroup::Sp2n, n, g, -d).empty)
                    return {false, "n=" + std::to_string(n) + " g=" + std::to_string(g) + " d=" + std::to_string(d)};
            }
    return {true, std::to_string(cases) + " cases"};
}

Outcome criterion_wall_locality() {
    std::vector<PatternQuadricBundle> grid;
    for_each_grid_bundle(kGrid, [&](const PatternQuadricBundle& b) {
        if (b.params().feasible()) grid.push_back(b);
    });
    std::mt19937_64 rng(20240229);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::uint64_t changes = 0, bad = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        const auto& b = grid[pick(rng)];
        const auto cells = chambers(b.params());
        for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
            const auto below = classify(b, chamber_samples(cells[c])[1]).cls;
            const auto above = classify(b, chamber_samples(cells[c + 1])[1]).cls;
            if (below == above) continue;
            ++changes;
            const auto at = classify(b, cells[c].upper);
            bool witnessed = false;
            for (const auto& w : at.witnesses) witnessed = witnessed || w.slack == Rational(0);
            if (!witnessed) {
                ++bad;
                if (first.empty()) first = "; wall " + to_string(cells[c].upper) + ": " + b.to_spec();
            }
        }
    }
    return {bad == 0, "500 bundles, " + std::to_string(changes) + " verdict changes, " + std::to_string(bad) +
                          " unwitnessed" + first};
}

Outcome criterion_alpha_independent() {
    const auto& t = grid_tally();
    return {t.indep_bad == 0 && t.indep_checked > 0, counts(t.indep_checked, t.indep_bad)};
}

// Runs the CLI twice when its path is given, and always compares two
// in-process renderings of the same documents.
Outcome criterion_determinism(const char* cli) {
    const SweepConfig cfg{2, 2, 1, 4, 2, 7, 8};
    const std::vector<std::function<std::string()>> docs = {
        [&] { return dump_document(sweep_document(run_sweep(cfg))); },
        [] { return dump_document(rank2_document(2, 2, 6, Rational(0), 7)); },
        [] { return dump_document(higgs_document(HiggsGroup::Sp2n, 2, 3, 2, std::nullopt, 7)); },
        [] { return dump_document(geometry_document(std::nullopt, 4, 0, 8, 7)); },
        [] { return dump_document(maxdeg_document(3, 2, 2, 7)); },
    };
    for (const auto& make : docs)
        if (make() != make()) return {false, "in-process documents differ"};
    std::string detail = std::to_string(docs.size()) + " documents identical";
    if (!cli) return {true, detail};

    const std::vector<std::string> commands = {
        "sweep --n-max 2 --deg-bound 2 --dL-max 4 -g 2 --seed 7 --json",
        "report rank2 -d 2 --dL 6 -g 2 --seed 7 --json",
        "report higgs --group sp --n 2 -g 3 -d 2 --seed 7 --json",
    };
    for (const auto& args : commands) {
        std::string outputs[2];
        for (auto& out : outputs) {
            const std::string cmd = std::string(cli) + " " + args;
            FILE* p = popen(cmd.c_str(), "r");
            if (!p) return {false, "cannot run " + cmd};
            char buf[4096];
            std::size_t k;
            while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
            if (pclose(p) != 0) return {false, "nonzero exit: " + cmd};
        }
        if (outputs[0] != outputs[1] || outputs[0].empty()) return {false, "CLI output differs: " + args};
    }
    return {true, detail + ", " + std::to_string(commands.size()) + " CLI runs byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    report(1, "rank-2 walls cross-oracle", criterion_walls);
    report(2, "chamber constancy", criterion_constancy);
    report(3, "gamma rank degree bound", criterion_rank_bound);
    report(4, "top chamber bundle semistable", criterion_top_chamber);
    report(5, "maximal degree full rank", criterion_maximal_degree);
    report(6, "fiber dimension identity", criterion_fiber_identity);
    report(7, "Milnor-Wood emptiness", criterion_milnor_wood);
    report(8, "wall locality", criterion_wall_locality);
    report(9, "alpha-independent never stable", criterion_alpha_independent);
    report(10, "deterministic JSON", [&] { return criterion_determinism(cli); });
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
