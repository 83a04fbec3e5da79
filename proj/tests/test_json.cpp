#include <doctest.h>

#include <functional>
#include <set>

#include "quadric/bundle.hpp"
#include "quadric/report_json.hpp"

using namespace quadric;

namespace {

// Every object carrying "cite" names an id listed under citations.
void collect_cites(const json& j, std::set<std::string>& out) {
    if (j.is_object()) {
        if (j.contains("cite")) out.insert(j.at("cite").get<std::string>());
        for (const auto& [k, v] : j.items()) collect_cites(v, out);
    } else if (j.is_array()) {
        for (const auto& v : j) collect_cites(v, out);
    }
}

void check_envelope(const json& doc) {
    for (const char* key : {"tool_version", "command", "inputs", "results", "citations", "seed"})
        CHECK(doc.contains(key));
    std::set<std::string> used, listed;
    collect_cites(doc.at("results"), used);
    for (const auto& c : doc.at("citations")) {
        listed.insert(c.at("id").get<std::string>());
        CHECK_FALSE(c.at("statement").get<std::string>().empty());
    }
    CHECK_FALSE(used.empty());
    for (const auto& id : used) CHECK(listed.count(id) == 1);
    const auto text = dump_document(doc);
    CHECK(dump_document(json::parse(text)) == text);
}

}  // namespace

TEST_CASE("rational json") {
    const auto j = to_json(Rational(-3, 4));
    CHECK(j.at("num") == -3);
    CHECK(j.at("den") == 4);
    CHECK(j.at("decimal") == "-0.750000");
    CHECK(rational_from_json(j) == Rational(-3, 4));
}

TEST_CASE("documents carry the envelope and cite every fact") {
    const auto b = parse_bundle_spec_string("genus 2\ndL 3\ndegrees 1 0\n* *\n* *\n");
    check_envelope(chambers_document({2, 2, 2, 6}));
    check_envelope(check_document(b, Rational(-1)));
    check_envelope(check_all_chambers_document(b));
    check_envelope(sweep_document(run_sweep({1, 1, 1, 2, 2, 0, 8})));
    check_envelope(rank2_document(2, 2, 6));
    check_envelope(higgs_document(HiggsGroup::Sp2n, 2, 3, 2));
    check_envelope(geometry_document(std::nullopt, 4, 0, 8));
    check_envelope(maxdeg_document(3, 2, 2));
}

TEST_CASE("chambers document content") {
    const auto doc = chambers_document({2, 2, 2, 6}, 9);
    CHECK(doc.at("seed") == 9);
    const auto& walls = doc.at("results").at("walls").at("value");
    REQUIRE(walls.size() == 3);
    CHECK(rational_from_json(walls[0].at("value")) == Rational(-1));
    CHECK(rational_from_json(walls[2].at("value")) == Rational(1));
    CHECK(doc.at("results").at("chambers").size() == 3);
    CHECK(doc.at("results").at("chambers")[0].at("lower").is_null());
}

TEST_CASE("all-chambers check records the change at 0") {
    const auto b = parse_bundle_spec_string("genus 2\ndL 3\ndegrees 1 0\n* *\n* *\n");
    const auto doc = check_all_chambers_document(b);
    const auto& res = doc.at("results");
    for (const auto& c : res.at("chambers"))
        if (rational_from_json(c.at("upper")) <= Rational(0)) CHECK(c.at("class") == "stable");
    bool seen = false;
    for (const auto& x : res.at("wall_crossings"))
        if (rational_from_json(x.at("wall")) == Rational(0)) {
            seen = true;
            CHECK_FALSE(x.at("zero_slack_witnesses").empty());
        }
    CHECK(seen);
}

TEST_CASE("report documents are deterministic") {
    CHECK(dump_document(rank2_document(3, 1, 6, Rational(1))) == dump_document(rank2_document(3, 1, 6, Rational(1))));
    CHECK(dump_document(geometry_document(3, 2, 0, 4)) == dump_document(geometry_document(3, 2, 0, 4)));
    const SweepConfig cfg{2, 1, 1, 3, 2, 4, 8};
    CHECK(dump_document(sweep_document(run_sweep(cfg))) == dump_document(sweep_document(run_sweep(cfg))));
}

TEST_CASE("geometry document outside the fiber range") {
    const auto doc = geometry_document(2, 2, 5, 6);
    CHECK(doc.at("results").at("forgetful_map").is_null());
}
