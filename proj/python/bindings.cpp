#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadric/bundle.hpp"
#include "quadric/errors.hpp"
#include "quadric/params.hpp"
#include "quadric/report_json.hpp"
#include "quadric/reports.hpp"
#include "quadric/sweep.hpp"

namespace py = pybind11;

// quadric::Rational <-> fractions.Fraction (ints accepted on input).
namespace pybind11::detail {
template <>
struct type_caster<quadric::Rational> {
    PYBIND11_TYPE_CASTER(quadric::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src) return false;
        if (PyLong_Check(src.ptr())) {
            value = quadric::Rational(src.cast<std::int64_t>());
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            try {
                value = quadric::parse_rational(src.cast<std::string>());
            } catch (const std::invalid_argument&) {
                return false;
            }
            return true;
        }
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        const auto den = src.attr("denominator").cast<std::int64_t>();
        if (den == 0) return false;
        value = quadric::Rational(src.attr("numerator").cast<std::int64_t>(), den);
        return true;
    }

    static handle cast(const quadric::Rational& x, return_value_policy, handle) {
        static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
        return (*fraction)(x.numerator(), x.denominator()).release();
    }
};
}  // namespace pybind11::detail

namespace {

py::object as_dict(const quadric::json& doc) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(quadric::dump_document(doc));
}

py::dict witness_dict(const quadric::Witness& w) {
    py::dict d;
    d["subobject"] = quadric::to_string(w.subobject);
    d["clause"] = quadric::clause_name(w.clause);
    d["slack"] = w.slack;
    d["decomposes"] = w.decomposes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace quadric;
    m.doc() = "Critical values, chambers and alpha-stability of L-quadric bundles";
    m.attr("__version__") = kToolVersion;

    auto base = py::register_exception<error>(m, "QuadricError", PyExc_ValueError);
    py::register_exception<InfeasibleParams>(m, "InfeasibleParams", base.ptr());
    py::register_exception<RankOutOfRange>(m, "RankOutOfRange", base.ptr());
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
    py::register_exception<MaximalDegree>(m, "MaximalDegree", base.ptr());
    py::register_exception<NonIntegralDegree>(m, "NonIntegralDegree", base.ptr());
    py::register_exception<InvalidBundle>(m, "InvalidBundle", base.ptr());
    py::register_exception<GridTooLarge>(m, "GridTooLarge", base.ptr());

    py::class_<ModuliParams>(m, "ModuliParams")
        .def(py::init([](std::int64_t n, std::int64_t d, std::int64_t dL, std::int64_t g) {
                 return ModuliParams{g, n, d, dL};
             }),
             py::arg("n"), py::arg("d"), py::arg("dL"), py::arg("genus") = 2)
        .def_readwrite("genus", &ModuliParams::genus)
        .def_readwrite("n", &ModuliParams::rank)
        .def_readwrite("d", &ModuliParams::degree)
        .def_readwrite("dL", &ModuliParams::twist_degree)
        .def("feasible", &ModuliParams::feasible)
        .def("__repr__", [](const ModuliParams& p) {
            return "ModuliParams(n=" + std::to_string(p.rank) + ", d=" + std::to_string(p.degree) +
                   ", dL=" + std::to_string(p.twist_degree) + ", genus=" + std::to_string(p.genus) + ")";
        });

    py::class_<CriticalValue>(m, "CriticalValue")
        .def_readonly("value", &CriticalValue::value)
        .def_property_readonly("forms", [](const CriticalValue& c) {
            std::vector<std::string> out;
            for (const auto& w : c.witnesses) out.push_back(provenance_tag(w));
            return out;
        })
        .def("__repr__", [](const CriticalValue& c) { return "CriticalValue(" + to_string(c.value) + ")"; });

    m.def("alpha_extremes", &alpha_extremes, py::arg("params"));
    m.def("enumerate_critical_values", &enumerate_critical_values, py::arg("params"));
    m.def(
        "chambers",
        [](const ModuliParams& p) {
            std::vector<std::pair<std::optional<Rational>, Rational>> out;
            for (const auto& c : chambers(p)) out.emplace_back(c.lower, c.upper);
            return out;
        },
        py::arg("params"), "Chambers as (lower or None, upper), lowest first.");
    m.def(
        "chamber_samples",
        [](std::optional<Rational> lower, const Rational& upper) { return chamber_samples(Chamber{lower, upper}); },
        py::arg("lower"), py::arg("upper"));
    m.def("degree_window", &degree_window, py::arg("n"), py::arg("dL"), py::arg("alpha"), py::arg("r"));
    m.def("minimum_gamma_rank", &minimum_gamma_rank, py::arg("params"), py::arg("alpha"));

    py::class_<PatternQuadricBundle>(m, "PatternQuadricBundle")
        .def(py::init<std::vector<std::int64_t>, std::vector<std::vector<bool>>, std::int64_t, std::int64_t>(),
             py::arg("degrees"), py::arg("pattern"), py::arg("dL"), py::arg("genus") = 2)
        .def_static("from_spec", &parse_bundle_spec_string, py::arg("text"))
        .def("to_spec", &PatternQuadricBundle::to_spec)
        .def_property_readonly("rank", &PatternQuadricBundle::rank)
        .def_property_readonly("degree", &PatternQuadricBundle::degree)
        .def_property_readonly("dL", &PatternQuadricBundle::twist_degree)
        .def_property_readonly("genus", &PatternQuadricBundle::genus)
        .def_property_readonly("degrees", &PatternQuadricBundle::degrees)
        .def("params", &PatternQuadricBundle::params)
        .def("__eq__", [](const PatternQuadricBundle& a, const PatternQuadricBundle& b) { return a == b; });

    m.def(
        "classify",
        [](const PatternQuadricBundle& b, const Rational& alpha) {
            const auto v = classify(b, alpha);
            py::dict d;
            d["class"] = class_name(v.cls);
            d["alpha_above_slope"] = v.alpha_above_slope;
            d["alpha_independent"] = v.alpha_independent;
            py::list ws;
            for (const auto& w : v.witnesses) ws.append(witness_dict(w));
            d["witnesses"] = ws;
            return d;
        },
        py::arg("bundle"), py::arg("alpha"));
    m.def("is_alpha_independent", &is_alpha_independent, py::arg("bundle"));
    m.def(
        "generic_rank",
        [](const PatternQuadricBundle& b, std::uint64_t seed, int trials) { return generic_rank(b, {seed, trials}); },
        py::arg("bundle"), py::arg("seed") = 0, py::arg("trials") = 8);
    m.def("underlying_bundle_semistable", &underlying_bundle_semistable, py::arg("bundle"));

    m.def("rank2_walls", &rank2_walls, py::arg("d"), py::arg("dL"));
    m.def("expected_dimension", &expected_dimension, py::arg("genus"), py::arg("d"), py::arg("dL"));
    m.def("flip_codim_bound", &flip_codim_bound, py::arg("genus"));
    m.def(
        "connectedness_verdict",
        [](std::int64_t g, std::int64_t d, std::int64_t dL, const Rational& a) {
            return connectedness_name(connectedness_verdict(g, d, dL, a));
        },
        py::arg("genus"), py::arg("d"), py::arg("dL"), py::arg("alpha"));

    // JSON report documents, returned as dicts.
    m.def(
        "chambers_report",
        [](const ModuliParams& p, std::uint64_t seed) { return as_dict(chambers_document(p, seed)); },
        py::arg("params"), py::arg("seed") = 0);
    m.def(
        "check_report",
        [](const PatternQuadricBundle& b, std::optional<Rational> alpha, std::uint64_t seed) {
            return as_dict(alpha ? check_document(b, *alpha, seed) : check_all_chambers_document(b, seed));
        },
        py::arg("bundle"), py::arg("alpha") = py::none(), py::arg("seed") = 0,
        "Verdict at alpha, or on every chamber when alpha is None.");
    m.def(
        "sweep",
        [](std::int64_t n_max, std::int64_t deg_bound, std::int64_t dL_max, std::int64_t dL_min, std::int64_t genus,
           std::uint64_t seed, std::size_t max_counterexamples) {
            SweepResult r;
            {
                py::gil_scoped_release release;
                r = run_sweep({n_max, deg_bound, dL_min, dL_max, genus, seed, 8}, max_counterexamples);
            }
            return as_dict(sweep_document(r));
        },
        py::arg("n_max"), py::arg("deg_bound"), py::arg("dL_max"), py::arg("dL_min") = 1, py::arg("genus") = 2,
        py::arg("seed") = 0, py::arg("max_counterexamples") = 5);
    m.def(
        "rank2_report",
        [](std::int64_t g, std::int64_t d, std::int64_t dL, std::optional<Rational> alpha, std::uint64_t seed) {
            return as_dict(rank2_document(g, d, dL, alpha, seed));
        },
        py::arg("genus"), py::arg("d"), py::arg("dL"), py::arg("alpha") = py::none(), py::arg("seed") = 0);
    m.def(
        "higgs_report",
        [](const std::string& group, std::int64_t n, std::int64_t g, std::int64_t d, std::optional<int> w,
           std::uint64_t seed) {
            if (group != "sp" && group != "so023") throw py::value_error("group must be 'sp' or 'so023'");
            const auto grp = group == "sp" ? HiggsGroup::Sp2n : HiggsGroup::SO023;
            return as_dict(higgs_document(grp, n, g, d, w, seed));
        },
        py::arg("group"), py::arg("n"), py::arg("genus"), py::arg("d"), py::arg("w") = py::none(),
        py::arg("seed") = 0);
    m.def(
        "geometry_report",
        [](std::int64_t g, std::int64_t d, std::int64_t dL, std::optional<std::int64_t> n, std::uint64_t seed) {
            return as_dict(geometry_document(n, g, d, dL, seed));
        },
        py::arg("genus"), py::arg("d"), py::arg("dL"), py::arg("n") = py::none(), py::arg("seed") = 0);
    m.def(
        "maxdeg_report",
        [](std::int64_t n, std::int64_t dL, std::int64_t g, std::uint64_t seed) {
            return as_dict(maxdeg_document(n, dL, g, seed));
        },
        py::arg("n"), py::arg("dL"), py::arg("genus"), py::arg("seed") = 0);
}
