#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "quadric/bundle.hpp"
#include "quadric/params.hpp"
#include "quadric/reports.hpp"
#include "quadric/sweep.hpp"

namespace quadric {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// {"num": p, "den": q, "decimal": "p/q to six places"}.
json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(const CriticalValue& w);
json to_json(const Chamber& c);
json to_json(const StabilityVerdict& v);
json to_json(const PatternQuadricBundle& b);

/// Statement behind a citation id. Throws std::out_of_range for unknown ids.
const std::string& citation_statement(const std::string& id);

// Report documents. Every document has the keys
//   tool_version, command, inputs, results, citations, seed
// and results entries that assert a fact carry a "cite" id listed in
// citations. Serialized with dump_document, equal inputs give equal bytes.

json chambers_document(const ModuliParams& params, std::uint64_t seed = 0);
json check_document(const PatternQuadricBundle& bundle, const Rational& alpha, std::uint64_t seed = 0);
json check_all_chambers_document(const PatternQuadricBundle& bundle, std::uint64_t seed = 0);
json sweep_document(const SweepResult& result);
json rank2_document(std::int64_t genus, std::int64_t degree, std::int64_t twist_degree,
                    std::optional<Rational> alpha = std::nullopt, std::uint64_t seed = 0);
json higgs_document(HiggsGroup group, std::int64_t n, std::int64_t genus, std::int64_t toledo,
                    std::optional<int> stiefel_whitney = std::nullopt, std::uint64_t seed = 0);
json geometry_document(std::optional<std::int64_t> n, std::int64_t genus, std::int64_t degree,
                       std::int64_t twist_degree, std::uint64_t seed = 0);
json maxdeg_document(std::int64_t n, std::int64_t twist_degree, std::int64_t genus, std::uint64_t seed = 0);

/// Two-space indented JSON with a trailing newline.
std::string dump_document(const json& doc);

}  // namespace quadric
