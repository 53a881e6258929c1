#pragma once

// JSON encoding of instances and certificates.
//
// Rationals travel as strings ("p/q" or "p"); plain JSON integers are also
// accepted on input. Floating-point values appear only under a
// "presentation" key so that exact content can be compared byte for byte.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sconv/cone.hpp"
#include "sconv/gauge.hpp"
#include "sconv/linalg.hpp"
#include "sconv/replay.hpp"
#include "sconv/spherical.hpp"

namespace sconv::io {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const RatVec& v);
json to_json(std::span<const Rat> v);
json to_json(std::span<const RatVec> vs);

Rat rat_from_json(const json& j);
RatVec vec_from_json(const json& j);
std::vector<Rat> rats_from_json(const json& j);
std::vector<RatVec> vecs_from_json(const json& j);
std::vector<std::size_t> indices_from_json(const json& j);

/// Rounds to `digits` significant decimal digits.
double present(double v, int digits);
json present(std::span<const double> v, int digits);

json to_json(const Gauge& g);
/// Accepts a descriptor object or a bare kind string ("euclidean", ...).
/// `dim_hint` fills in a missing "dim".
Gauge gauge_from_json(const json& j, std::optional<std::size_t> dim_hint = std::nullopt);

json to_json(const ConeVRep& k);
ConeVRep cone_from_json(const json& j);

struct SetDescriptor {
    Gauge gauge;
    std::vector<RatVec> rays;
};

/// {"gauge": ..., "rays": [...]}; gauge defaults to Euclidean.
SetDescriptor set_from_json(const json& j);

json to_json(const IntersectionWitness& w);
IntersectionWitness intersection_from_json(const json& j);
json to_json(const CoverageResult& c);
CoverageResult coverage_from_json(const json& j);
json to_json(const ExtremeRayCertificate& c);
ExtremeRayCertificate extreme_from_json(const json& j);

/// Replays a document produced by the CLI, dispatching on its "command" field.
/// Documents without exact content (project, scomb) are checked numerically.
replay::Verdict replay_document(const json& doc);

}  // namespace sconv::io
