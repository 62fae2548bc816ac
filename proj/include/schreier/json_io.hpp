#ifndef SCHREIER_JSON_IO_HPP
#define SCHREIER_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "schreier/assembly.hpp"
#include "schreier/objects.hpp"

namespace schreier {

using Json = nlohmann::ordered_json;

// Graph JSON contract: {"signature": [...|"inf"], "labels": [...], "n": _,
// "succ": [[v|null,...] per label], "basepoint": v|null,
// "dangling": [{"v": _, "colours": [label names]}]}.
Json graph_to_json(const LabelledDigraph& g);
LabelledDigraph graph_from_json(const Json& j);

// Group input: {"perms": [[...],...]} or {"table": [[...]], "generators":
// [...]} or {"preset": "name"}.
FiniteGroup group_from_json(const Json& j);

// Realization: the graph fields plus a "certificate" object (check names,
// pass flags, timings in a clearly marked field, notes, counts).
Json realization_to_json(const Realization& r);

Json object_to_json(const Hypermap& h);
Json object_to_json(const Paving& p);
Json object_to_json(const Constellation& c);

using AnyObject = std::variant<Hypermap, Paving, Constellation>;
AnyObject object_from_json(const Json& j);

// DOT export: one colour per label; order-2 labels drawn as undirected
// edges.
std::string to_dot(const LabelledDigraph& g);

// 64-bit FNV-1a, hex; used for the CLI's reproducibility header. Timings
// are stripped before digesting.
std::string fnv1a_hex(const std::string& data);
std::string digest_without_timings(const Json& payload);

}  // namespace schreier

#endif
