// JSON input/output for spaces and gnets.
//
// Space files:
//   { "universe": ["w","v"],
//     "mu": [[], ["w"]],            -- or "mu_generators": [["w"]]
//     "assoc": { "v": [["w"]] } }
// Exactly one of "mu" (taken literally, must already be a generalized
// topology) and "mu_generators" (union-closed here) is required. "assoc"
// entries for carrier points must match the forced families; entries for
// orphaned points may be any subfamily of mu. Missing orphans get the empty
// family.
//
// Gnet files:
//   { "elements": ["a","b"], "leq": [["a","b"]], "map": {"a":"w","b":"v"} }
// "leq" lists the full reflexive-transitive relation, or only cover pairs
// when "covers": true is set. Values of "map" are point labels resolved
// against the space the gnet is used with.
#ifndef GTF_JSON_IO_HH
#define GTF_JSON_IO_HH

#include <nlohmann/json.hpp>
#include <string>

#include "gtf/gnet.hh"
#include "gtf/space.hh"

namespace gtf {

using Json = nlohmann::json;

// Parsing never repairs: structural problems (bad labels, unknown points,
// both or neither mu key, non-poset relations) throw ValidationError.
// space_from_json additionally rejects structures failing validate();
// raw_space_from_json returns them for inspection.
GtfSpace space_from_json(const Json& j);
GtfSpace raw_space_from_json(const Json& j);
Json space_to_json(const GtfSpace& s);

Gnet gnet_from_json(const Json& j, const Universe& u);
Json gnet_to_json(const Gnet& g, const Universe& u);

GtfSpace load_space_file(const std::string& path);
GtfSpace load_raw_space_file(const std::string& path);
Gnet load_gnet_file(const std::string& path, const Universe& u);
Json load_json_file(const std::string& path);

// "w,v" -> point set; the empty string is the empty set.
PointSet parse_set_literal(const Universe& u, const std::string& literal);

}  // namespace gtf

#endif
