#pragma once

#include "plabic/equivalence.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace plabic {

using Json = nlohmann::ordered_json;

// Graph files: {"n", "vertices": [{"id", "color", "pos": ["p/q", "p/q"],
// "label" (boundary only)}], "edges": [[id, id]], "orientation": [[tail, head]]}
// plus "k", "role" and "source_set" for rec-family graphs.
Json graph_to_json(const PlabicGraph& g, const PerfectOrientation* o = nullptr);
Json graph_to_json(const RecGraph& r);

struct GraphFile {
    PlabicGraph graph;
    std::optional<PerfectOrientation> orientation;
    std::optional<int> k;
    std::optional<Role> role;
};

// Throws FormatError on schema violations; the embedding is validated as usual.
GraphFile graph_from_json(const Json& j);
// Also needs "k", "role" and a perfect orientation; labels are recomputed.
RecGraph rec_graph_from_json(const Json& j);

Json polynomial_to_json(const FlowPolynomial& p, const FaceBasis& basis);
// "1", or terms like "2*x167*x127^2" joined by " + ".
std::string polynomial_string(const FlowPolynomial& p, const FaceBasis& basis);

Json hrep_to_json(const HRep& h);
HRep hrep_from_json(const Json& j);

Json point_set_to_json(const LatticePointSet& s);
// Header row: "J" (when provenance is present) then the basis labels.
std::string point_set_csv(const LatticePointSet& s);

Json certificate_to_json(const EquivalenceCertificate& c);
std::string certificate_summary(const EquivalenceCertificate& c);

std::string to_dot(const RecGraph& r);
std::string to_svg(const RecGraph& r);
std::string to_tikz(const RecGraph& r);

} // namespace plabic
