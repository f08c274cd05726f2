#pragma once

#include "myc/borsuk.hpp"
#include "myc/chromatic.hpp"
#include "myc/fan.hpp"
#include "myc/lift.hpp"

#include <json.hpp>

#include <string>

namespace myc::io {

using json = nlohmann::ordered_json;

// Every artifact carries a "kind" field; readers check it. Malformed input throws
// ContractError.

json to_json(const Graph& g);
Graph graph_from_json(const json& j);
std::string to_dot(const Graph& g);

json to_json(const Report& rep);

/// Complex with optional flag and kappa (omitted when empty).
json to_json(const SymmetricComplex& k, const HemisphereFlag* flag = nullptr,
             const TwoColouring* kappa = nullptr);
SymmetricComplex complex_from_json(const json& j);
HemisphereFlag flag_from_json(const json& j);   ///< reads j["flag"], empty if absent
TwoColouring kappa_from_json(const json& j);    ///< reads j["kappa"], empty if absent

json to_json(const SphereModel& m);
SphereModel model_from_json(const json& j);

json to_json(const KColouring& c);
KColouring colouring_from_json(const json& j);

json to_json(const Labelling& lam);
Labelling labelling_from_json(const json& j);

/// Certificate JSON {chi, colouring, method, elapsed, ...}. `elapsed` is the only
/// timing field; `with_timing = false` drops it for byte-stable output.
json to_json(const ChromaticCertificate& c, const Graph& g, bool with_timing = true);

json to_json(const MonochromeEdgeCert& c);
MonochromeEdgeCert edge_cert_from_json(const json& j);

json to_json(const EmbeddedGraph& e);
EmbeddedGraph embedding_from_json(const json& j);
/// Per-edge "u,v,plus_norm,minus_norm" rows with a header line.
std::string edges_csv(const EmbeddedGraph& e);

json to_json(const ProbeReport& r);

/// Reads {points, images, modulus} where modulus is {epsilon, delta}, a list of
/// such pairs, or {lipschitz}.
CandidateMap candidate_map_from_json(const json& j);

json read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

} // namespace myc::io
