#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "starplanar/star_graph.hpp"

namespace starplanar {

// Graphviz DOT rendering of `g`. Each edge is labelled with its half-edges
// at both ends. With a certificate document: obstruct walks get distinct
// colours and `class` attributes, embedding witnesses annotate each vertex
// with its port order, and transition systems colour every walk.
// Throws CertificateError if the document does not verify against `g`.
std::string export_dot(const StarGraph& g,
                       const std::optional<nlohmann::json>& certificate = std::nullopt);

}  // namespace starplanar
