#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "starplanar/cycles.hpp"
#include "starplanar/error.hpp"
#include "starplanar/expansion.hpp"
#include "starplanar/planarity.hpp"
#include "starplanar/star_graph.hpp"

namespace starplanar {

// Certificate documents are JSON objects
//
//   {"format": "starplanar-certificate", "version": 1, "kind": K,
//    "graph_sha256": <hash of the certified graph>, K: <body>}
//
// with K one of obstruct, embedding, expansion_map, transition_system,
// crosscheck. All identifiers are the names used in the graph file.

class CertificateError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kCertificateFormat = "starplanar-certificate";
inline constexpr int kCertificateVersion = 1;

nlohmann::json obstruct_document(const StarGraph& g, const ObstructCertificate& cert);
nlohmann::json embedding_document(const StarGraph& g, const EmbeddingWitness& witness);
// `g` is the original graph; the document also pins the hash of the expansion.
nlohmann::json expansion_map_document(const StarGraph& g, const Expansion& expansion);
nlohmann::json transition_system_document(const StarGraph& g, const TransitionSystem& t);
nlohmann::json crosscheck_document(const StarGraph& g, const CrosscheckVerdict& verdict);

// Readers check shape and resolve names against `g`, throwing
// CertificateError. They do not check the graph hash or the semantics.
std::string certificate_kind(const nlohmann::json& doc);
ObstructCertificate read_obstruct(const StarGraph& g, const nlohmann::json& doc);
EmbeddingWitness read_embedding(const StarGraph& g, const nlohmann::json& doc);
ExpansionMap read_expansion_map(const nlohmann::json& doc);
std::string read_expanded_hash(const nlohmann::json& doc);
TransitionSystem read_transition_system(const StarGraph& g, const nlohmann::json& doc);

struct VerifyResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Checks a document against `g` without repeating any search: graph hash,
// strict shape, semantic validity of every recorded value, and that the
// document is exactly the canonical rendering of what it certifies.
VerifyResult verify_certificate(const StarGraph& g, const nlohmann::json& doc);
VerifyResult verify_certificate_text(const StarGraph& g, std::string_view text);

}  // namespace starplanar
