#include "starplanar/certificate.hpp"

#include <algorithm>
#include <set>

#include "starplanar/graph_io.hpp"

namespace starplanar {

using nlohmann::json;

namespace {

json header(const StarGraph& g, std::string_view kind) {
  return json{{"format", kCertificateFormat},
              {"version", kCertificateVersion},
              {"kind", kind},
              {"graph_sha256", graph_hash(g)}};
}

json walk_json(const StarGraph& g, const ClosedWalk& w) {
  json out = json::array();
  for (const auto& p : w.passes()) {
    out.push_back({g.vertex_name(p.vertex), g.half_edge_name(p.first), g.half_edge_name(p.second)});
  }
  return out;
}

json obstruct_body(const StarGraph& g, const ObstructCertificate& cert) {
  return json{{"walk_a", walk_json(g, cert.walk_a)},
              {"walk_b", walk_json(g, cert.walk_b)},
              {"crossing",
               {{"vertex", g.vertex_name(cert.vertex)},
                {"pass_a", {g.half_edge_name(cert.pass_a.first), g.half_edge_name(cert.pass_a.second)}},
                {"pass_b", {g.half_edge_name(cert.pass_b.first), g.half_edge_name(cert.pass_b.second)}}}}};
}

json embedding_body(const StarGraph& g, const EmbeddingWitness& w) {
  json rotation = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json rot = json::array();
    for (int h : w.rotation.rotations[v]) rot.push_back(g.half_edge_name(h));
    rotation[g.vertex_name(v)] = rot;
  }
  json faces = json::array();
  for (const auto& face : w.trace.faces) {
    json f = json::array();
    for (int h : face) f.push_back(g.half_edge_name(h));
    faces.push_back(f);
  }
  return json{{"rotation", rotation},
              {"faces", faces},
              {"face_count", w.trace.face_count()},
              {"genus", w.trace.genus}};
}

json expansion_body(const StarGraph& expanded, const ExpansionMap& map) {
  json triangles = json::array();
  for (const auto& tri : map.triangles) {
    json item{{"vertex", tri.original},
              {"corners", tri.corners},
              {"prev", tri.prev},
              {"next", tri.next},
              {"external", tri.external}};
    triangles.push_back(item);
  }
  // Both variants coincide without triangles; 1 is the canonical spelling.
  return json{{"variant", map.triangles.empty() ? 1 : map.variant},
              {"expanded_sha256", graph_hash(expanded)},
              {"triangles", triangles}};
}

json transition_body(const StarGraph& g, const TransitionSystem& t) {
  json matchings = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json pairs = json::array();
    for (int h : g.order(v)) {
      if (h < t.mate[h]) pairs.push_back({g.half_edge_name(h), g.half_edge_name(t.mate[h])});
    }
    std::sort(pairs.begin(), pairs.end());
    matchings[g.vertex_name(v)] = pairs;
  }
  json walks = json::array();
  for (const auto& w : cycles_of_transition_system(g, t)) walks.push_back(walk_json(g, w));
  return json{{"matchings", matchings}, {"walks", walks}};
}

[[noreturn]] void fail(const std::string& what) { throw CertificateError(what); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail("expected an object");
  std::set<std::string> expected(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!expected.contains(key)) fail("unexpected field '" + key + "'");
  }
  for (const auto* key : keys) member(obj, key);
}

const std::string& str(const json& value) {
  if (!value.is_string()) fail("expected a string");
  return value.get_ref<const std::string&>();
}

int vertex_named(const StarGraph& g, const json& value) {
  const auto v = g.find_vertex(str(value));
  if (!v) fail("unknown vertex '" + str(value) + "'");
  return *v;
}

int half_edge_named(const StarGraph& g, const json& value) {
  const auto h = g.find_half_edge(str(value));
  if (!h) fail("unknown half-edge '" + str(value) + "'");
  return *h;
}

const json& array_of(const json& value, std::size_t size = 0) {
  if (!value.is_array()) fail("expected an array");
  if (size > 0 && value.size() != size) fail("array has the wrong length");
  return value;
}

ClosedWalk read_walk(const StarGraph& g, const json& value) {
  std::vector<Pass> passes;
  for (const auto& item : array_of(value)) {
    array_of(item, 3);
    passes.push_back({vertex_named(g, item[0]), half_edge_named(g, item[1]),
                      half_edge_named(g, item[2])});
  }
  return ClosedWalk::unchecked(std::move(passes));
}

Pass read_pass(const StarGraph& g, int vertex, const json& value) {
  array_of(value, 2);
  return {vertex, half_edge_named(g, value[0]), half_edge_named(g, value[1])};
}

const json& body(const json& doc, std::string_view kind) {
  expect_keys(doc, {"format", "version", "kind", "graph_sha256", std::string(kind).c_str()});
  return doc.at(std::string(kind));
}

ObstructCertificate read_obstruct_body(const StarGraph& g, const json& b) {
  expect_keys(b, {"walk_a", "walk_b", "crossing"});
  const auto& crossing = b.at("crossing");
  expect_keys(crossing, {"vertex", "pass_a", "pass_b"});
  ObstructCertificate cert;
  cert.walk_a = read_walk(g, b.at("walk_a"));
  cert.walk_b = read_walk(g, b.at("walk_b"));
  cert.vertex = vertex_named(g, crossing.at("vertex"));
  cert.pass_a = read_pass(g, cert.vertex, crossing.at("pass_a"));
  cert.pass_b = read_pass(g, cert.vertex, crossing.at("pass_b"));
  return cert;
}

EmbeddingWitness read_embedding_body(const StarGraph& g, const json& b) {
  expect_keys(b, {"rotation", "faces", "face_count", "genus"});
  EmbeddingWitness w;
  w.rotation.rotations.resize(g.vertex_count());
  const auto& rotation = b.at("rotation");
  if (!rotation.is_object() || static_cast<int>(rotation.size()) != g.vertex_count()) {
    fail("rotation must list every vertex once");
  }
  for (const auto& [name, rot] : rotation.items()) {
    const int v = vertex_named(g, json(name));
    for (const auto& h : array_of(rot)) w.rotation.rotations[v].push_back(half_edge_named(g, h));
  }
  for (const auto& face : array_of(b.at("faces"))) {
    std::vector<int> f;
    for (const auto& h : array_of(face)) f.push_back(half_edge_named(g, h));
    w.trace.faces.push_back(std::move(f));
  }
  if (!b.at("genus").is_number_integer() || !b.at("face_count").is_number_integer()) {
    fail("genus and face_count must be integers");
  }
  w.trace.genus = b.at("genus").get<int>();
  return w;
}

TransitionSystem read_transition_body(const StarGraph& g, const json& b) {
  expect_keys(b, {"matchings", "walks"});
  const auto& matchings = b.at("matchings");
  if (!matchings.is_object()) fail("matchings must be an object");
  TransitionSystem t;
  t.mate.assign(g.half_edge_count(), -1);
  for (const auto& [name, pairs] : matchings.items()) {
    vertex_named(g, json(name));
    for (const auto& pair : array_of(pairs)) {
      array_of(pair, 2);
      const int a = half_edge_named(g, pair[0]);
      const int b2 = half_edge_named(g, pair[1]);
      if (t.mate[a] >= 0 || t.mate[b2] >= 0) fail("half-edge matched twice");
      t.mate[a] = b2;
      t.mate[b2] = a;
    }
  }
  return t;
}

ExpansionMap read_expansion_body(const json& b) {
  expect_keys(b, {"variant", "expanded_sha256", "triangles"});
  if (!b.at("variant").is_number_integer()) fail("variant must be an integer");
  ExpansionMap map;
  map.variant = b.at("variant").get<int>();
  for (const auto& item : array_of(b.at("triangles"))) {
    expect_keys(item, {"vertex", "corners", "prev", "next", "external"});
    ExpandedVertex tri;
    tri.original = str(item.at("vertex"));
    for (int k = 0; k < 3; ++k) {
      tri.corners[k] = str(array_of(item.at("corners"), 3)[k]);
      tri.prev[k] = str(array_of(item.at("prev"), 3)[k]);
      tri.next[k] = str(array_of(item.at("next"), 3)[k]);
      const auto& ext = array_of(array_of(item.at("external"), 3)[k], 2);
      tri.external[k] = {str(ext[0]), str(ext[1])};
    }
    map.triangles.push_back(std::move(tri));
  }
  return map;
}

void check_header(const StarGraph& g, const json& doc) {
  if (!doc.is_object()) fail("certificate is not a JSON object");
  if (!doc.contains("format") || doc.at("format") != kCertificateFormat) fail("not a starplanar certificate");
  if (!doc.contains("version") || doc.at("version") != kCertificateVersion) fail("unsupported certificate version");
  if (!doc.contains("graph_sha256") || doc.at("graph_sha256") != graph_hash(g)) {
    fail("stale certificate: graph hash mismatch");
  }
}

// Throws CertificateError with the reason the body is not valid for `g`;
// returns the canonical rendering of the body.
json check_body(const StarGraph& g, const std::string& kind, const json& b) {
  if (kind == "obstruct") {
    const auto cert = read_obstruct_body(g, b);
    if (!verify_obstruct(g, cert)) fail("obstruct does not verify");
    return b;
  }
  if (kind == "embedding") {
    const auto w = read_embedding_body(g, b);
    if (!is_compatible(g, w.rotation)) fail("rotation is not compatible with the *-structure");
    const auto trace = trace_faces(g, w.rotation);
    if (trace.genus != 0) fail("rotation is not planar");
    if (w.trace.genus != 0) fail("recorded genus is not 0");
    EmbeddingWitness recomputed{w.rotation, trace};
    return embedding_body(g, recomputed);
  }
  if (kind == "transition_system") {
    const auto t = read_transition_body(g, b);
    if (!is_valid_transition_system(g, t)) fail("matching is not perfect at every vertex");
    return transition_body(g, t);
  }
  if (kind == "expansion_map") {
    const auto map = read_expansion_body(b);
    if (map.variant != 1 && map.variant != 2) fail("variant must be 1 or 2");
    const auto expansion = expand(g, map.variant);
    if (!(expansion.map == map)) fail("expansion map does not match the graph");
    return expansion_body(expansion.graph, expansion.map);
  }
  if (kind == "crosscheck") {
    expect_keys(b, {"criterion_planar", "embedding_planar", "agree", "obstruct", "embedding"});
    const auto& cp = b.at("criterion_planar");
    const auto& ep = b.at("embedding_planar");
    const auto& agree = b.at("agree");
    if (!cp.is_boolean() || !ep.is_boolean() || !agree.is_boolean()) fail("verdicts must be booleans");
    if (agree.get<bool>() != (cp.get<bool>() == ep.get<bool>())) fail("agree flag is inconsistent");
    if (cp.get<bool>() != b.at("obstruct").is_null()) fail("criterion verdict and obstruct disagree");
    if (ep.get<bool>() == b.at("embedding").is_null()) fail("embedding verdict and witness disagree");
    json out = b;
    if (!b.at("obstruct").is_null()) out["obstruct"] = check_body(g, "obstruct", b.at("obstruct"));
    if (!b.at("embedding").is_null()) out["embedding"] = check_body(g, "embedding", b.at("embedding"));
    return out;
  }
  fail("unknown certificate kind '" + kind + "'");
}

}  // namespace

nlohmann::json obstruct_document(const StarGraph& g, const ObstructCertificate& cert) {
  auto doc = header(g, "obstruct");
  doc["obstruct"] = obstruct_body(g, cert);
  return doc;
}

nlohmann::json embedding_document(const StarGraph& g, const EmbeddingWitness& witness) {
  auto doc = header(g, "embedding");
  doc["embedding"] = embedding_body(g, witness);
  return doc;
}

nlohmann::json expansion_map_document(const StarGraph& g, const Expansion& expansion) {
  auto doc = header(g, "expansion_map");
  doc["expansion_map"] = expansion_body(expansion.graph, expansion.map);
  return doc;
}

nlohmann::json transition_system_document(const StarGraph& g, const TransitionSystem& t) {
  auto doc = header(g, "transition_system");
  doc["transition_system"] = transition_body(g, t);
  return doc;
}

nlohmann::json crosscheck_document(const StarGraph& g, const CrosscheckVerdict& verdict) {
  auto doc = header(g, "crosscheck");
  doc["crosscheck"] = json{
      {"criterion_planar", verdict.criterion_planar},
      {"embedding_planar", verdict.embedding_planar},
      {"agree", verdict.agree},
      {"obstruct", verdict.obstruct ? obstruct_body(g, *verdict.obstruct) : json(nullptr)},
      {"embedding", verdict.witness ? embedding_body(g, *verdict.witness) : json(nullptr)}};
  return doc;
}

std::string certificate_kind(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("certificate is not a JSON object");
  return str(member(doc, "kind"));
}

ObstructCertificate read_obstruct(const StarGraph& g, const nlohmann::json& doc) {
  return read_obstruct_body(g, body(doc, "obstruct"));
}

EmbeddingWitness read_embedding(const StarGraph& g, const nlohmann::json& doc) {
  auto w = read_embedding_body(g, body(doc, "embedding"));
  w.trace = trace_faces(g, w.rotation);
  return w;
}

ExpansionMap read_expansion_map(const nlohmann::json& doc) {
  return read_expansion_body(body(doc, "expansion_map"));
}

std::string read_expanded_hash(const nlohmann::json& doc) {
  return str(member(body(doc, "expansion_map"), "expanded_sha256"));
}

TransitionSystem read_transition_system(const StarGraph& g, const nlohmann::json& doc) {
  return read_transition_body(g, body(doc, "transition_system"));
}

VerifyResult verify_certificate(const StarGraph& g, const nlohmann::json& doc) {
  try {
    check_header(g, doc);
    const auto kind = certificate_kind(doc);
    const auto& b = body(doc, kind);
    const json canonical = check_body(g, kind, b);
    if (canonical != b) fail("certificate is not in canonical form");
    return {true, "ok"};
  } catch (const CertificateError& e) {
    return {false, e.what()};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

VerifyResult verify_certificate_text(const StarGraph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    return {false, std::string("not valid JSON: ") + e.what()};
  }
  return verify_certificate(g, doc);
}

}  // namespace starplanar
