#include "starplanar/diagram.hpp"

#include <map>
#include <sstream>

#include "starplanar/certificate.hpp"

namespace starplanar {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

constexpr const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple",
                                    "brown", "magenta", "cyan"};

struct Decorations {
  std::map<int, std::string> edge_attributes;  // edge index -> extra attributes
  std::map<int, std::string> vertex_ports;     // vertex -> rotation text
};

void tag_walk(const StarGraph& g, const ClosedWalk& w, const std::string& attributes,
              Decorations& out) {
  for (int e : w.edges(g)) out.edge_attributes[e] = attributes;
}

void decorate_obstruct(const StarGraph& g, const ObstructCertificate& cert, Decorations& out) {
  tag_walk(g, cert.walk_a, "color=red, penwidth=2, class=\"walk-a\"", out);
  tag_walk(g, cert.walk_b, "color=blue, penwidth=2, class=\"walk-b\"", out);
}

void decorate_embedding(const StarGraph& g, const EmbeddingWitness& w, Decorations& out) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string ports;
    for (int h : w.rotation.rotations[v]) ports += (ports.empty() ? "" : " ") + g.half_edge_name(h);
    out.vertex_ports[v] = ports;
  }
}

}  // namespace

std::string export_dot(const StarGraph& g, const std::optional<nlohmann::json>& certificate) {
  Decorations deco;
  std::string kind;
  if (certificate) {
    const auto result = verify_certificate(g, *certificate);
    if (!result) throw CertificateError("cannot export with certificate: " + result.reason);
    kind = certificate_kind(*certificate);
    const auto& doc = *certificate;
    if (kind == "obstruct") {
      decorate_obstruct(g, read_obstruct(g, doc), deco);
    } else if (kind == "embedding") {
      decorate_embedding(g, read_embedding(g, doc), deco);
    } else if (kind == "transition_system") {
      const auto walks = cycles_of_transition_system(g, read_transition_system(g, doc));
      for (std::size_t i = 0; i < walks.size(); ++i) {
        tag_walk(g, walks[i],
                 std::string("color=") + kPalette[i % std::size(kPalette)] +
                     ", class=\"walk-" + std::to_string(i) + "\"",
                 deco);
      }
    } else if (kind == "crosscheck") {
      const auto& body = doc.at("crosscheck");
      auto sub = [&](const char* key) {
        nlohmann::json d = doc;
        d.erase("crosscheck");
        d["kind"] = key;
        d[key] = body.at(key);
        return d;
      };
      if (!body.at("obstruct").is_null()) decorate_obstruct(g, read_obstruct(g, sub("obstruct")), deco);
      if (!body.at("embedding").is_null()) {
        decorate_embedding(g, read_embedding(g, sub("embedding")), deco);
      }
    }
  }

  std::ostringstream out;
  out << "graph starplanar {\n";
  if (!kind.empty()) out << "  // certificate: " << kind << "\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.vertex_name(v)) << " [label=" << quoted(g.vertex_name(v));
    if (auto it = deco.vertex_ports.find(v); it != deco.vertex_ports.end()) {
      out << ", xlabel=" << quoted("(" + it->second + ")") << ", ports=" << quoted(it->second);
    }
    out << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(e);
    out << "  " << quoted(g.vertex_name(g.vertex_of(a))) << " -- "
        << quoted(g.vertex_name(g.vertex_of(b))) << " [taillabel=" << quoted(g.half_edge_name(a))
        << ", headlabel=" << quoted(g.half_edge_name(b));
    if (auto it = deco.edge_attributes.find(e); it != deco.edge_attributes.end()) {
      out << ", " << it->second;
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace starplanar
