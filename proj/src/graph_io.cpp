#include "starplanar/graph_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

#include "starplanar/error.hpp"

namespace starplanar {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

StarGraph parse_graph(std::string_view text, const ParseOptions& options) {
  GraphDescription description;
  int line_number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    for (const auto& token : tokens) {
      if (!is_identifier(token)) throw ParseError(line_number, "bad token '" + token + "'");
    }
    if (tokens[0] == "vertex") {
      if (tokens.size() < 3 || tokens[2] != "order") {
        throw ParseError(line_number, "expected 'vertex <id> order <half-edges...>'");
      }
      description.vertices.push_back(
          {tokens[1], std::vector<std::string>(tokens.begin() + 3, tokens.end()), line_number});
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError(line_number, "expected 'edge <hA> <hB>'");
      description.edges.push_back({tokens[1], tokens[2], line_number});
    } else {
      throw ParseError(line_number, "unknown directive '" + tokens[0] + "'");
    }
    if (end == text.size()) break;
  }

  if (description.vertices.empty() && description.edges.empty() && !options.allow_empty) {
    throw ParseError(0, "empty graph");
  }
  if (auto violations = validate(description); !violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += v.message();
    }
    throw ParseError(violations.front().line, message);
  }
  return StarGraph::from_description(description);
}

std::string serialize(const StarGraph& g) {
  std::string out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "vertex " + g.vertex_name(v) + " order";
    for (int h : g.order(v)) out += " " + g.half_edge_name(h);
    out += "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(e);
    out += "edge " + g.half_edge_name(a) + " " + g.half_edge_name(b) + "\n";
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string graph_hash(const StarGraph& g) { return sha256_hex(serialize(g)); }

namespace {

// Fisher-Yates on raw mt19937_64 output; std::shuffle's draw sequence is
// implementation-defined.
template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

std::string padded(int value, int width) {
  std::string digits = std::to_string(value);
  return std::string(std::max<int>(0, width - static_cast<int>(digits.size())), '0') + digits;
}

}  // namespace

StarGraph gen_random(int n4, int n6, std::uint64_t seed) {
  if (n4 < 0 || n6 < 0) throw std::invalid_argument("vertex counts must be non-negative");
  std::mt19937_64 rng(seed);
  const int n = n4 + n6;
  const int width = static_cast<int>(std::to_string(std::max(n - 1, 0)).size());

  GraphDescription d;
  std::vector<std::string> all_half_edges;
  for (int i = 0; i < n; ++i) {
    const int degree = i < n4 ? 4 : 6;
    VertexSpec vertex{"v" + padded(i, width), {}, 0};
    for (int k = 0; k < degree; ++k) vertex.order.push_back(vertex.name + "." + std::to_string(k));
    all_half_edges.insert(all_half_edges.end(), vertex.order.begin(), vertex.order.end());
    d.vertices.push_back(std::move(vertex));
  }
  shuffle(all_half_edges, rng);
  for (std::size_t i = 0; i + 1 < all_half_edges.size(); i += 2) {
    d.edges.push_back({all_half_edges[i], all_half_edges[i + 1], 0});
  }
  for (auto& vertex : d.vertices) shuffle(vertex.order, rng);
  return StarGraph::from_description(d);
}

}  // namespace starplanar
