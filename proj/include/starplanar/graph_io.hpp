#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "starplanar/star_graph.hpp"

namespace starplanar {

struct ParseOptions {
  bool allow_empty = false;
};

// Line-oriented graph text:
//
//   # comment
//   vertex <vid> order <h1> <h2> ... <hk>
//   edge <hA> <hB>
//
// Throws ParseError (with the offending line) on syntax errors and on any
// structural violation.
StarGraph parse_graph(std::string_view text, const ParseOptions& options = {});

// Canonical text: vertices by name, each order in canonical form, edges sorted
// with the lesser half-edge first.
std::string serialize(const StarGraph& g);

// Lowercase hex SHA-256 of serialize(g).
std::string graph_hash(const StarGraph& g);

std::string sha256_hex(std::string_view data);

// Configuration model: n4 degree-4 and n6 degree-6 vertices, a uniform random
// perfect matching on all half-edges and a uniform random cyclic order at each
// vertex. Byte-identical output for identical arguments on every platform.
StarGraph gen_random(int n4, int n6, std::uint64_t seed);

}  // namespace starplanar
