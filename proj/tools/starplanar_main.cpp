// starplanar: decide *-planarity of 4/6-valent *-graphs and check certificates.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starplanar/certificate.hpp"
#include "starplanar/diagram.hpp"
#include "starplanar/error.hpp"
#include "starplanar/graph_io.hpp"
#include "starplanar/planarity.hpp"

namespace sp = starplanar;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kRejected = 1, kUsage = 2, kResource = 3 };

// Failure that maps straight onto an exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Exit{kUsage, "cannot write " + path};
  out << text;
}

sp::StarGraph load_graph(const std::string& path) {
  try {
    return sp::parse_graph(read_file(path));
  } catch (const sp::ParseError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Exit{kUsage, path + ": not valid JSON: " + e.what()};
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void require_verified(const sp::StarGraph& g, const json& doc, const std::string& what) {
  if (auto result = sp::verify_certificate(g, doc); !result) {
    throw Exit{kRejected, what + " rejected: " + result.reason};
  }
}

int run_check(const std::string& file, const std::string& method, const std::string& out) {
  const auto g = load_graph(file);
  if (method == "criterion") {
    const auto verdict = sp::is_star_planar_by_criterion(g);
    std::cout << "verdict: " << (verdict.planar ? "planar" : "nonplanar") << " (criterion)\n";
    if (verdict.obstruct) {
      std::cout << "walk a: " << sp::describe_walk(g, verdict.obstruct->walk_a) << "\n"
                << "walk b: " << sp::describe_walk(g, verdict.obstruct->walk_b) << "\n";
      if (!out.empty()) write_output(out, dump(sp::obstruct_document(g, *verdict.obstruct)));
    } else if (!out.empty()) {
      std::cerr << "no certificate: absence of an obstruct is established by exhaustive search\n";
    }
    return kOk;
  }
  if (method == "embedding") {
    const auto witness = sp::find_planar_star_embedding(g);
    std::cout << "verdict: " << (witness ? "planar" : "nonplanar") << " (embedding)\n";
    if (witness && !out.empty()) write_output(out, dump(sp::embedding_document(g, *witness)));
    if (!witness && !out.empty()) {
      std::cerr << "no certificate: absence of a planar rotation is established by exhaustive search\n";
    }
    return kOk;
  }
  const auto verdict = sp::crosscheck(g);
  std::cout << "criterion: " << (verdict.criterion_planar ? "planar" : "nonplanar") << "\n"
            << "embedding: " << (verdict.embedding_planar ? "planar" : "nonplanar") << "\n";
  if (!out.empty()) write_output(out, dump(sp::crosscheck_document(g, verdict)));
  if (!verdict.agree) {
    std::cout << "verdict: DISAGREEMENT\n" << sp::serialize(g);
    return kRejected;
  }
  std::cout << "verdict: " << (verdict.embedding_planar ? "planar" : "nonplanar") << "\n";
  return kOk;
}

int run_expand(const std::string& file, int variant, const std::string& out,
               const std::string& map_out) {
  const auto g = load_graph(file);
  const auto expansion = sp::expand(g, variant);
  write_output(out, sp::serialize(expansion.graph));
  if (!map_out.empty()) write_output(map_out, dump(sp::expansion_map_document(g, expansion)));
  return kOk;
}

int run_obstruct(const std::string& file, const std::string& out,
                 const std::string& transition_out) {
  const auto g = load_graph(file);
  const auto cert = sp::find_obstruct(g);
  if (!cert) {
    std::cout << "no obstruct\n";
    return kOk;
  }
  std::cout << "walk a: " << sp::describe_walk(g, cert->walk_a) << "\n"
            << "walk b: " << sp::describe_walk(g, cert->walk_b) << "\n"
            << "crossing at " << g.vertex_name(cert->vertex) << "\n";
  if (!out.empty()) write_output(out, dump(sp::obstruct_document(g, *cert)));
  if (!transition_out.empty()) {
    const auto t = sp::complete_transition_system(g, {cert->walk_a, cert->walk_b});
    write_output(transition_out, dump(sp::transition_system_document(g, t)));
  }
  return kOk;
}

int run_embed(const std::string& file, const std::string& out) {
  const auto g = load_graph(file);
  const auto witness = sp::find_planar_star_embedding(g);
  if (!witness) {
    std::cout << "no planar *-embedding\n";
    return kOk;
  }
  std::cout << "planar: " << witness->trace.face_count() << " faces, genus "
            << witness->trace.genus << "\n";
  if (!out.empty()) write_output(out, dump(sp::embedding_document(g, *witness)));
  return kOk;
}

int run_lift(const std::string& graph_file, const std::string& expanded_file,
             const std::string& map_file, const std::string& obstruct_file,
             const std::string& out) {
  const auto g = load_graph(graph_file);
  const auto expanded = load_graph(expanded_file);
  const auto map_doc = load_json(map_file);
  const auto obstruct_doc = load_json(obstruct_file);
  require_verified(g, map_doc, "expansion map");
  if (sp::read_expanded_hash(map_doc) != sp::graph_hash(expanded)) {
    throw Exit{kRejected, "expansion map does not belong to " + expanded_file};
  }
  require_verified(expanded, obstruct_doc, "obstruct certificate");
  const auto map = sp::read_expansion_map(map_doc);
  const auto cert = sp::read_obstruct(expanded, obstruct_doc);
  try {
    const auto lifted = sp::lift_obstruct(g, expanded, map, cert);
    std::cout << "walk a: " << sp::describe_walk(g, lifted.walk_a) << "\n"
              << "walk b: " << sp::describe_walk(g, lifted.walk_b) << "\n";
    write_output(out, dump(sp::obstruct_document(g, lifted)));
  } catch (const sp::LiftingFailed& e) {
    std::cerr << e.what() << "\nlifted partition:\n" << e.partition();
    return kRejected;
  }
  return kOk;
}

int run_verify(const std::string& graph_file, const std::string& cert_file) {
  const auto g = load_graph(graph_file);
  const auto result = sp::verify_certificate_text(g, read_file(cert_file));
  std::cout << (result ? "ok" : "rejected: " + result.reason) << "\n";
  return result ? kOk : kRejected;
}

int run_gen(int v4, int v6, std::uint64_t seed, const std::string& out) {
  write_output(out, sp::serialize(sp::gen_random(v4, v6, seed)));
  return kOk;
}

struct InstanceResult {
  std::string graph;
  bool criterion_planar = false;
  bool embedding_planar = false;
  bool agree = false;
  std::string error;
  bool resource = false;
};

int run_crosscheck(int count, int v4, int v6, std::uint64_t seed, const std::string& report) {
  if (count < 0) throw Exit{kUsage, "--count must be non-negative"};
  std::vector<InstanceResult> results(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    auto& r = results[i];
    try {
      const auto g = sp::gen_random(v4, v6, seed + static_cast<std::uint64_t>(i));
      r.graph = sp::serialize(g);
      const auto verdict = sp::crosscheck(g);
      r.criterion_planar = verdict.criterion_planar;
      r.embedding_planar = verdict.embedding_planar;
      r.agree = verdict.agree;
    } catch (const sp::ResourceLimitExceeded& e) {
      r.error = e.what();
      r.resource = true;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  }

  int agree = 0;
  int planar = 0;
  int disagree = 0;
  int failed = 0;
  bool resource = false;
  json instances = json::array();
  for (int i = 0; i < count; ++i) {
    const auto& r = results[i];
    json item{{"index", i}, {"seed", seed + static_cast<std::uint64_t>(i)}};
    if (!r.error.empty()) {
      ++failed;
      resource = resource || r.resource;
      item["error"] = r.error;
    } else {
      agree += r.agree;
      disagree += !r.agree;
      planar += r.agree && r.embedding_planar;
      item["criterion_planar"] = r.criterion_planar;
      item["embedding_planar"] = r.embedding_planar;
      item["agree"] = r.agree;
      if (!r.agree) {
        item["graph"] = r.graph;
        std::cout << "DISAGREEMENT at index " << i << " (seed " << seed + i << "):\n" << r.graph;
      }
    }
    instances.push_back(item);
  }
  std::cout << "instances: " << count << "  agree: " << agree << "  disagree: " << disagree
            << "  errors: " << failed << "  planar: " << planar << "\n";
  if (!report.empty()) {
    json doc{{"v4", v4}, {"v6", v6}, {"seed", seed}, {"count", count},
             {"agree", agree}, {"disagree", disagree}, {"errors", failed},
             {"planar", planar}, {"instances", instances}};
    write_output(report, dump(doc));
  }
  if (disagree > 0) return kRejected;
  if (resource) return kResource;
  return failed > 0 ? kRejected : kOk;
}

int run_export(const std::string& graph_file, const std::string& cert_file,
               const std::string& out) {
  const auto g = load_graph(graph_file);
  std::optional<json> cert;
  if (!cert_file.empty()) cert = load_json(cert_file);
  write_output(out, sp::export_dot(g, cert));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide *-planarity of graphs with vertices of degree 4 or 6"};
  app.require_subcommand(1);

  std::string file, out, method = "both", map_out, transition_out, cert_file;
  std::string graph_file, expanded_file, map_file, obstruct_file, report;
  int variant = 1, v4 = 0, v6 = 0, count = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Decide planarity and emit a certificate");
  check->add_option("file", file, "Graph file")->required();
  check->add_option("--method", method, "criterion, embedding or both")
      ->check(CLI::IsMember({"criterion", "embedding", "both"}));
  check->add_option("--out", out, "Certificate output");

  auto* expand = app.add_subcommand("expand", "Replace every 6-vertex by a triangle");
  expand->add_option("file", file, "Graph file")->required();
  expand->add_option("--variant", variant, "Expansion variant")->check(CLI::IsMember({1, 2}));
  expand->add_option("--out", out, "Expanded graph output (default stdout)");
  expand->add_option("--map", map_out, "Expansion map certificate output");

  auto* obstruct = app.add_subcommand("obstruct", "Search a Vassiliev obstruct");
  obstruct->add_option("file", file, "Graph file")->required();
  obstruct->add_option("--out", out, "Obstruct certificate output");
  obstruct->add_option("--transition", transition_out, "Completed transition system output");

  auto* embed = app.add_subcommand("embed", "Search a planar *-embedding");
  embed->add_option("file", file, "Graph file")->required();
  embed->add_option("--out", out, "Embedding certificate output");

  auto* lift = app.add_subcommand("lift", "Lift an obstruct of the expansion to the graph");
  lift->add_option("--graph", graph_file, "Original graph")->required();
  lift->add_option("--expanded", expanded_file, "Expanded graph")->required();
  lift->add_option("--map", map_file, "Expansion map certificate")->required();
  lift->add_option("--obstruct", obstruct_file, "Obstruct certificate of the expansion")->required();
  lift->add_option("--out", out, "Lifted certificate output (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--graph", graph_file, "Graph file")->required();
  verify->add_option("--cert", cert_file, "Certificate file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random *-graph");
  gen->add_option("--v4", v4, "Number of 4-vertices")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--v6", v6, "Number of 6-vertices")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--out", out, "Output (default stdout)");

  auto* cross = app.add_subcommand("crosscheck", "Compare both deciders on random graphs");
  cross->add_option("--count", count, "Number of instances")->required();
  cross->add_option("--v4", v4, "Number of 4-vertices")->required()->check(CLI::NonNegativeNumber);
  cross->add_option("--v6", v6, "Number of 6-vertices")->required()->check(CLI::NonNegativeNumber);
  cross->add_option("--seed", seed, "Seed of the first instance")->required();
  cross->add_option("--report", report, "JSON report output");

  auto* exporter = app.add_subcommand("export", "Render a graph as Graphviz DOT");
  exporter->add_option("--graph", graph_file, "Graph file")->required();
  exporter->add_option("--cert", cert_file, "Certificate to highlight");
  exporter->add_option("--out", out, "Output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(file, method, out);
    if (*expand) return run_expand(file, variant, out, map_out);
    if (*obstruct) return run_obstruct(file, out, transition_out);
    if (*embed) return run_embed(file, out);
    if (*lift) return run_lift(graph_file, expanded_file, map_file, obstruct_file, out);
    if (*verify) return run_verify(graph_file, cert_file);
    if (*gen) return run_gen(v4, v6, seed, out);
    if (*cross) return run_crosscheck(count, v4, v6, seed, report);
    if (*exporter) return run_export(graph_file, cert_file, out);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const sp::ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const sp::CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
