#include "bary/io.hpp"

#include <json.hpp>

#include "bary/error.hpp"

namespace bary::io {

namespace {

using Json = nlohmann::ordered_json;

Json set_to_json(VertexSet s) {
  Json out = Json::array();
  s.for_each([&](int v) { out.push_back(v); });
  return out;
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_to_json(s));
  return out;
}

Json complex_json(const SimplicialComplex& complex) {
  Json out;
  out["ground_set"] = complex.ground_size();
  out["facets"] = sets_to_json(complex.facets());
  if (complex.is_void()) out["void"] = true;
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object()) malformed("expected a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& value, const char* what) {
  if (!value.is_number_integer()) malformed(std::string(what) + " must be an integer");
  const auto v = value.get<std::int64_t>();
  if (v < -1'000'000'000 || v > 1'000'000'000) malformed(std::string(what) + " out of range");
  return static_cast<int>(v);
}

VertexSet set_from_json(const Json& value) {
  if (!value.is_array()) malformed("a face must be an array of vertices");
  std::vector<int> elems;
  for (const Json& v : value) elems.push_back(as_int(v, "vertex"));
  return VertexSet(std::span<const int>(elems));
}

std::vector<VertexSet> sets_from_json(const Json& value, const char* what) {
  if (!value.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<VertexSet> out;
  for (const Json& s : value) out.push_back(set_from_json(s));
  return out;
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& complex) {
  return complex_json(complex).dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  const Json doc = parse(text);
  const int n = as_int(field(doc, "ground_set"), "ground_set");
  std::vector<VertexSet> facets = sets_from_json(field(doc, "facets"), "facets");
  bool is_void = false;
  if (const auto it = doc.find("void"); it != doc.end()) {
    if (!it->is_boolean()) malformed("\"void\" must be a boolean");
    is_void = it->get<bool>();
  }
  if (is_void) {
    if (!facets.empty()) malformed("a void complex cannot list facets");
    return SimplicialComplex::void_complex(n);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

std::string labeling_to_json(const FaceLabeling& labeling) {
  Json out;
  out["vertices"] = sets_to_json(labeling.faces);
  return out.dump();
}

FaceLabeling labeling_from_json(const std::string& text) {
  const Json doc = parse(text);
  return FaceLabeling{sets_from_json(field(doc, "vertices"), "vertices")};
}

std::string graph_to_json(const LabeledGraph& graph) {
  Json out;
  if (graph.labels()) {
    out["vertices"] = sets_to_json(graph.labels()->faces);
  } else {
    out["vertices"] = graph.vertex_count();
  }
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  return out.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  const Json doc = parse(text);
  const Json& vertices = field(doc, "vertices");
  int count = 0;
  std::optional<FaceLabeling> labels;
  if (vertices.is_array()) {
    labels = FaceLabeling{sets_from_json(vertices, "vertices")};
    count = static_cast<int>(labels->faces.size());
  } else {
    count = as_int(vertices, "vertices");
    if (count < 0) malformed("vertex count must be non-negative");
  }
  const Json& edge_list = field(doc, "edges");
  if (!edge_list.is_array()) malformed("edges must be an array");
  std::vector<Edge> edges;
  for (const Json& e : edge_list) {
    if (!e.is_array() || e.size() != 2) malformed("an edge must be a pair of vertex indices");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return LabeledGraph(count, std::move(edges), std::move(labels));
}

std::string generators_to_json(const std::vector<VertexSet>& generators) {
  Json out;
  out["generators"] = sets_to_json(generators);
  return out.dump();
}

std::string bijection_to_json(const VertexBijection* witness) {
  Json out;
  out["isomorphic"] = witness != nullptr;
  if (witness) {
    out["map"] = witness->image;
  } else {
    out["map"] = nullptr;
  }
  return out.dump();
}

std::string report_to_json(const ReconstructionReport& report) {
  Json out;
  out["status"] = std::string(to_string(report.status));
  out["complex"] = report.complex ? complex_json(*report.complex) : Json(nullptr);
  out["orientations_tried"] = report.orientations_tried;
  out["both_admissible"] = report.both_admissible;
  return out.dump();
}

std::string verification_to_json(const VerificationReport& report) {
  Json out;
  out["universe_size"] = report.universe_size;
  out["pair_checks"] = report.pair_checks;
  out["failures"] = report.failures;
  out["notes"] = report.notes;
  return out.dump();
}

}  // namespace bary::io
