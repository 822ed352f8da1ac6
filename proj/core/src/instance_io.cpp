#include "pdp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pdp {

using nlohmann::json;

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::BadInstanceFile, std::string("JSON parse error: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      Edge e;
      e.u = row.at(0).get<int>();
      e.v = row.at(1).get<int>();
      e.weight = row.size() > 2 ? row.at(2).get<long long>() : 1;
      edges.push_back(e);
    }
    std::vector<std::vector<int>> rotations(n);
    for (const auto& [key, value] : j.at("rotations").items()) {
      int v = std::stoi(key);
      if (v < 0 || v >= n) {
        fail(ErrorCode::BadInstanceFile, "rotation key out of range: " + key);
      }
      rotations[v] = value.get<std::vector<int>>();
    }
    Instance inst;
    inst.graph = PlanarGraph(n, std::move(edges), rotations);
    for (const auto& row : j.at("terminals")) {
      inst.terminals.emplace_back(row.at(0).get<int>(), row.at(1).get<int>());
    }
    std::string tag = j.at("case").get<std::string>();
    if (tag == "one-face") {
      inst.tag = CaseTag::kOneFace;
    } else if (tag == "two-face-parallel") {
      inst.tag = CaseTag::kTwoFaceParallel;
    } else {
      fail(ErrorCode::BadCaseTag, "unknown case tag " + tag);
    }
    for (const auto& row : j.at("faces")) {
      inst.face_anchors.push_back(
          make_dart(row.at(0).get<int>(), row.at(1).get<int>()));
    }
    if (j.contains("mode")) {
      std::string mode = j.at("mode").get<std::string>();
      if (mode == "edge-disjoint") {
        inst.edge_disjoint = true;
      } else {
        fail(ErrorCode::BadInstanceFile, "unknown mode " + mode);
      }
    }
    return inst;
  } catch (const json::exception& e) {
    fail(ErrorCode::BadInstanceFile, std::string("bad instance: ") + e.what());
  }
}

std::string instance_to_json(const Instance& instance) {
  json j;
  const PlanarGraph& g = instance.graph;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    if (e.weight == 1) {
      edges.push_back({e.u, e.v});
    } else {
      edges.push_back({e.u, e.v, e.weight});
    }
  }
  j["edges"] = std::move(edges);
  json rotations = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.rotation(v).empty()) continue;
    std::vector<int> ids;
    for (Dart d : g.rotation(v)) ids.push_back(dart_edge(d));
    rotations[std::to_string(v)] = ids;
  }
  j["rotations"] = std::move(rotations);
  json terminals = json::array();
  for (const auto& [s, t] : instance.terminals) terminals.push_back({s, t});
  j["terminals"] = std::move(terminals);
  j["case"] =
      instance.tag == CaseTag::kOneFace ? "one-face" : "two-face-parallel";
  json anchors = json::array();
  for (Dart d : instance.face_anchors) {
    anchors.push_back({dart_edge(d), dart_dir(d)});
  }
  j["faces"] = std::move(anchors);
  if (instance.edge_disjoint) j["mode"] = "edge-disjoint";
  return j.dump();
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadInstanceFile, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::BadInstanceFile, "cannot open " + path);
  out << instance_to_json(instance) << "\n";
}

std::string instance_digest(const Instance& instance) {
  const std::string canonical = instance_to_json(instance);
  unsigned long long h = 1469598103934665603ULL;  // FNV-1a 64
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string instance_to_dot(const Instance& instance) {
  const PlanarGraph& g = instance.graph;
  std::ostringstream out;
  out << "graph instance {\n  node [shape=circle];\n";
  std::vector<int> role(g.vertex_count(), 0);
  for (const auto& [s, t] : instance.terminals) {
    role[s] = 1;
    role[t] = 2;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (role[v] == 1) {
      out << "  " << v << " [style=filled fillcolor=lightblue];\n";
    } else if (role[v] == 2) {
      out << "  " << v << " [style=filled fillcolor=lightsalmon];\n";
    }
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (e.weight != 1) out << " [label=\"" << e.weight << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pdp
