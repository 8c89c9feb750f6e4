#include "bst/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "bst/errors.hpp"

namespace bst {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::vector<double>> real_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<double>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
    std::vector<double> r;
    for (const Json& x : row) {
      if (!x.is_number()) throw FormatError(std::string(what) + " entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

PointId point_id(const Json& x, const char* what) {
  if (!x.is_number_integer()) throw FormatError(std::string(what) + " ids must be integers");
  const auto v = x.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<PointId>::max()) {
    throw IdentifierError(std::string(what) + " id " + std::to_string(v) + " out of range");
  }
  return static_cast<PointId>(v);
}

std::vector<std::vector<PointId>> id_groups(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<PointId>> groups;
  for (const Json& g : j) {
    if (!g.is_array()) throw FormatError(std::string(what) + " must be an array of arrays");
    std::vector<PointId> ids;
    for (const Json& x : g) ids.push_back(point_id(x, what));
    groups.push_back(std::move(ids));
  }
  return groups;
}

}  // namespace

ProblemInput problem_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  const Json& points = member(j, "points");
  if (!points.is_object()) throw FormatError("\"points\" must be an object");
  const bool has_coords = points.contains("coordinates");
  const bool has_matrix = points.contains("matrix");
  if (has_coords == has_matrix) {
    throw FormatError("\"points\" needs exactly one of \"coordinates\" and \"matrix\"");
  }
  ProblemInput in{has_coords
                      ? MetricInstance::euclidean(real_rows(points.at("coordinates"), "coordinates"))
                      : MetricInstance::from_matrix(real_rows(points.at("matrix"), "matrix")),
                  std::nullopt, std::nullopt, std::nullopt};
  if (j.contains("tuples")) in.tuples = id_groups(j.at("tuples"), "tuples");
  if (j.contains("clusters")) in.clusters = id_groups(j.at("clusters"), "clusters");
  if (j.contains("k")) {
    if (!j.at("k").is_number_integer()) throw FormatError("\"k\" must be an integer");
    in.k = j.at("k").get<int>();
  }
  return in;
}

Json problem_to_json(const ProblemInput& input) {
  Json j;
  if (const auto* c = input.instance.coordinates()) {
    j["points"]["coordinates"] = *c;
  } else {
    j["points"]["matrix"] = *input.instance.matrix();
  }
  if (input.tuples) j["tuples"] = *input.tuples;
  if (input.clusters) j["clusters"] = *input.clusters;
  if (input.k) j["k"] = *input.k;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot read " + path);
  std::stringstream text;
  text << file.rdbuf();
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ProblemInput read_problem(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return problem_from_json(j);
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Json tree_to_json(const Tree& tree) {
  Json edges = Json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
  Json j{{"nodes", tree.nodes()}, {"edges", edges}, {"root", nullptr}};
  if (tree.root()) j["root"] = *tree.root();
  return j;
}

Tree tree_from_json(const Json& j) {
  std::vector<PointId> nodes;
  const Json& ns = member(j, "nodes");
  if (!ns.is_array()) throw FormatError("\"nodes\" must be an array");
  for (const Json& x : ns) nodes.push_back(point_id(x, "node"));
  std::vector<Edge> edges;
  for (const auto& e : id_groups(member(j, "edges"), "edges")) {
    if (e.size() != 2) throw FormatError("edges must be pairs");
    edges.push_back({e[0], e[1]});
  }
  std::optional<PointId> root;
  if (j.contains("root") && !j.at("root").is_null()) root = point_id(j.at("root"), "root");
  return Tree(std::move(nodes), std::move(edges), root);
}

Json forest_to_json(const Forest& forest) {
  Json trees = Json::array();
  for (const Tree& t : forest.trees()) trees.push_back(tree_to_json(t));
  return trees;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace bst
