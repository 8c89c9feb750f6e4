#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bst/metric.hpp"
#include "bst/tree.hpp"

namespace bst {

using Json = nlohmann::json;

/// An instance file: points plus whichever partitions the problem needs.
struct ProblemInput {
  MetricInstance instance;
  std::optional<std::vector<std::vector<PointId>>> tuples;
  std::optional<std::vector<std::vector<PointId>>> clusters;
  std::optional<int> k;
};

/// { "points": {"coordinates": [[..],..]} | {"matrix": [[..],..]},
///   "tuples": [[..],..]?, "clusters": [[..],..]?, "k": int? }
/// FormatError on a wrong shape; metric and domain errors propagate.
ProblemInput problem_from_json(const Json& j);
Json problem_to_json(const ProblemInput& input);

/// FormatError for unparsable text, Error when the file cannot be read.
Json read_json_file(const std::string& path);
ProblemInput read_problem(const std::string& path);

/// { "nodes": [...], "edges": [[u,v],...], "root": id|null }
Json tree_to_json(const Tree& tree);
Tree tree_from_json(const Json& j);
Json forest_to_json(const Forest& forest);

/// Compact, newline-terminated rendering; keys are sorted so output is reproducible.
std::string dump(const Json& j);

}  // namespace bst
