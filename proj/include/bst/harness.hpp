#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bst/generate.hpp"
#include "bst/io.hpp"

namespace bst {

struct RunOptions {
  bool exact = false;
  bool tours = false;
  std::optional<int> k;  // overrides the file's "k"
};

/// achieved / optimal; 1 when both are 0 and empty when only the optimum is 0.
std::optional<double> approximation_ratio(double achieved, double optimal);

/// Result documents for the three solvers. dbst uses the tuples (k is the tuple size),
/// gbst the clusters, pbst needs k trees from the options or the file.
Json run_dbst(const ProblemInput& input, const RunOptions& options);
Json run_gbst(const ProblemInput& input, const RunOptions& options);
Json run_pbst(const ProblemInput& input, const RunOptions& options);

/// Exact optimum alone. problem is dbst, gbst, pbst, tour (one tour through every
/// point) or tours (disjoint tours, one member of every tuple each).
Json run_oracle(const std::string& problem, const ProblemInput& input, const RunOptions& options);

struct ExperimentRecord {
  std::string generator;
  std::uint64_t seed = 0;
  std::string problem;
  int k = 0;
  int n = 0;
  double achieved = 0.0;
  std::optional<double> optimal;
  std::optional<double> ratio;
  double millis = 0.0;
};

struct BatchConfig {
  std::vector<std::uint64_t> seeds;
  std::vector<GenerateOptions> generators;  // seed and partition are filled per record
  std::vector<std::pair<std::string, int>> problems;  // problem name and k
  bool exact = false;
};

/// { "seeds": [..] | "seed_range": [first, count],
///   "generators": [{"kind": .., "dim": .., "points": .., "leaves": .., "k": ..,
///                   "singleton_rate": ..}],
///   "problems": [{"problem": "dbst"|"gbst"|"pbst", "k": ..}], "exact": bool }
BatchConfig batch_config_from_json(const Json& j);

/// Every generator x problem x seed combination, sorted by generator, seed, problem
/// and k whatever order the `jobs` worker threads finish in. With `timing` off the
/// millis column is 0 so the output is reproducible byte for byte.
std::vector<ExperimentRecord> run_batch(const BatchConfig& config, int jobs, bool timing);

/// Header generator,seed,problem,k,n,achieved,optimal,ratio,millis; absent values empty.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);

}  // namespace bst
