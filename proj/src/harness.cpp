#include "bst/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "bst/dbst.hpp"
#include "bst/errors.hpp"
#include "bst/gbst.hpp"
#include "bst/oracle.hpp"
#include "bst/pbst.hpp"
#include "bst/tours.hpp"

namespace bst {

namespace {

TuplePartition tuples_of(const ProblemInput& in, const RunOptions& o) {
  if (!in.tuples || in.tuples->empty()) throw FormatError("instance has no \"tuples\"");
  const int k = o.k.value_or(in.k.value_or(static_cast<int>(in.tuples->front().size())));
  return TuplePartition(k, *in.tuples);
}

ClusterPartition clusters_of(const ProblemInput& in) {
  if (!in.clusters) throw FormatError("instance has no \"clusters\"");
  return ClusterPartition(2, *in.clusters);
}

int trees_of(const ProblemInput& in, const RunOptions& o) {
  if (o.k) return *o.k;
  if (in.k) return *in.k;
  throw FormatError("pbst needs k from --k or the instance's \"k\"");
}

void attach_optimum(Json& out, double achieved, double optimal) {
  out["optimal"] = optimal;
  const auto r = approximation_ratio(achieved, optimal);
  out["ratio"] = r ? Json(*r) : Json(nullptr);
}

void attach_tours(Json& out, const TourSet& tours) {
  out["tours"] = tours.tours;
  out["tour_bottleneck"] = tours.bottleneck;
}

}  // namespace

std::optional<double> approximation_ratio(double achieved, double optimal) {
  if (optimal == 0.0) return achieved == 0.0 ? std::optional<double>(1.0) : std::nullopt;
  return achieved / optimal;
}

Json run_dbst(const ProblemInput& in, const RunOptions& o) {
  const TuplePartition tuples = tuples_of(in, o);
  const DbstResult r = solve_dbst(in.instance, tuples);
  Json out{{"trees", forest_to_json(r.forest)},
           {"bottleneck", r.bottleneck},
           {"mst_bottleneck", r.mst_bottleneck},
           {"shortcut", r.shortcut}};
  if (r.labeling) out["labels"] = r.labeling->labels;
  if (o.exact) attach_optimum(out, r.bottleneck, exact_dbst(in.instance, tuples).bottleneck);
  if (o.tours) attach_tours(out, lift_to_tours(r.forest, in.instance));
  return out;
}

Json run_gbst(const ProblemInput& in, const RunOptions& o) {
  const ClusterPartition clusters = clusters_of(in);
  const GbstResult r = solve_2gbst(in.instance, clusters);
  Json out{{"tree", tree_to_json(r.tree)},
           {"selected", r.tree.nodes()},
           {"bottleneck", r.bottleneck},
           {"t1_bottleneck", r.t1_bottleneck}};
  if (o.exact) attach_optimum(out, r.bottleneck, exact_gbst(in.instance, clusters).bottleneck);
  if (o.tours) attach_tours(out, lift_to_tours(r.tree, in.instance));
  return out;
}

Json run_pbst(const ProblemInput& in, const RunOptions& o) {
  const int k = trees_of(in, o);
  const PbstResult r = solve_pbst(in.instance, k);
  Json out{{"trees", forest_to_json(r.forest)},
           {"bottleneck", r.bottleneck},
           {"mst_bottleneck", r.mst_bottleneck}};
  if (o.exact) {
    attach_optimum(out, r.bottleneck, exact_pbst(in.instance, k, Search::pruned).bottleneck);
  }
  if (o.tours) attach_tours(out, lift_to_tours(r.forest, in.instance));
  return out;
}

Json run_oracle(const std::string& problem, const ProblemInput& in, const RunOptions& o) {
  Json out{{"problem", problem}};
  if (problem == "dbst") {
    const ForestOptimum f = exact_dbst(in.instance, tuples_of(in, o));
    out["trees"] = forest_to_json(f.forest);
    out["optimal"] = f.bottleneck;
  } else if (problem == "gbst") {
    const TreeOptimum t = exact_gbst(in.instance, clusters_of(in));
    out["tree"] = tree_to_json(t.tree);
    out["optimal"] = t.bottleneck;
  } else if (problem == "pbst") {
    const ForestOptimum f = exact_pbst(in.instance, trees_of(in, o), Search::pruned);
    out["trees"] = forest_to_json(f.forest);
    out["optimal"] = f.bottleneck;
  } else if (problem == "tour") {
    std::vector<PointId> all(in.instance.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<PointId>(i);
    const TourOptimum t = exact_bottleneck_tour(in.instance, all);
    out["tours"] = Json::array({t.tour});
    out["optimal"] = t.bottleneck;
  } else if (problem == "tours") {
    const TourSet t = exact_disjoint_tours(in.instance, tuples_of(in, o));
    out["tours"] = t.tours;
    out["optimal"] = t.bottleneck;
  } else {
    throw DomainError("unknown oracle problem " + problem);
  }
  return out;
}

BatchConfig batch_config_from_json(const Json& j) {
  try {
    BatchConfig c;
    if (j.contains("seeds")) {
      c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
      const auto range = j.at("seed_range").get<std::vector<std::uint64_t>>();
      if (range.size() != 2) throw FormatError("\"seed_range\" is [first, count]");
      for (std::uint64_t s = 0; s < range[1]; ++s) c.seeds.push_back(range[0] + s);
    }
    for (const Json& g : j.at("generators")) {
      GenerateOptions o;
      o.kind = g.at("kind").get<std::string>();
      o.dim = g.value("dim", o.dim);
      o.points = g.value("points", o.points);
      o.leaves = g.value("leaves", o.leaves);
      o.k = g.value("k", o.k);
      o.singleton_rate = g.value("singleton_rate", o.singleton_rate);
      c.generators.push_back(o);
    }
    for (const Json& p : j.at("problems")) {
      const auto name = p.at("problem").get<std::string>();
      if (name != "dbst" && name != "gbst" && name != "pbst") {
        throw FormatError("unknown problem " + name);
      }
      c.problems.emplace_back(name, p.value("k", name == "gbst" ? 2 : 0));
      if (name != "gbst" && c.problems.back().second < 1) {
        throw FormatError(name + " needs a positive \"k\"");
      }
    }
    c.exact = j.value("exact", false);
    return c;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("batch config: ") + e.what());
  }
}

namespace {

struct Job {
  std::size_t generator;
  std::size_t problem;
  std::uint64_t seed;
};

ExperimentRecord run_record(const BatchConfig& config, const Job& job, bool timing) {
  GenerateOptions g = config.generators[job.generator];
  const auto& [problem, k] = config.problems[job.problem];
  g.seed = job.seed;
  g.partition = problem == "dbst"   ? PartitionKind::tuples
                : problem == "gbst" ? PartitionKind::clusters
                                    : PartitionKind::none;
  if (problem == "dbst") g.k = k;

  const auto start = std::chrono::steady_clock::now();
  ProblemInput in = generate(g);
  if (problem == "dbst" && !in.tuples) {
    Rng rng(job.seed);  // fixtures carry no tuples
    in.tuples = random_tuples(static_cast<int>(in.instance.size()), k, rng);
  }
  ExperimentRecord r{g.kind, job.seed, problem, k, 0, 0.0, std::nullopt, std::nullopt, 0.0};
  if (problem == "dbst") {
    const TuplePartition tuples(k, *in.tuples);
    r.n = static_cast<int>(tuples.count());
    r.achieved = solve_dbst(in.instance, tuples).bottleneck;
    if (config.exact) r.optimal = exact_dbst(in.instance, tuples).bottleneck;
  } else if (problem == "gbst") {
    const ClusterPartition clusters = clusters_of(in);
    r.n = static_cast<int>(clusters.count());
    r.achieved = solve_2gbst(in.instance, clusters).bottleneck;
    if (config.exact) r.optimal = exact_gbst(in.instance, clusters).bottleneck;
  } else {
    r.n = static_cast<int>(in.instance.size()) / k;
    r.achieved = solve_pbst(in.instance, k).bottleneck;
    if (config.exact) r.optimal = exact_pbst(in.instance, k, Search::pruned).bottleneck;
  }
  if (r.optimal) r.ratio = approximation_ratio(r.achieved, *r.optimal);
  if (timing) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  }
  return r;
}

}  // namespace

std::vector<ExperimentRecord> run_batch(const BatchConfig& config, int jobs, bool timing) {
  std::vector<Job> work;
  for (std::size_t g = 0; g < config.generators.size(); ++g) {
    for (std::size_t p = 0; p < config.problems.size(); ++p) {
      for (std::uint64_t s : config.seeds) work.push_back({g, p, s});
    }
  }
  std::vector<ExperimentRecord> records(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        records[i] = run_record(config, work[i], timing);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.generator, a.seed, a.problem, a.k) <
           std::tie(b.generator, b.seed, b.problem, b.k);
  });
  return records;
}

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string number(const std::optional<double>& x) { return x ? number(*x) : std::string(); }

}  // namespace

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "generator,seed,problem,k,n,achieved,optimal,ratio,millis\n";
  for (const auto& r : records) {
    out += r.generator + "," + std::to_string(r.seed) + "," + r.problem + "," +
           std::to_string(r.k) + "," + std::to_string(r.n) + "," + number(r.achieved) + "," +
           number(r.optimal) + "," + number(r.ratio) + "," + number(r.millis) + "\n";
  }
  return out;
}

}  // namespace bst
