// bstapprox: bottleneck spanning tree approximations from the command line.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bst/errors.hpp"
#include "bst/generate.hpp"
#include "bst/harness.hpp"
#include "bst/io.hpp"

namespace {

constexpr int kExitSolver = 1;
constexpr int kExitFormat = 2;

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw bst::Error("cannot write " + output);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate bottleneck spanning trees, forests and tours"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  int k = 0;
  bool exact = false;
  bool tours = false;

  bst::GenerateOptions gen;
  std::string partition = "none";
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember(bst::generator_kinds()));
  gen_cmd->add_option("--points", gen.points, "Number of points (random kinds)");
  gen_cmd->add_option("--dim", gen.dim, "Dimension (euclidean)");
  gen_cmd->add_option("--k", gen.k, "Tuple size, or the spider's k");
  gen_cmd->add_option("--leaves", gen.leaves, "Leaves (fixture-star)");
  gen_cmd->add_option("--partition", partition, "Partition to draw")
      ->check(CLI::IsMember({"none", "tuples", "clusters"}));
  gen_cmd->add_option("--singleton-rate", gen.singleton_rate, "Chance of a one-point cluster");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--output", output, "Output file (default: standard output)");

  auto add_solver = [&](const char* name, const char* about) {
    auto* cmd = app.add_subcommand(name, about);
    cmd->add_option("--input", input, "Instance file")->required();
    cmd->add_option("--output", output, "Output file (default: standard output)");
    cmd->add_option("--k", k, "Tuple size (dbst) or number of trees (pbst)");
    cmd->add_flag("--exact", exact, "Also run the exact oracle and report the ratio");
    cmd->add_flag("--tours", tours, "Lift the trees to tours");
    return cmd;
  };
  auto* dbst_cmd = add_solver("dbst", "Disjoint bottleneck spanning trees");
  auto* gbst_cmd = add_solver("gbst", "Generalized bottleneck spanning tree (clusters of two)");
  auto* pbst_cmd = add_solver("pbst", "Partitioned bottleneck spanning trees");

  std::string problem;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum of a small instance");
  oracle_cmd->add_option("problem", problem, "Problem")
      ->required()
      ->check(CLI::IsMember({"dbst", "gbst", "pbst", "tour", "tours"}));
  oracle_cmd->add_option("--input", input, "Instance file")->required();
  oracle_cmd->add_option("--output", output, "Output file (default: standard output)");
  oracle_cmd->add_option("--k", k, "Tuple size (dbst, tours) or number of trees (pbst)");

  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool no_timing = false;
  auto* batch_cmd = app.add_subcommand("batch", "Run a batch config and write CSV records");
  batch_cmd->add_option("--input", input, "Batch config file")->required();
  batch_cmd->add_option("--output", output, "CSV file (default: standard output)");
  batch_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--no-timing", no_timing, "Write 0 in the millis column");

  CLI11_PARSE(app, argc, argv);

  try {
    bst::RunOptions opts{exact, tours, k > 0 ? std::optional<int>(k) : std::nullopt};
    if (gen_cmd->parsed()) {
      gen.partition = partition == "tuples"     ? bst::PartitionKind::tuples
                      : partition == "clusters" ? bst::PartitionKind::clusters
                                                : bst::PartitionKind::none;
      emit(bst::dump(bst::problem_to_json(bst::generate(gen))), output);
    } else if (dbst_cmd->parsed()) {
      emit(bst::dump(bst::run_dbst(bst::read_problem(input), opts)), output);
    } else if (gbst_cmd->parsed()) {
      emit(bst::dump(bst::run_gbst(bst::read_problem(input), opts)), output);
    } else if (pbst_cmd->parsed()) {
      emit(bst::dump(bst::run_pbst(bst::read_problem(input), opts)), output);
    } else if (oracle_cmd->parsed()) {
      emit(bst::dump(bst::run_oracle(problem, bst::read_problem(input), opts)), output);
    } else if (batch_cmd->parsed()) {
      const auto config = bst::batch_config_from_json(bst::read_json_file(input));
      emit(bst::records_to_csv(bst::run_batch(config, jobs, !no_timing)), output);
    }
  } catch (const bst::FormatError& e) {
    std::cerr << "bstapprox: malformed input: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::exception& e) {
    std::cerr << "bstapprox: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
