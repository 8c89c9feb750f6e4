#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bst/errors.hpp"
#include "bst/generate.hpp"
#include "bst/io.hpp"

using namespace bst;

TEST_CASE("instance round trip") {
  ProblemInput in = generate({.kind = "euclidean", .dim = 3, .points = 6, .k = 2,
                              .partition = PartitionKind::tuples, .seed = 11});
  const Json j = problem_to_json(in);
  const ProblemInput back = problem_from_json(j);
  CHECK(back.instance.distance_matrix() == in.instance.distance_matrix());
  CHECK(back.tuples == in.tuples);
  CHECK(back.k == in.k);
  CHECK(dump(problem_to_json(back)) == dump(j));
}

TEST_CASE("matrix instances and clusters") {
  const Json j = Json::parse(R"({"points": {"matrix": [[0,1,2],[1,0,1],[2,1,0]]},
                                 "clusters": [[0],[1,2]]})");
  const ProblemInput in = problem_from_json(j);
  CHECK(in.instance.distance(0, 2) == 2.0);
  REQUIRE(in.clusters);
  CHECK(in.clusters->size() == 2);
  CHECK_FALSE(in.tuples);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(problem_from_json(Json::array()), FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {}})")), FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {"coordinates": [[0]], "matrix": [[0]]}})")),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {"coordinates": [["a"]]}})")), FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {"coordinates": [[0]]}, "tuples": [[0.5]]})")),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {"coordinates": [[0]]}, "k": "2"})")),
                  FormatError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"points": {"matrix": [[0,5,1],[5,0,1],[1,1,0]]}})")),
                  MetricError);
}

TEST_CASE("reading files") {
  const std::string path = "io_test_instance.json";
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK_THROWS_AS(read_problem(path), FormatError);
  {
    std::ofstream f(path);
    f << R"({"points": {"coordinates": [[0],[1]]}})";
  }
  CHECK(read_problem(path).instance.size() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("no/such/file.json"), Error);
}

TEST_CASE("tree round trip") {
  const Tree t({0, 1, 2}, {{0, 1}, {2, 1}}, 2);
  const Json j = tree_to_json(t);
  CHECK(dump(j) == "{\"edges\":[[0,1],[2,1]],\"nodes\":[0,1,2],\"root\":2}\n");
  const Tree back = tree_from_json(j);
  CHECK(back.nodes() == t.nodes());
  CHECK(back.edges() == t.edges());
  CHECK(back.root() == t.root());
  CHECK(tree_to_json(Tree(4))["root"].is_null());
  CHECK(tree_from_json(Json::parse(R"({"nodes":[3],"edges":[],"root":null})")).size() == 1);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"nodes":[0,1],"edges":[[0,1,2]]})")), FormatError);
}
