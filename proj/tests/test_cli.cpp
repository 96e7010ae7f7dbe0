#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qforge/cli.hpp"
#include "qforge/embedding.hpp"
#include "qforge/graph.hpp"

using namespace qforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("minorder") {
  auto r = run({"minorder", "-g", "53"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "exact 24 (gate formula)\n");
  CHECK(run({"minorder", "-g", "4"}).out ==
        "bounds [8, 10] (Euler lower bound / spinal upper bound)\n");
  r = run({"minorder", "-g", "0", "--scan", "5"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("bounds") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
  CHECK(run({"minorder"}).code == cli::kInvalidInput);
  CHECK(run({"minorder", "-g", "-3"}).code == cli::kInvalidInput);
  CHECK(run({"minorder", "-g", "3", "--bogus"}).code == cli::kInvalidInput);
  CHECK(run({}).code == cli::kInvalidInput);
}

TEST_CASE("build then verify") {
  auto r = run({"build", "--spine", "complete:12", "--minus", "2", "-o", "k12m2.json"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out.find("order 24, genus 53, faces 128") != std::string::npos);
  CHECK(r.out.find("minimal: yes") != std::string::npos);
  const auto first = slurp("k12m2.json");
  CHECK(run({"verify", "k12m2.json"}).code == cli::kSuccess);

  // Byte-stable output.
  REQUIRE(run({"build", "--spine", "complete:12", "--minus", "2", "-o", "k12m2b.json"}).code == 0);
  CHECK(slurp("k12m2b.json") == first);

  r = run({"build", "--spine", "complete:7", "--minus", "1", "-o", "k7.json"});
  CHECK(r.out.find("minimal: not certified") != std::string::npos);

  CHECK(run({"build", "--spine", "complete:4", "--minus", "4", "-o", "x.json"}).code ==
        cli::kInvalidInput);
  CHECK(run({"build", "--spine", "wheel:4", "-o", "x.json"}).code == cli::kInvalidInput);
  CHECK(run({"build", "-o", "x.json"}).code == cli::kInvalidInput);
}

TEST_CASE("build from a spine file") {
  spit("path.json", save_graph(Graph(3, {{0, 1}, {1, 2}})));
  auto r = run({"build", "--spine-file", "path.json", "-o", "path_emb.json"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.out.find("order 6, genus 0, faces 4") != std::string::npos);
  CHECK(run({"verify", "path_emb.json"}).code == cli::kSuccess);

  spit("split.json", save_graph(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(run({"build", "--spine-file", "split.json", "-o", "x.json"}).code == cli::kInvalidInput);
  CHECK(run({"build", "--spine-file", "missing.json", "-o", "x.json"}).code == cli::kInvalidInput);
}

TEST_CASE("verify reports corrupted embeddings") {
  // K4 with ascending rotations traces a square and an octagon.
  spit("k4.json", save_embedding(RotationSystem({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}})));
  auto r = run({"verify", "k4.json"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("has length 8") != std::string::npos);

  // A built embedding with two neighbors swapped at one vertex.
  REQUIRE(run({"build", "--spine", "complete:4", "-o", "k4s.json"}).code == 0);
  auto doc = slurp("k4s.json");
  auto emb = parse_embedding(doc);
  auto rot = emb.embedding.rotations();
  std::swap(rot[0][0], rot[0][1]);
  spit("k4s_bad.json", save_embedding(RotationSystem(rot), 3));
  r = run({"verify", "k4s_bad.json"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("face") != std::string::npos);

  spit("lie.json", save_embedding(emb.embedding, 2));
  r = run({"verify", "lie.json"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("declared genus 2") != std::string::npos);

  spit("broken.json", "{\"format\":\"qforge-embedding/1\",\"vertex_count\":2,\"rotations\":[[1],[]]}");
  CHECK(run({"verify", "broken.json"}).code == cli::kInvalidInput);
  spit("junk.json", "{");
  CHECK(run({"verify", "junk.json"}).code == cli::kInvalidInput);
}

TEST_CASE("interlace") {
  spit("k3.json", save_graph(complete_graph(3)));
  REQUIRE(run({"interlace", "k3.json", "-o", "k3i.json"}).code == cli::kSuccess);
  CHECK(load_graph(slurp("k3i.json")) == octahedral_graph(3));
  spit("dup.json", "{\"format\":\"qforge-graph/1\",\"vertex_count\":2,\"edges\":[[0,1],[0,1]]}");
  CHECK(run({"interlace", "dup.json", "-o", "x.json"}).code == cli::kInvalidInput);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "-g", "1", "-o", "torus.json"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("minimum order for genus 1: 5") != std::string::npos);
  CHECK(run({"verify", "torus.json"}).code == cli::kSuccess);

  r = run({"oracle", "-g", "2", "-n", "6", "-o", "none.json"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("edge count") != std::string::npos);

  r = run({"oracle", "-g", "2", "--max-nodes", "5", "-o", "x.json"});
  CHECK(r.code == cli::kInconclusive);
  CHECK(run({"oracle", "-g", "2", "--max-nodes", "0"}).code == cli::kInvalidInput);
}

TEST_CASE("spectrum") {
  auto r = run({"spectrum", "-g", "5", "--max-p", "10"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "spinal orders for genus 5 (p <= 10): 10 12 14 16 18 20\n");
  CHECK(run({"spectrum", "-g", "5"}).code == cli::kInvalidInput);
}
