#include <algorithm>
#include <random>

#include "doctest.h"
#include "qforge/embedding.hpp"
#include "qforge/spinal.hpp"
#include "test_support.hpp"

using namespace qforge;
using Rotations = std::vector<std::vector<Vertex>>;

namespace {

RotationSystem square_on_sphere() {
  // 4-cycle 0-2-1-3
  return RotationSystem({{2, 3}, {2, 3}, {0, 1}, {0, 1}});
}

RotationSystem k4_ascending() { return RotationSystem({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}); }

std::vector<std::size_t> lengths(const std::vector<FaceWalk>& faces) {
  std::vector<std::size_t> out;
  for (const auto& f : faces) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rotation system construction") {
  CHECK_NOTHROW(square_on_sphere());
  CHECK_THROWS_AS(RotationSystem(Rotations{{1}, {}}), std::invalid_argument);              // asymmetric
  CHECK_THROWS_AS(RotationSystem({{1, 1}, {0}}), std::invalid_argument);          // repeated
  CHECK_THROWS_AS(RotationSystem({{0, 1}, {0}}), std::invalid_argument);          // loop
  CHECK_THROWS_AS(RotationSystem({{1}, {0}, {3}, {2}}), std::invalid_argument);   // disconnected
  CHECK_THROWS_AS(RotationSystem(Rotations{{5}, {0}}), std::invalid_argument);             // out of range
  CHECK_THROWS_AS(RotationSystem(complete_graph(3), {{1}, {0}, {}}), std::invalid_argument);
  CHECK(RotationSystem(complete_graph(4), {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}) ==
        k4_ascending());
}

TEST_CASE("face tracing on the sphere square") {
  const auto faces = trace_faces(square_on_sphere());
  CHECK(lengths(faces) == std::vector<std::size_t>{4, 4});
  CHECK(faces[0].darts.front() == Dart{0, 2});
  const auto eg = euler_genus(square_on_sphere());
  CHECK(eg.chi == 2);
  CHECK(eg.genus == 0);
}

TEST_CASE("K4 with ascending rotations is a torus with a square and an octagon") {
  const auto r = k4_ascending();
  const auto reference = testing::brute_faces(r.rotations());
  std::vector<std::size_t> ref_lengths;
  for (const auto& c : reference) ref_lengths.push_back(c.size());
  std::sort(ref_lengths.begin(), ref_lengths.end());
  CHECK(ref_lengths == std::vector<std::size_t>{4, 8});

  CHECK(lengths(trace_faces(r)) == ref_lengths);
  const auto eg = euler_genus(r);
  CHECK(eg.chi == 0);
  CHECK(eg.genus == 1);

  const auto report = validate_quadrangulation(r);
  CHECK_FALSE(report.is_quadrangulation);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].find("has length 8") != std::string::npos);
  CHECK(report.alpha2 == 2);
}

TEST_CASE("successor follows the rotation at the head") {
  const auto r = k4_ascending();
  CHECK(r.successor({0, 1}) == Dart{1, 2});
  CHECK(r.successor({2, 0}) == Dart{0, 3});
  CHECK(r.successor({3, 2}) == Dart{2, 0});
  CHECK_THROWS_AS(r.successor({0, 0}), std::invalid_argument);
}

TEST_CASE("trace_faces agrees with the permutation definition on random rotations") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = testing::random_connected_graph(rng, n, 20);
    auto rot = g.adjacency();
    for (auto& row : rot) std::shuffle(row.begin(), row.end(), rng);
    const RotationSystem r(g, rot);
    const auto faces = trace_faces(r);
    const auto reference = testing::brute_faces(rot);
    CHECK(faces.size() == reference.size());

    std::size_t darts = 0;
    for (const auto& f : faces) {
      darts += f.length();
      for (std::size_t k = 0; k < f.length(); ++k)
        CHECK(r.successor(f.darts[k]) == f.darts[(k + 1) % f.length()]);
    }
    CHECK(darts == 2 * g.edge_count());

    const auto eg = euler_genus(r);
    CHECK(eg.chi % 2 == 0);
    CHECK(eg.chi <= 2);
    CHECK(trace_faces(r) == faces);
  }
}

TEST_CASE("validation of spinal outputs") {
  const auto k3 = spinal::build_spinal(complete_graph(3));
  const auto faces = trace_faces(k3);
  CHECK(lengths(faces) == std::vector<std::size_t>(6, 4));
  CHECK(6 - 12 + static_cast<int>(faces.size()) == 0);

  const auto r = spinal::build_spinal(delete_edges_connected(complete_graph(12), 2));
  const auto report = validate_quadrangulation(r);
  CHECK(report.is_quadrangulation);
  CHECK(report.alpha2 == 128);
  CHECK(report.genus == 53);
  CHECK(4 * report.alpha2 == 2 * report.alpha1);
  CHECK(report.alpha1 == 2 * (report.alpha0 - 2 + 2 * report.genus));
}

TEST_CASE("sphere square is a quadrangulation with two faces sharing all edges") {
  const auto report = validate_quadrangulation(square_on_sphere());
  CHECK(report.is_quadrangulation);
  CHECK(report.alpha2 == 2);
  CHECK(report.genus == 0);
}

TEST_CASE("a length-4 face that is not a 4-cycle is rejected") {
  // Path 1-0-2: its single face walks 0 1 0 2.
  const RotationSystem r({{1, 2}, {0}, {0}});
  const auto faces = trace_faces(r);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].length() == 4);
  const auto report = validate_quadrangulation(r);
  CHECK_FALSE(report.is_quadrangulation);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].find("(0 1 0 2)") != std::string::npos);
}

TEST_CASE("embedding documents") {
  const auto r = square_on_sphere();
  const std::string doc = save_embedding(r);
  CHECK(doc == "{\"format\":\"qforge-embedding/1\",\"vertex_count\":4,\"rotations\":[[2,3],[2,3],[0,1],[0,1]]}\n");
  CHECK(load_embedding(doc) == r);
  CHECK(load_embedding(doc).rotations() == r.rotations());

  // Canonical output starts every rotation at its smallest neighbor.
  const RotationSystem shifted({{3, 1, 2}, {2, 3, 0}, {0, 1, 3}, {1, 2, 0}});
  const auto reloaded = load_embedding(save_embedding(shifted, euler_genus(shifted).genus));
  CHECK(reloaded.rotation(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(reloaded == shifted);

  CHECK_THROWS_AS(load_embedding("{\"format\":\"qforge-embedding/1\",\"vertex_count\":4,"
                                 "\"rotations\":[[2,3],[2],[0,1],[0,1]]}"),
                  FormatError);
  CHECK_THROWS_AS(load_embedding("{\"format\":\"qforge-embedding/1\",\"vertex_count\":3,"
                                 "\"rotations\":[[2,3],[2,3],[0,1],[0,1]]}"),
                  FormatError);
  CHECK_THROWS_AS(load_embedding("[]"), FormatError);

  const auto k12 = spinal::build_spinal(complete_graph(12));
  CHECK_THROWS_AS(load_embedding(save_embedding(k12, 54)), GenusMismatch);
  CHECK(load_embedding(save_embedding(k12, 55)) == k12);
  const auto parsed = parse_embedding(save_embedding(k12, 54));
  CHECK(parsed.declared_genus == 54);
}
