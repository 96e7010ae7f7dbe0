#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qforge/graph.hpp"

namespace qforge {

// An oriented edge-end, tail -> head.
struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Closed orbit of the face-tracing successor map.
struct FaceWalk {
  std::vector<Dart> darts;

  std::size_t length() const { return darts.size(); }
  friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
};

// Oriented combinatorial embedding of a simple connected graph. rotation(v)
// lists the neighbors of v in counterclockwise cyclic order.
//
// Face tracing: the successor of dart (u, v) is (v, w) where w follows u in
// the rotation at v.
class RotationSystem {
 public:
  // Derives the graph from the rotations. Throws std::invalid_argument unless
  // the rotations describe a simple, symmetric, connected graph.
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotations);

  // Additionally checks that every rotation is a permutation of the
  // neighbor set of that vertex in `graph`.
  RotationSystem(const Graph& graph, std::vector<std::vector<Vertex>> rotations);

  const Graph& graph() const { return graph_; }
  std::size_t vertex_count() const { return rotations_.size(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }

  // Successor of dart (u, v) under face tracing.
  Dart successor(Dart d) const;

  // Rotations re-started at each vertex's smallest neighbor.
  std::vector<std::vector<Vertex>> canonical_rotations() const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.canonical_rotations() == b.canonical_rotations();
  }

 private:
  void index();

  Graph graph_;
  std::vector<std::vector<Vertex>> rotations_;
  // Dart ids are offset_[v] + position of the head in rotation(v).
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> twin_position_;
};

// Every face orbit exactly once. Each walk starts at the lexicographically
// smallest dart not yet visited, so output order is deterministic.
std::vector<FaceWalk> trace_faces(const RotationSystem& r);

struct EulerGenus {
  std::int64_t chi = 0;
  std::int64_t genus = 0;
};

EulerGenus euler_genus(const RotationSystem& r);

struct EmbeddingReport {
  std::int64_t alpha0 = 0;  // vertices
  std::int64_t alpha1 = 0;  // edges
  std::int64_t alpha2 = 0;  // faces
  std::int64_t euler_characteristic = 0;
  std::int64_t genus = 0;
  bool is_quadrangulation = false;
  std::vector<std::string> failures;
};

// Quadrangulation check: simple connected graph, every face a walk of
// length four through four distinct vertices and four distinct edges.
// Violations are collected in `failures`, never thrown.
EmbeddingReport validate_quadrangulation(const RotationSystem& r);

std::string describe(const FaceWalk& face);

struct EmbeddingDocument {
  RotationSystem embedding;
  std::optional<std::int64_t> declared_genus;
};

// {"format":"qforge-embedding/1","vertex_count":N,"rotations":[[...],...],
//  "declared_genus":G}; rotations start at each vertex's smallest neighbor.
std::string save_embedding(const RotationSystem& r,
                           std::optional<std::int64_t> declared_genus = std::nullopt);

// Structural parse; throws FormatError. Does not compare the declared genus.
EmbeddingDocument parse_embedding(std::string_view document);

// parse_embedding plus the declared-genus check (throws GenusMismatch).
RotationSystem load_embedding(std::string_view document);

}  // namespace qforge
