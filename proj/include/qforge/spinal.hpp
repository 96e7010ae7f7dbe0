#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qforge/embedding.hpp"
#include "qforge/graph.hpp"

// Incremental surgery that embeds the 2-fold interlacement G[:] of a
// connected spine G as a quadrangulation of the surface of genus beta(G).
//
// Spine vertex w owns the embedding vertices 2w (w') and 2w+1 (w''). A quad
// face witnesses w when w' and w'' are opposite corners of it. Two kinds of
// step grow the embedding, both cutting along a witness face:
//
//   tree_add(u, v)   v is new; one witness face of u is split into three.
//                    Genus is unchanged.
//   chord_add(u, v)  both are present; witness faces of u and v are joined
//                    by a handle carrying the four new edges. Genus + 1.
namespace qforge::spinal {

// Face as a dart cycle: q[0] -> q[1] -> q[2] -> q[3] -> q[0].
using Quad = std::array<Vertex, 4>;

// No witness face can be used without leaving some spine vertex unwitnessed.
class SurgeryConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BuildState {
 public:
  // Spine = the single edge uv; embedding = the 4-cycle u' v' u'' v'' on the
  // sphere. Throws std::invalid_argument if u == v.
  static BuildState init_base(Vertex u, Vertex v);

  // Usable witness faces of u for a tree step, ascending face id.
  std::vector<std::size_t> tree_candidates(Vertex u) const;
  // Usable (witness of u, witness of v) pairs for a chord step, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> chord_candidates(Vertex u, Vertex v) const;

  // Picks the first candidate; throws SurgeryConflict if there is none.
  BuildState tree_add(Vertex u, Vertex v) const;
  BuildState tree_add(Vertex u, Vertex v, std::size_t face) const;
  BuildState chord_add(Vertex u, Vertex v) const;
  BuildState chord_add(Vertex u, Vertex v, std::size_t face_u, std::size_t face_v) const;

  bool in_spine(Vertex w) const { return w < in_spine_.size() && in_spine_[w]; }
  std::size_t spine_vertex_count() const;
  const std::vector<Edge>& spine_edges() const { return spine_edges_; }
  std::int64_t spine_betti() const;

  // Present spine vertices relabeled 0..k-1 in ascending order.
  Graph spine() const;
  // Embedding of interlace(spine()), using the same relabeling.
  RotationSystem embedding() const;

  const std::vector<Quad>& faces() const { return faces_; }
  // Spine vertices (at most two) witnessed by a face.
  std::vector<Vertex> witnessed_by(const Quad& q) const;
  std::vector<std::size_t> witnesses(Vertex w) const;

 private:
  BuildState() = default;
  void require_spine(Vertex w, const char* what) const;
  std::vector<std::size_t> witness_counts() const;
  void grow(Vertex w);
  void check_face(const Quad& q) const;

  std::vector<bool> in_spine_;
  std::vector<Edge> spine_edges_;
  std::vector<std::vector<Vertex>> rotations_;  // indexed by embedding vertex
  std::vector<Quad> faces_;
};

struct BuildStats {
  std::uint64_t steps = 0;       // surgery steps applied, including retried ones
  std::uint64_t backtracks = 0;  // candidate subtrees abandoned
  bool reordered_chords = false;
};

struct SpinalBuild {
  RotationSystem embedding;
  BuildStats stats;
};

// Rotation system on interlace(g) that is a quadrangulation of genus
// betti(g). Tree edges of a BFS tree from vertex 0 go first in discovery
// order, then the remaining edges lexicographically; witness faces are
// tried in ascending id with depth-first backtracking. Throws
// std::invalid_argument for disconnected graphs or fewer than two vertices,
// std::logic_error if the search is exhausted.
SpinalBuild build_spinal_with_stats(const Graph& g);
RotationSystem build_spinal(const Graph& g);

struct SpinalInstance {
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::int64_t genus = 0;
  bool certified_minimal = false;
  Graph spine;
  RotationSystem embedding;
};

// Spinal quadrangulation with spine K_p minus m edges (removed by
// delete_edges_connected). certified_minimal reports the p >= 4(m+1) test.
SpinalInstance build_instance(std::int64_t p, std::int64_t m);

// Order-2p spinal quadrangulation of the genus-g surface. Throws
// std::invalid_argument if g > beta(K_p).
SpinalInstance build_for_genus(std::int64_t g, std::int64_t p);

}  // namespace qforge::spinal
