#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qforge/errors.hpp"

namespace qforge {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..vertex_count-1. Edges are stored
// as (i, j) with i < j, sorted lexicographically and free of duplicates.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  // Normalizes each pair to (min, max) and sorts. Throws std::invalid_argument
  // on loops, duplicates or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;

  // Ascending neighbor lists.
  std::vector<std::vector<Vertex>> adjacency() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

Graph complete_graph(std::size_t p);

// K_{p(2)}: K_{2p} with the matching {2k, 2k+1} removed.
Graph octahedral_graph(std::size_t p);

// Zero vertices counts as connected.
bool is_connected(const Graph& g);

// |E| - |V| + 1. Throws std::invalid_argument for empty or disconnected input.
std::int64_t betti(const Graph& g);

// Removes exactly m edges while keeping the graph connected. Edges are
// scanned in lexicographic order and an edge is removed unless it is
// currently a bridge. Throws std::invalid_argument if m > betti(g).
Graph delete_edges_connected(const Graph& g, std::size_t m);

// 2-fold interlacement: vertex v becomes 2v and 2v+1, and every edge uv
// becomes the four edges joining {2u, 2u+1} to {2v, 2v+1}.
Graph interlace(const Graph& g);

// {"format":"qforge-graph/1","vertex_count":N,"edges":[[i,j],...]}
std::string save_graph(const Graph& g);
Graph load_graph(std::string_view document);

}  // namespace qforge
