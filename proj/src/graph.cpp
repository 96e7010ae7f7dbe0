#include "qforge/graph.hpp"

#include <algorithm>
#include <queue>

#include "json.hpp"

namespace qforge {

namespace {

constexpr const char* kGraphFormat = "qforge-graph/1";

bool connected_without(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
  if (n == 0) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k == skip) continue;
    adj[edges[k].first].push_back(edges[k].second);
    adj[edges[k].second].push_back(edges[k].first);
  }
  std::vector<bool> seen(n, false);
  std::queue<Vertex> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [a, b] : edges_) {
    if (a == b) throw std::invalid_argument("graph: loop at vertex " + std::to_string(a));
    if (a >= vertex_count_ || b >= vertex_count_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge");
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (auto [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

Graph complete_graph(std::size_t p) {
  if (p < 1) throw std::invalid_argument("complete_graph: p must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(p * (p - 1) / 2);
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = i + 1; j < p; ++j) edges.emplace_back(i, j);
  return Graph(p, std::move(edges));
}

Graph octahedral_graph(std::size_t p) {
  if (p < 2) throw std::invalid_argument("octahedral_graph: p must be >= 2");
  const std::size_t n = 2 * p;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!(i % 2 == 0 && j == i + 1)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  return connected_without(g.vertex_count(), g.edges(), g.edges().size());
}

std::int64_t betti(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("betti: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("betti: graph is not connected");
  return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

Graph delete_edges_connected(const Graph& g, std::size_t m) {
  const auto beta = betti(g);
  if (static_cast<std::int64_t>(m) > beta)
    throw std::invalid_argument("delete_edges_connected: cannot remove " + std::to_string(m) +
                                " edges from a graph with Betti number " + std::to_string(beta));
  std::vector<Edge> edges = g.edges();
  std::size_t removed = 0;
  while (removed < m) {
    std::size_t removed_this_pass = 0;
    for (std::size_t k = 0; k < edges.size() && removed < m;) {
      if (connected_without(g.vertex_count(), edges, k)) {
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(k));
        ++removed;
        ++removed_this_pass;
      } else {
        ++k;
      }
    }
    if (removed_this_pass == 0)
      throw std::logic_error("delete_edges_connected: no removable edge left");
  }
  return Graph(g.vertex_count(), std::move(edges));
}

Graph interlace(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(4 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    for (Vertex a : {2 * u, 2 * u + 1})
      for (Vertex b : {2 * v, 2 * v + 1}) edges.emplace_back(a, b);
  }
  return Graph(2 * g.vertex_count(), std::move(edges));
}

std::string save_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["format"] = kGraphFormat;
  doc["vertex_count"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph load_graph(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("graph document: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != kGraphFormat)
      throw FormatError("graph document: missing or unknown format tag");
    const auto n = doc.at("vertex_count").get<std::int64_t>();
    if (n < 0) throw FormatError("graph document: negative vertex_count");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("graph document: edge must be a pair");
      const auto a = e[0].get<std::int64_t>();
      const auto b = e[1].get<std::int64_t>();
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw FormatError("graph document: edge endpoint out of range");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("graph document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("graph document: ") + e.what());
  }
}

}  // namespace qforge
