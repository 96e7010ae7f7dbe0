#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qforge/embedding.hpp"
#include "qforge/graph.hpp"

// Brute-force decision procedure for "is there a quadrangulation of the
// genus-g surface with n vertices". Independent of the formulas and of the
// spinal builder; used to confirm small-genus minima.
namespace qforge::oracle {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds time_cap = std::chrono::minutes(15);
};

enum class Verdict { Exists, DoesNotExist, Inconclusive };

std::string to_string(Verdict v);

struct SearchOptions {
  // Skip graphs with a degree-2 vertex when g >= 1. A minimal quadrangulation
  // of a surface other than the sphere never has one.
  bool prune_degree_two = true;
  // Accepted immediately if it is a quadrangulation of the requested order
  // and genus.
  std::optional<RotationSystem> witness;
};

struct SearchResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<RotationSystem> witness;
  std::uint64_t nodes = 0;
  std::uint64_t graphs_examined = 0;
  bool arithmetic = false;  // decided by the edge-count test alone
};

// Edge count 2(n - 2 + 2g) forced on any n-vertex quadrangulation of the
// genus-g surface, or nullopt when no simple connected graph can have it.
std::optional<std::int64_t> quad_edge_count(std::int64_t n, std::int64_t g);

// Searches the rotation systems of one graph for an embedding whose faces
// are all 4-cycles. The genus follows from the edge count.
SearchResult find_quadrangular_embedding(const Graph& g, const SearchBudget& budget = {});

// Enumerates n-vertex graphs as complements of C(n,2) - alpha1 edges,
// normalized so that vertex 0 has maximum degree and neighbors 1..deg(0),
// and runs find_quadrangular_embedding on each, with the rotation at
// vertex 0 fixed to ascending order.
SearchResult exists_quadrangulation(std::int64_t n, std::int64_t g,
                                    const SearchBudget& budget = {},
                                    const SearchOptions& options = {});

struct OrderProbe {
  std::int64_t order = 0;
  SearchResult result;
};

struct MinOrderSearch {
  Verdict verdict = Verdict::Inconclusive;  // Exists once an order is found
  std::int64_t order = 0;
  std::optional<RotationSystem> witness;
  std::vector<OrderProbe> probes;
};

// Smallest n with a quadrangulation of genus g, scanning upward from the
// Euler lower bound (4 at g = 0) to max_order (default: the spinal minimum).
// Genera above 2 require allow_large_genus.
MinOrderSearch min_order_bruteforce(std::int64_t g, const SearchBudget& budget = {},
                                    std::optional<std::int64_t> max_order = std::nullopt,
                                    bool allow_large_genus = false);

}  // namespace qforge::oracle
