#include "qforge/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qforge/formulas.hpp"

namespace qforge::oracle {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxOrder = 32;
constexpr int kUnset = -1;

enum class Outcome { Found, Exhausted, OutOfBudget };

struct Meter {
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;
  bool exhausted = false;

  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > max_nodes) exhausted = true;
    if ((nodes & 0x3fff) == 0 && Clock::now() > deadline) exhausted = true;
    return !exhausted;
  }
};

// Rotations are grown one "next neighbor" at a time. Setting next[y][x] = w
// fixes the face-tracing successor of dart (x, y) to (y, w), so partial faces
// are chains of darts. A chain is abandoned as soon as it cannot close into
// a walk of exactly four darts through four distinct vertices.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, Meter& meter) : n_(g.vertex_count()), meter_(meter) {
    if (n_ > kMaxOrder) throw std::invalid_argument("oracle: graphs above 32 vertices are not supported");
    adj_ = g.adjacency();
    for (auto& row : next_) row.fill(kUnset);
    for (auto& row : prev_) row.fill(kUnset);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : adj_[v]) darts_.push_back({v, w});
    }
  }

  // Presets the rotation at v to ascending neighbor order.
  bool fix_rotation(Vertex v) {
    const auto& nb = adj_[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex x = nb[i];
      const Vertex w = nb[(i + 1) % nb.size()];
      if (!admissible(x, v, w)) return false;
      assign(x, v, w);
    }
    return true;
  }

  Outcome run() {
    for (const auto& row : adj_)
      if (row.size() < 2) return Outcome::Exhausted;
    if (darts_.size() % 4 != 0) return Outcome::Exhausted;
    return descend();
  }

  RotationSystem witness() const {
    std::vector<std::vector<Vertex>> rotations(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Vertex cur = adj_[v].front();
      do {
        rotations[v].push_back(cur);
        cur = static_cast<Vertex>(next_[v][cur]);
      } while (cur != adj_[v].front());
    }
    return RotationSystem(std::move(rotations));
  }

 private:
  struct Chain {
    std::array<Vertex, 5> tails{};
    std::size_t length = 0;
    Vertex head = 0;  // head of the last dart
    Dart first{};
  };

  // Walks back from the open dart (x, y) to the start of its chain.
  Chain chain_ending_at(Vertex x, Vertex y) const {
    std::array<Dart, 5> rev{};
    std::size_t len = 0;
    Dart d{x, y};
    rev[len++] = d;
    while (prev_[d.tail][d.head] != kUnset && len < 5) {
      d = Dart{static_cast<Vertex>(prev_[d.tail][d.head]), d.tail};
      rev[len++] = d;
    }
    Chain c;
    c.length = len;
    for (std::size_t i = 0; i < len; ++i) c.tails[i] = rev[len - 1 - i].tail;
    c.first = rev[len - 1];
    c.head = y;
    return c;
  }

  // Walks forward from the dart (y, w), which has no predecessor.
  Chain chain_starting_at(Vertex y, Vertex w) const {
    Chain c;
    c.first = {y, w};
    Dart d{y, w};
    while (true) {
      c.tails[c.length++] = d.tail;
      const int after = next_[d.head][d.tail];
      if (after == kUnset || c.length == 5) break;
      d = Dart{d.head, static_cast<Vertex>(after)};
    }
    c.head = d.head;
    return c;
  }

  // Can next[y][x] = w be set without breaking the rotation at y?
  bool admissible(Vertex x, Vertex y, Vertex w) const {
    if (w == x || next_[y][x] != kUnset || prev_[y][w] != kUnset) return false;
    std::size_t count = 1;
    Vertex cur = w;
    while (next_[y][cur] != kUnset) {
      cur = static_cast<Vertex>(next_[y][cur]);
      ++count;
    }
    return cur != x || count == adj_[y].size();
  }

  void assign(Vertex x, Vertex y, Vertex w) {
    next_[y][x] = static_cast<int>(w);
    prev_[y][w] = static_cast<int>(x);
    ++assigned_;
  }

  void unassign(Vertex x, Vertex y) {
    const int w = next_[y][x];
    next_[y][x] = kUnset;
    prev_[y][w] = kUnset;
    --assigned_;
  }

  static bool distinct(const Chain& a, const Chain& b) {
    for (std::size_t i = 0; i < a.length; ++i)
      for (std::size_t j = 0; j < b.length; ++j)
        if (a.tails[i] == b.tails[j]) return false;
    return true;
  }

  static bool contains(const Chain& c, Vertex v) {
    return std::find(c.tails.begin(), c.tails.begin() + static_cast<std::ptrdiff_t>(c.length), v) !=
           c.tails.begin() + static_cast<std::ptrdiff_t>(c.length);
  }

  // Whether linking `left` (ending at an open dart) to `right` keeps a
  // possible 4-cycle face.
  static bool joinable(const Chain& left, const Chain& right) {
    const std::size_t total = left.length + right.length;
    if (total > 4 || !distinct(left, right)) return false;
    if (total == 4) return right.head == left.tails[0];
    return right.head != left.tails[0] && !contains(left, right.head) && !contains(right, right.head);
  }

  Outcome descend() {
    if (assigned_ == darts_.size()) return Outcome::Found;
    if (!meter_.tick()) return Outcome::OutOfBudget;

    // Most constrained open dart: the longest partial face.
    const Dart* pick = nullptr;
    Chain best;
    for (const auto& d : darts_) {
      if (next_[d.head][d.tail] != kUnset) continue;
      const Chain c = chain_ending_at(d.tail, d.head);
      if (!pick || c.length > best.length) {
        pick = &d;
        best = c;
        if (c.length == 4) break;
      }
    }
    const Vertex x = pick->tail;
    const Vertex y = pick->head;

    if (best.length == 4) {
      if (best.first.tail != y) return Outcome::Exhausted;
      const Vertex w = best.first.head;
      if (!admissible(x, y, w)) return Outcome::Exhausted;
      assign(x, y, w);
      const Outcome out = descend();
      if (out != Outcome::Found) unassign(x, y);
      return out;
    }

    for (Vertex w : adj_[y]) {
      if (!admissible(x, y, w)) continue;
      if (Dart{y, w} == best.first) continue;  // would close a face shorter than 4
      if (!joinable(best, chain_starting_at(y, w))) continue;
      assign(x, y, w);
      const Outcome out = descend();
      if (out == Outcome::Found) return out;
      unassign(x, y);
      if (out == Outcome::OutOfBudget) return out;
    }
    return Outcome::Exhausted;
  }

  std::size_t n_;
  Meter& meter_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Dart> darts_;
  std::array<std::array<int, kMaxOrder>, kMaxOrder> next_{};
  std::array<std::array<int, kMaxOrder>, kMaxOrder> prev_{};
  std::size_t assigned_ = 0;
};

Meter make_meter(const SearchBudget& budget) {
  if (budget.max_nodes == 0 || budget.time_cap.count() <= 0)
    throw std::invalid_argument("oracle: search budget must be positive");
  Meter m;
  m.max_nodes = budget.max_nodes;
  m.deadline = Clock::now() + budget.time_cap;
  return m;
}

bool matches(const RotationSystem& r, std::int64_t n, std::int64_t g) {
  if (static_cast<std::int64_t>(r.vertex_count()) != n) return false;
  const auto report = validate_quadrangulation(r);
  return report.is_quadrangulation && report.genus == g;
}

// Graph with vertex 0 of maximum degree adjacent exactly to 1..deg(0), and
// every degree at least min_degree.
bool normalized(std::size_t n, const std::vector<Edge>& edges, std::size_t min_degree) {
  std::vector<std::size_t> deg(n, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  if (*std::min_element(deg.begin(), deg.end()) < min_degree) return false;
  if (*std::max_element(deg.begin(), deg.end()) != deg[0]) return false;
  for (auto [a, b] : edges)
    if (a == 0 && b > deg[0]) return false;
  return true;
}

// Next k-combination of {0..m-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return "exists";
    case Verdict::DoesNotExist:
      return "does not exist";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::optional<std::int64_t> quad_edge_count(std::int64_t n, std::int64_t g) {
  if (g < 0) throw std::invalid_argument("quad_edge_count: genus must be >= 0");
  if (n < 3 || (g == 0 && n < 4))
    throw std::invalid_argument("quad_edge_count: order too small");
  const std::int64_t edges = 2 * (n - 2 + 2 * g);
  if (edges > n * (n - 1) / 2 || edges < n - 1) return std::nullopt;
  return edges;
}

SearchResult find_quadrangular_embedding(const Graph& g, const SearchBudget& budget) {
  SearchResult result;
  Meter meter = make_meter(budget);
  result.graphs_examined = 1;
  if (g.vertex_count() < 4 || !is_connected(g)) {
    result.verdict = Verdict::DoesNotExist;
    return result;
  }
  EmbeddingSearch search(g, meter);
  const Outcome out = search.run();
  result.nodes = meter.nodes;
  if (out == Outcome::Found) {
    result.verdict = Verdict::Exists;
    result.witness = search.witness();
  } else {
    result.verdict = out == Outcome::Exhausted ? Verdict::DoesNotExist : Verdict::Inconclusive;
  }
  return result;
}

SearchResult exists_quadrangulation(std::int64_t n, std::int64_t g, const SearchBudget& budget,
                                    const SearchOptions& options) {
  SearchResult result;
  if (options.witness && matches(*options.witness, n, g)) {
    result.verdict = Verdict::Exists;
    result.witness = options.witness;
    return result;
  }
  const auto edges = quad_edge_count(n, g);
  if (!edges) {
    result.verdict = Verdict::DoesNotExist;
    result.arithmetic = true;
    return result;
  }
  if (static_cast<std::size_t>(n) > kMaxOrder)
    throw std::invalid_argument("exists_quadrangulation: order above 32 is not supported");

  Meter meter = make_meter(budget);
  const auto order = static_cast<std::size_t>(n);
  const std::size_t min_degree = (g >= 1 && options.prune_degree_two) ? 3 : 2;

  std::vector<Edge> pairs;
  for (Vertex i = 0; i < order; ++i)
    for (Vertex j = i + 1; j < order; ++j) pairs.emplace_back(i, j);
  const std::size_t missing = pairs.size() - static_cast<std::size_t>(*edges);

  std::vector<std::size_t> removed(missing);
  for (std::size_t i = 0; i < missing; ++i) removed[i] = i;
  std::vector<Edge> kept;
  do {
    kept.clear();
    std::size_t r = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (r < missing && removed[r] == k) {
        ++r;
        continue;
      }
      kept.push_back(pairs[k]);
    }
    if (!normalized(order, kept, min_degree)) continue;
    Graph candidate(order, kept);
    if (!is_connected(candidate)) continue;

    ++result.graphs_examined;
    if (!meter.tick()) break;
    EmbeddingSearch search(candidate, meter);
    if (!search.fix_rotation(0)) continue;
    const Outcome out = search.run();
    if (out == Outcome::Found) {
      result.verdict = Verdict::Exists;
      result.witness = search.witness();
      result.nodes = meter.nodes;
      return result;
    }
    if (out == Outcome::OutOfBudget) break;
  } while (next_combination(removed, pairs.size()));

  result.nodes = meter.nodes;
  result.verdict = meter.exhausted ? Verdict::Inconclusive : Verdict::DoesNotExist;
  return result;
}

MinOrderSearch min_order_bruteforce(std::int64_t g, const SearchBudget& budget,
                                    std::optional<std::int64_t> max_order, bool allow_large_genus) {
  if (g < 0) throw std::invalid_argument("min_order_bruteforce: genus must be >= 0");
  if (g > 2 && !allow_large_genus)
    throw std::invalid_argument("min_order_bruteforce: genus above 2 needs an explicit override");
  const std::int64_t first = g == 0 ? 4 : formulas::lower_bound(g);
  const std::int64_t last = max_order.value_or(formulas::spinal_min_order(g));

  MinOrderSearch search;
  search.verdict = Verdict::DoesNotExist;
  for (std::int64_t n = first; n <= last; ++n) {
    OrderProbe probe{n, exists_quadrangulation(n, g, budget)};
    const Verdict v = probe.result.verdict;
    std::optional<RotationSystem> witness = probe.result.witness;
    search.probes.push_back(std::move(probe));
    if (v == Verdict::Exists) {
      search.verdict = Verdict::Exists;
      search.order = n;
      search.witness = std::move(witness);
      return search;
    }
    if (v == Verdict::Inconclusive) {
      search.verdict = Verdict::Inconclusive;
      search.order = n;
      return search;
    }
  }
  return search;
}

}  // namespace qforge::oracle
