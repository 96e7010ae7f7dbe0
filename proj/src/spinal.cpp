#include "qforge/spinal.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>

#include "qforge/formulas.hpp"

namespace qforge::spinal {

namespace {

constexpr Vertex prime(Vertex w) { return 2 * w; }
constexpr Vertex second(Vertex w) { return 2 * w + 1; }
constexpr Vertex owner(Vertex x) { return x / 2; }

// Inserts `values` right after `anchor`, which must currently be followed by
// `expected_next`.
void insert_after(std::vector<Vertex>& rot, Vertex anchor, Vertex expected_next,
                  std::initializer_list<Vertex> values) {
  const auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end()) throw std::logic_error("surgery: anchor missing from rotation");
  const auto at = static_cast<std::size_t>(it - rot.begin());
  if (rot[(at + 1) % rot.size()] != expected_next)
    throw std::logic_error("surgery: face corner does not match the rotation");
  rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(at + 1), values);
}

// Rotates a witness face of w so that q[0], q[2] are w's copies, with w'
// first when both diagonals qualify.
Quad orient(const Quad& q, Vertex w) {
  for (std::size_t i = 0; i < 4; ++i)
    if (q[i] == prime(w) && q[(i + 2) % 4] == second(w))
      return {q[i], q[(i + 1) % 4], q[(i + 2) % 4], q[(i + 3) % 4]};
  for (std::size_t i = 0; i < 4; ++i)
    if (q[i] == second(w) && q[(i + 2) % 4] == prime(w))
      return {q[i], q[(i + 1) % 4], q[(i + 2) % 4], q[(i + 3) % 4]};
  throw std::invalid_argument("surgery: face does not witness vertex " + std::to_string(w));
}

}  // namespace

BuildState BuildState::init_base(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("init_base: endpoints must differ");
  BuildState s;
  s.grow(std::max(u, v));
  s.in_spine_[u] = s.in_spine_[v] = true;
  s.spine_edges_.emplace_back(std::min(u, v), std::max(u, v));
  s.rotations_[prime(u)] = {prime(v), second(v)};
  s.rotations_[second(u)] = {prime(v), second(v)};
  s.rotations_[prime(v)] = {prime(u), second(u)};
  s.rotations_[second(v)] = {prime(u), second(u)};
  s.faces_ = {Quad{prime(u), prime(v), second(u), second(v)},
              Quad{prime(u), second(v), second(u), prime(v)}};
  s.check_face(s.faces_[0]);
  s.check_face(s.faces_[1]);
  return s;
}

void BuildState::grow(Vertex w) {
  if (w >= in_spine_.size()) {
    in_spine_.resize(w + 1, false);
    rotations_.resize(2 * (w + 1));
  }
}

void BuildState::require_spine(Vertex w, const char* what) const {
  if (!in_spine(w))
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(w) +
                                " is not in the spine");
}

std::size_t BuildState::spine_vertex_count() const {
  return static_cast<std::size_t>(std::count(in_spine_.begin(), in_spine_.end(), true));
}

std::int64_t BuildState::spine_betti() const {
  return static_cast<std::int64_t>(spine_edges_.size()) -
         static_cast<std::int64_t>(spine_vertex_count()) + 1;
}

std::vector<Vertex> BuildState::witnessed_by(const Quad& q) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Vertex a = std::min(q[i], q[i + 2]);
    const Vertex b = std::max(q[i], q[i + 2]);
    if (a % 2 == 0 && b == a + 1) out.push_back(owner(a));
  }
  return out;
}

std::vector<std::size_t> BuildState::witnesses(Vertex w) const {
  std::vector<std::size_t> ids;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto owners = witnessed_by(faces_[f]);
    if (std::find(owners.begin(), owners.end(), w) != owners.end()) ids.push_back(f);
  }
  return ids;
}

std::vector<std::size_t> BuildState::witness_counts() const {
  std::vector<std::size_t> counts(in_spine_.size(), 0);
  for (const auto& q : faces_)
    for (Vertex w : witnessed_by(q)) ++counts[w];
  return counts;
}

std::vector<std::size_t> BuildState::tree_candidates(Vertex u) const {
  const auto counts = witness_counts();
  std::vector<std::size_t> out;
  for (std::size_t f : witnesses(u)) {
    bool strands = false;
    for (Vertex w : witnessed_by(faces_[f]))
      if (w != u && counts[w] == 1) strands = true;
    if (!strands) out.push_back(f);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BuildState::chord_candidates(Vertex u,
                                                                             Vertex v) const {
  const auto counts = witness_counts();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto of_u = witnesses(u);
  const auto of_v = witnesses(v);
  for (std::size_t a : of_u) {
    for (std::size_t b : of_v) {
      if (a == b) continue;
      auto remaining = counts;
      for (Vertex w : witnessed_by(faces_[a])) --remaining[w];
      for (Vertex w : witnessed_by(faces_[b])) --remaining[w];
      bool strands = false;
      for (Vertex w = 0; w < remaining.size(); ++w)
        if (in_spine_[w] && w != u && w != v && remaining[w] == 0) strands = true;
      if (!strands) out.emplace_back(a, b);
    }
  }
  return out;
}

BuildState BuildState::tree_add(Vertex u, Vertex v) const {
  require_spine(u, "tree_add");
  if (in_spine(v)) throw std::invalid_argument("tree_add: vertex " + std::to_string(v) +
                                               " is already in the spine");
  const auto candidates = tree_candidates(u);
  if (candidates.empty())
    throw SurgeryConflict("tree_add: no usable witness face for vertex " + std::to_string(u));
  return tree_add(u, v, candidates.front());
}

BuildState BuildState::tree_add(Vertex u, Vertex v, std::size_t face) const {
  require_spine(u, "tree_add");
  if (in_spine(v)) throw std::invalid_argument("tree_add: vertex " + std::to_string(v) +
                                               " is already in the spine");
  if (face >= faces_.size()) throw std::out_of_range("tree_add: no such face");

  const auto [s, x, t, y] = orient(faces_[face], u);
  BuildState next = *this;
  next.grow(v);
  const Vertex v1 = prime(v);
  const Vertex v2 = second(v);
  next.in_spine_[v] = true;
  next.spine_edges_.emplace_back(std::min(u, v), std::max(u, v));

  // Around s: y -> v'' -> v' -> x.  Around t: x -> v' -> v'' -> y.
  insert_after(next.rotations_[s], y, x, {v2, v1});
  insert_after(next.rotations_[t], x, y, {v1, v2});
  next.rotations_[v1] = {s, t};
  next.rotations_[v2] = {s, t};

  const Quad outer_x{s, x, t, v1};
  const Quad middle{s, v1, t, v2};
  const Quad outer_y{s, v2, t, y};
  next.faces_[face] = outer_x;
  next.faces_.push_back(middle);
  next.faces_.push_back(outer_y);
  for (const auto& q : {outer_x, middle, outer_y}) next.check_face(q);
  return next;
}

BuildState BuildState::chord_add(Vertex u, Vertex v) const {
  require_spine(u, "chord_add");
  require_spine(v, "chord_add");
  if (u == v) throw std::invalid_argument("chord_add: endpoints must differ");
  const Edge e{std::min(u, v), std::max(u, v)};
  if (std::find(spine_edges_.begin(), spine_edges_.end(), e) != spine_edges_.end())
    throw std::invalid_argument("chord_add: edge already present in the spine");
  const auto candidates = chord_candidates(u, v);
  if (candidates.empty())
    throw SurgeryConflict("chord_add: no usable pair of witness faces for " + std::to_string(u) +
                          "-" + std::to_string(v));
  return chord_add(u, v, candidates.front().first, candidates.front().second);
}

BuildState BuildState::chord_add(Vertex u, Vertex v, std::size_t face_u,
                                 std::size_t face_v) const {
  require_spine(u, "chord_add");
  require_spine(v, "chord_add");
  if (u == v) throw std::invalid_argument("chord_add: endpoints must differ");
  const Edge e{std::min(u, v), std::max(u, v)};
  if (std::find(spine_edges_.begin(), spine_edges_.end(), e) != spine_edges_.end())
    throw std::invalid_argument("chord_add: edge already present in the spine");
  if (face_u >= faces_.size() || face_v >= faces_.size())
    throw std::out_of_range("chord_add: no such face");
  if (face_u == face_v) throw std::invalid_argument("chord_add: witness faces must differ");

  const auto [s, a, t, b] = orient(faces_[face_u], u);
  const auto [p, c, q, d] = orient(faces_[face_v], v);
  BuildState next = *this;
  next.spine_edges_.push_back(e);

  // The handle: s: b -> q -> p -> a,  t: a -> p -> q -> b,
  //             p: d -> t -> s -> c,  q: c -> s -> t -> d.
  insert_after(next.rotations_[s], b, a, {q, p});
  insert_after(next.rotations_[t], a, b, {p, q});
  insert_after(next.rotations_[p], d, c, {t, s});
  insert_after(next.rotations_[q], c, d, {s, t});

  const Quad at_a{s, a, t, p};
  const Quad at_d{q, d, p, t};
  const Quad at_b{t, b, s, q};
  const Quad at_c{p, c, q, s};
  next.faces_[face_u] = at_a;
  next.faces_[face_v] = at_d;
  next.faces_.push_back(at_b);
  next.faces_.push_back(at_c);
  for (const auto& quad : {at_a, at_d, at_b, at_c}) next.check_face(quad);
  return next;
}

// Traces the face through the dart q[0] -> q[1] and requires it to be q.
void BuildState::check_face(const Quad& q) const {
  Vertex from = q[0];
  Vertex to = q[1];
  for (std::size_t step = 1; step <= 4; ++step) {
    const auto& rot = rotations_[to];
    const auto it = std::find(rot.begin(), rot.end(), from);
    if (it == rot.end()) throw std::logic_error("surgery: face uses a missing edge");
    const Vertex after = rot[(static_cast<std::size_t>(it - rot.begin()) + 1) % rot.size()];
    from = to;
    to = after;
    if (from != q[step % 4] || to != q[(step + 1) % 4])
      throw std::logic_error("surgery: traced face differs from the intended quad");
  }
}

Graph BuildState::spine() const {
  std::vector<Vertex> rank(in_spine_.size(), 0);
  Vertex next = 0;
  for (Vertex w = 0; w < in_spine_.size(); ++w)
    if (in_spine_[w]) rank[w] = next++;
  std::vector<Edge> edges;
  for (auto [a, b] : spine_edges_) edges.emplace_back(rank[a], rank[b]);
  return Graph(next, std::move(edges));
}

RotationSystem BuildState::embedding() const {
  std::vector<Vertex> rank(rotations_.size(), 0);
  Vertex next = 0;
  for (Vertex x = 0; x < rotations_.size(); ++x)
    if (in_spine(owner(x))) rank[x] = next++;
  std::vector<std::vector<Vertex>> rotations;
  rotations.reserve(next);
  for (Vertex x = 0; x < rotations_.size(); ++x) {
    if (!in_spine(owner(x))) continue;
    std::vector<Vertex> rot;
    rot.reserve(rotations_[x].size());
    for (Vertex y : rotations_[x]) rot.push_back(rank[y]);
    rotations.push_back(std::move(rot));
  }
  return RotationSystem(std::move(rotations));
}

namespace {

struct Step {
  bool chord = false;
  Vertex u = 0;
  Vertex v = 0;
};

constexpr std::uint64_t kStepCap = 5'000'000;

class Driver {
 public:
  Driver(std::vector<Step> steps, std::size_t first_chord)
      : steps_(std::move(steps)), first_chord_(first_chord) {}

  std::optional<BuildState> run(const BuildState& base, bool reorder_chords) {
    reorder_ = reorder_chords;
    return descend(base, 0);
  }

  BuildStats stats;

 private:
  std::optional<BuildState> descend(const BuildState& s, std::size_t at) {
    if (at == steps_.size()) return s;
    if (stats.steps >= kStepCap) return std::nullopt;
    if (reorder_ && at >= first_chord_) {
      for (std::size_t k = at; k < steps_.size(); ++k) {
        std::swap(steps_[at], steps_[k]);
        if (auto done = try_step(s, at)) return done;
        std::swap(steps_[at], steps_[k]);
      }
      return std::nullopt;
    }
    return try_step(s, at);
  }

  std::optional<BuildState> try_step(const BuildState& s, std::size_t at) {
    const Step step = steps_[at];
    if (!step.chord) {
      for (std::size_t f : s.tree_candidates(step.u)) {
        ++stats.steps;
        if (auto done = descend(s.tree_add(step.u, step.v, f), at + 1)) return done;
        ++stats.backtracks;
      }
    } else {
      for (auto [a, b] : s.chord_candidates(step.u, step.v)) {
        ++stats.steps;
        if (auto done = descend(s.chord_add(step.u, step.v, a, b), at + 1)) return done;
        ++stats.backtracks;
      }
    }
    return std::nullopt;
  }

  std::vector<Step> steps_;
  std::size_t first_chord_;
  bool reorder_ = false;
};

}  // namespace

SpinalBuild build_spinal_with_stats(const Graph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("build_spinal: spine needs at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("build_spinal: spine is not connected");

  const auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Step> steps;
  std::vector<Edge> tree_edges;
  std::queue<Vertex> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const Vertex x = todo.front();
    todo.pop();
    for (Vertex y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      todo.push(y);
      steps.push_back({false, x, y});
      tree_edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(tree_edges.begin(), tree_edges.end());
  const std::size_t first_chord = steps.size();
  for (const auto& e : g.edges())
    if (!std::binary_search(tree_edges.begin(), tree_edges.end(), e))
      steps.push_back({true, e.first, e.second});

  const BuildState base = BuildState::init_base(steps.front().u, steps.front().v);
  steps.erase(steps.begin());

  Driver driver(steps, first_chord - 1);
  auto result = driver.run(base, false);
  if (!result) {
    driver.stats.reordered_chords = true;
    result = driver.run(base, true);
  }
  if (!result) throw std::logic_error("build_spinal: witness search exhausted");

  RotationSystem embedding = result->embedding();
  if (!(embedding.graph() == interlace(g)))
    throw std::logic_error("build_spinal: embedded graph differs from the interlacement");
  const auto report = validate_quadrangulation(embedding);
  if (!report.is_quadrangulation || report.genus != betti(g) ||
      report.alpha2 != 2 * static_cast<std::int64_t>(g.edge_count()))
    throw std::logic_error("build_spinal: output failed verification");
  return {std::move(embedding), driver.stats};
}

RotationSystem build_spinal(const Graph& g) { return build_spinal_with_stats(g).embedding; }

SpinalInstance build_instance(std::int64_t p, std::int64_t m) {
  if (p < 2) throw std::invalid_argument("build_instance: p must be >= 2");
  const std::int64_t beta = formulas::betti_complete(p);
  if (m < 0 || m > beta)
    throw std::invalid_argument("build_instance: m must lie in 0.." + std::to_string(beta));
  Graph spine = delete_edges_connected(complete_graph(static_cast<std::size_t>(p)),
                                       static_cast<std::size_t>(m));
  RotationSystem embedding = build_spinal(spine);
  return {p, m, beta - m, formulas::deleted_edges_minimal(p, m), std::move(spine), std::move(embedding)};
}

SpinalInstance build_for_genus(std::int64_t g, std::int64_t p) {
  if (g < 0) throw std::invalid_argument("build_for_genus: genus must be >= 0");
  if (p < 2) throw std::invalid_argument("build_for_genus: p must be >= 2");
  const std::int64_t beta = formulas::betti_complete(p);
  if (g > beta)
    throw std::invalid_argument("build_for_genus: genus " + std::to_string(g) +
                                " exceeds beta(K_" + std::to_string(p) + ") = " +
                                std::to_string(beta));
  return build_instance(p, beta - g);
}

}  // namespace qforge::spinal
