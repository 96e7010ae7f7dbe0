#include "qforge/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qforge {

namespace {

constexpr const char* kEmbeddingFormat = "qforge-embedding/1";

Graph graph_from_rotations(const std::vector<std::vector<Vertex>>& rotations) {
  const std::size_t n = rotations.size();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                  " repeats a neighbor");
    for (Vertex w : sorted) {
      if (w >= n)
        throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                    " names unknown vertex " + std::to_string(w));
      if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
      const auto& back = rotations[w];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw std::invalid_argument("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                    " missing from the rotation at " + std::to_string(w));
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> rotations)
    : graph_(graph_from_rotations(rotations)), rotations_(std::move(rotations)) {
  if (!is_connected(graph_)) throw std::invalid_argument("rotation system: graph is not connected");
  index();
}

RotationSystem::RotationSystem(const Graph& graph, std::vector<std::vector<Vertex>> rotations)
    : RotationSystem(std::move(rotations)) {
  if (!(graph_ == graph))
    throw std::invalid_argument("rotation system: rotations do not match the given graph");
}

void RotationSystem::index() {
  const std::size_t n = rotations_.size();
  offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + rotations_[v].size();
  twin_position_.assign(offset_[n], 0);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
      const auto& back = rotations_[rotations_[v][i]];
      twin_position_[offset_[v] + i] =
          static_cast<std::size_t>(std::find(back.begin(), back.end(), v) - back.begin());
    }
  }
}

Dart RotationSystem::successor(Dart d) const {
  const auto& rot = rotations_.at(d.tail);
  const auto it = std::find(rot.begin(), rot.end(), d.head);
  if (it == rot.end()) throw std::invalid_argument("successor: not a dart of this embedding");
  const std::size_t j = twin_position_[offset_[d.tail] + static_cast<std::size_t>(it - rot.begin())];
  const auto& at_head = rotations_[d.head];
  return {d.head, at_head[(j + 1) % at_head.size()]};
}

std::vector<std::vector<Vertex>> RotationSystem::canonical_rotations() const {
  auto out = rotations_;
  for (auto& rot : out) {
    if (rot.empty()) continue;
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  return out;
}

std::vector<FaceWalk> trace_faces(const RotationSystem& r) {
  const std::size_t n = r.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + r.rotation(v).size();

  auto position = [&](Vertex v, Vertex w) {
    const auto& rot = r.rotation(v);
    return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
  };

  std::vector<bool> visited(offset[n], false);
  std::vector<FaceWalk> faces;
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> heads = r.rotation(u);
    std::sort(heads.begin(), heads.end());
    for (Vertex v : heads) {
      if (visited[offset[u] + position(u, v)]) continue;
      FaceWalk face;
      Dart d{u, v};
      while (true) {
        const std::size_t id = offset[d.tail] + position(d.tail, d.head);
        if (visited[id]) break;
        visited[id] = true;
        face.darts.push_back(d);
        const auto& at_head = r.rotation(d.head);
        const std::size_t j = position(d.head, d.tail);
        d = Dart{d.head, at_head[(j + 1) % at_head.size()]};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

EulerGenus euler_genus(const RotationSystem& r) {
  const auto faces = static_cast<std::int64_t>(trace_faces(r).size());
  const auto chi = static_cast<std::int64_t>(r.vertex_count()) -
                   static_cast<std::int64_t>(r.edge_count()) + faces;
  return {chi, (2 - chi) / 2};
}

std::string describe(const FaceWalk& face) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < face.darts.size(); ++i) {
    if (i) out << " ";
    out << face.darts[i].tail;
  }
  out << ")";
  return out.str();
}

EmbeddingReport validate_quadrangulation(const RotationSystem& r) {
  EmbeddingReport report;
  const auto faces = trace_faces(r);
  report.alpha0 = static_cast<std::int64_t>(r.vertex_count());
  report.alpha1 = static_cast<std::int64_t>(r.edge_count());
  report.alpha2 = static_cast<std::int64_t>(faces.size());
  report.euler_characteristic = report.alpha0 - report.alpha1 + report.alpha2;
  report.genus = (2 - report.euler_characteristic) / 2;

  if (!is_connected(r.graph())) report.failures.push_back("graph is not connected");
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.length() != 4) {
      report.failures.push_back("face " + std::to_string(f) + " " + describe(face) +
                                " has length " + std::to_string(face.length()));
      continue;
    }
    std::set<Vertex> vertices;
    std::set<Edge> edges;
    for (const auto& d : face.darts) {
      vertices.insert(d.tail);
      edges.insert({std::min(d.tail, d.head), std::max(d.tail, d.head)});
    }
    if (vertices.size() != 4 || edges.size() != 4)
      report.failures.push_back("face " + std::to_string(f) + " " + describe(face) +
                                " is not a 4-cycle");
  }
  report.is_quadrangulation = report.failures.empty();
  return report;
}

std::string save_embedding(const RotationSystem& r, std::optional<std::int64_t> declared_genus) {
  nlohmann::ordered_json doc;
  doc["format"] = kEmbeddingFormat;
  doc["vertex_count"] = r.vertex_count();
  doc["rotations"] = r.canonical_rotations();
  if (declared_genus) doc["declared_genus"] = *declared_genus;
  return doc.dump() + "\n";
}

EmbeddingDocument parse_embedding(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("embedding document: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("format", "") != kEmbeddingFormat)
      throw FormatError("embedding document: missing or unknown format tag");
    const auto n = doc.at("vertex_count").get<std::int64_t>();
    const auto& rows = doc.at("rotations");
    if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != n)
      throw FormatError("embedding document: expected " + std::to_string(n) + " rotations");
    std::vector<std::vector<Vertex>> rotations;
    rotations.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<Vertex> rot;
      for (const auto& w : row) {
        const auto id = w.get<std::int64_t>();
        if (id < 0 || id >= n) throw FormatError("embedding document: vertex id out of range");
        rot.push_back(static_cast<Vertex>(id));
      }
      rotations.push_back(std::move(rot));
    }
    std::optional<std::int64_t> declared;
    if (doc.contains("declared_genus") && !doc["declared_genus"].is_null())
      declared = doc["declared_genus"].get<std::int64_t>();
    return {RotationSystem(std::move(rotations)), declared};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("embedding document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("embedding document: ") + e.what());
  }
}

RotationSystem load_embedding(std::string_view document) {
  auto parsed = parse_embedding(document);
  if (parsed.declared_genus) {
    const auto actual = euler_genus(parsed.embedding).genus;
    if (actual != *parsed.declared_genus)
      throw GenusMismatch("embedding declares genus " + std::to_string(*parsed.declared_genus) +
                          " but traces to genus " + std::to_string(actual));
  }
  return std::move(parsed.embedding);
}

}  // namespace qforge
