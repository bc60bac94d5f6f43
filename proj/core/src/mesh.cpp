// Copyright 2026 The cmpk Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmpk/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "cmpk/errors.hpp"
#include "vec3.hpp"

namespace cmpk {

using namespace detail;

namespace {

TriMesh::Edge ordered(std::uint32_t a, std::uint32_t b) {
  return a < b ? TriMesh::Edge{a, b} : TriMesh::Edge{b, a};
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec> vertices, std::vector<Tri> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  const auto n = static_cast<std::uint32_t>(vertices_.size());
  Vec lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity()};
  Vec hi{-lo[0], -lo[1], -lo[2]};
  for (const auto& v : vertices_) {
    for (int i = 0; i < 3; ++i) {
      if (!std::isfinite(v[i])) throw MeshError("non-finite vertex coordinate");
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  const double bbox2 = vertices_.empty() ? 0 : detail::dot(hi - lo, hi - lo);

  std::map<Edge, int> incidence;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (auto idx : tri) {
      if (idx >= n) {
        throw MeshError("triangle " + std::to_string(t) + " references vertex " +
                        std::to_string(idx) + " of " + std::to_string(n));
      }
    }
    const Vec3 e1 = vertices_[tri[1]] - vertices_[tri[0]];
    const Vec3 e2 = vertices_[tri[2]] - vertices_[tri[0]];
    const double area = 0.5 * detail::norm(detail::cross(e1, e2));
    if (!(area > 1e-12 * bbox2)) {
      throw MeshError("degenerate triangle " + std::to_string(t));
    }
    for (int i = 0; i < 3; ++i) ++incidence[ordered(tri[i], tri[(i + 1) % 3])];
  }

  std::string offending;
  for (const auto& [edge, count] : incidence) {
    edges_.push_back(edge);
    if (count > 2) {
      offending += " (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ")";
    }
  }
  if (!offending.empty()) throw MeshError("non-manifold edges:" + offending);
}

std::size_t TriMesh::edge_index(std::uint32_t a, std::uint32_t b) const {
  const Edge e = ordered(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) throw MeshError("no such edge");
  return static_cast<std::size_t>(it - edges_.begin());
}

TriMesh parse_obj(std::istream& in) {
  std::vector<TriMesh::Vec> vertices;
  std::vector<TriMesh::Tri> triangles;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      TriMesh::Vec v{};
      if (!(ls >> v[0] >> v[1] >> v[2])) throw ParseError("malformed vertex record", line_no);
      vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<std::uint32_t> idx;
      std::string tok;
      while (ls >> tok) {
        const std::string head = tok.substr(0, tok.find('/'));
        long long i = 0;
        try {
          std::size_t used = 0;
          i = std::stoll(head, &used);
          if (used != head.size()) throw std::invalid_argument(head);
        } catch (const std::exception&) {
          throw ParseError("malformed face index '" + tok + "'", line_no);
        }
        const auto count = static_cast<long long>(vertices.size());
        const long long zero_based = i > 0 ? i - 1 : count + i;
        if (i == 0 || zero_based < 0 || zero_based >= count) {
          throw ParseError("face index " + std::to_string(i) + " out of range", line_no);
        }
        idx.push_back(static_cast<std::uint32_t>(zero_based));
      }
      if (idx.size() != 3) throw ParseError("non-triangular face", line_no);
      triangles.push_back({idx[0], idx[1], idx[2]});
    }
  }
  return TriMesh(std::move(vertices), std::move(triangles));
}

TriMesh load_obj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_obj(in);
}

void write_obj(std::ostream& out, const TriMesh& mesh) {
  const auto old = out.precision(17);
  for (const auto& v : mesh.vertices()) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& t : mesh.triangles()) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
  out.precision(old);
}

TriMesh make_icosphere(int level) {
  if (level < 0) throw MeshError("icosphere level must be >= 0");
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<TriMesh::Vec> v = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                                 {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                                 {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p = detail::normalized(p);
  std::vector<TriMesh::Tri> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                 {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                 {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                 {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int l = 0; l < level; ++l) {
    std::map<TriMesh::Edge, std::uint32_t> mid;
    auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = ordered(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      v.push_back(detail::normalized(0.5 * (v[a] + v[b])));
      const auto id = static_cast<std::uint32_t>(v.size() - 1);
      mid.emplace(key, id);
      return id;
    };
    std::vector<TriMesh::Tri> next;
    next.reserve(f.size() * 4);
    for (const auto& t : f) {
      const auto a = midpoint(t[0], t[1]);
      const auto b = midpoint(t[1], t[2]);
      const auto c = midpoint(t[2], t[0]);
      next.push_back({t[0], a, c});
      next.push_back({t[1], b, a});
      next.push_back({t[2], c, b});
      next.push_back({a, b, c});
    }
    f = std::move(next);
  }
  return TriMesh(std::move(v), std::move(f));
}

TriMesh make_octahedron() {
  std::vector<TriMesh::Vec> v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<TriMesh::Tri> f = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return TriMesh(std::move(v), std::move(f));
}

TriMesh make_square_grid(int n) {
  if (n < 1) throw MeshError("grid needs n >= 1");
  std::vector<TriMesh::Vec> v;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) v.push_back({double(i) / n, double(j) / n, 0});
  }
  auto id = [n](int i, int j) { return static_cast<std::uint32_t>(j * (n + 1) + i); };
  std::vector<TriMesh::Tri> f;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      f.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      f.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return TriMesh(std::move(v), std::move(f));
}

GeodesicGraph::GeodesicGraph(const TriMesh& mesh, int steiner) : steiner_(steiner) {
  if (steiner < 0) throw MeshError("steiner count must be >= 0");
  const auto nv = static_cast<std::uint32_t>(mesh.vertices().size());
  const auto s = static_cast<std::uint32_t>(steiner);
  positions_ = mesh.vertices();
  for (const auto& [a, b] : mesh.edges()) {
    const Vec3 pa = mesh.vertices()[a];
    const Vec3 pb = mesh.vertices()[b];
    for (std::uint32_t j = 0; j < s; ++j) {
      const double w = double(j + 1) / (s + 1);
      positions_.push_back((1 - w) * pa + w * pb);
    }
  }
  adjacency_.resize(positions_.size());

  // Boundary nodes of a triangle edge, from `from` to `to`.
  auto edge_nodes = [&](std::uint32_t from, std::uint32_t to) {
    std::vector<std::uint32_t> out{from};
    const std::size_t e = mesh.edge_index(from, to);
    const auto base = nv + static_cast<std::uint32_t>(e) * s;
    for (std::uint32_t j = 0; j < s; ++j) out.push_back(from < to ? base + j : base + s - 1 - j);
    return out;
  };

  std::unordered_set<std::uint64_t> seen;
  auto add_arc = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (std::uint64_t(a) << 32) | b;
    if (!seen.insert(key).second) return;
    const auto idx = static_cast<std::uint32_t>(arcs_.size());
    const double len = detail::norm(positions_[b] - positions_[a]);
    arcs_.push_back({a, b, len});
    adjacency_[a].push_back({b, idx, len});
    adjacency_[b].push_back({a, idx, len});
  };

  for (const auto& tri : mesh.triangles()) {
    // Each side as a run of nodes (end vertex excluded); sides[i] starts at tri[i].
    std::array<std::vector<std::uint32_t>, 3> sides;
    for (int i = 0; i < 3; ++i) sides[i] = edge_nodes(tri[i], tri[(i + 1) % 3]);
    for (int i = 0; i < 3; ++i) {
      // Consecutive nodes along the side.
      const auto& run = sides[i];
      for (std::size_t j = 0; j + 1 < run.size(); ++j) add_arc(run[j], run[j + 1]);
      add_arc(run.back(), tri[(i + 1) % 3]);
    }
    // Chords between nodes on different sides. A vertex belongs to two sides.
    for (int i = 0; i < 3; ++i) {
      std::vector<std::uint32_t> side_i = sides[i];
      side_i.push_back(tri[(i + 1) % 3]);
      for (int j = i + 1; j < 3; ++j) {
        std::vector<std::uint32_t> side_j = sides[j];
        side_j.push_back(tri[(j + 1) % 3]);
        for (auto a : side_i) {
          for (auto b : side_j) {
            // Nodes sharing a side are collinear; the along-side arcs cover them.
            const bool a_on_j = std::find(side_j.begin(), side_j.end(), a) != side_j.end();
            const bool b_on_i = std::find(side_i.begin(), side_i.end(), b) != side_i.end();
            if (!a_on_j && !b_on_i) add_arc(a, b);
          }
        }
      }
    }
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Adjacent& x, const Adjacent& y) { return x.node < y.node; });
  }
}

std::vector<double> GeodesicGraph::shortest_paths(
    const std::vector<std::pair<std::uint32_t, double>>& sources,
    std::vector<std::uint32_t>* pred_arc, const std::vector<std::uint32_t>* targets,
    double limit) const {
  std::vector<double> dist(positions_.size(), std::numeric_limits<double>::infinity());
  std::vector<char> pending;
  std::size_t remaining = 0;
  if (targets) {
    pending.assign(positions_.size(), 0);
    for (auto t : *targets)
      if (!pending[t]) {
        pending[t] = 1;
        ++remaining;
      }
  }
  if (pred_arc) pred_arc->assign(positions_.size(), npos);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (const auto& [node, d] : sources) {
    if (d < dist[node]) {
      dist[node] = d;
      heap.emplace(d, node);
    }
  }
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    if (d > limit) {
      // Everything left in the heap is farther still.
      for (auto& x : dist)
        if (x > limit) x = std::numeric_limits<double>::infinity();
      break;
    }
    if (targets && pending[u]) {
      pending[u] = 0;
      if (--remaining == 0) break;
    }
    for (const auto& [v, arc, len] : adjacency_[u]) {
      const double nd = d + len;
      if (nd < dist[v]) {
        dist[v] = nd;
        if (pred_arc) (*pred_arc)[v] = arc;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

bool GeodesicGraph::connected() const {
  if (positions_.empty()) return true;
  const auto d = shortest_paths({{0, 0.0}});
  return std::all_of(d.begin(), d.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace cmpk
