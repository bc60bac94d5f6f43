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

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include <json.hpp>

#include "cmpk/errors.hpp"
#include "cmpk/mesh.hpp"
#include "vec3.hpp"

namespace cmpk {

using namespace detail;

namespace {

// One traversed piece of an arc, from fraction f0 to f1.
struct Piece {
  std::uint32_t arc;
  double f0;
  double f1;
  double length;
};

class MeshSpace final : public GeodesicSpace {
 public:
  MeshSpace(const TriMesh& mesh, int steiner, std::string source)
      : graph_(std::make_shared<GeodesicGraph>(mesh, steiner)),
        vertex_count_(mesh.vertices().size()),
        source_(std::move(source)) {
    if (!graph_->connected()) throw MeshError("mesh graph is disconnected");
    if (graph_->arcs().empty()) throw MeshError("mesh has no edges");
    for (auto [a, b] : mesh.edges()) {
      auto& va = mesh.vertices()[a];
      auto& vb = mesh.vertices()[b];
      resolution_ = std::max(resolution_, detail::norm(detail::Vec3{vb[0] - va[0], vb[1] - va[1],
                                                                    vb[2] - va[2]}));
    }
    resolution_ /= steiner + 1;
  }

  std::string id() const override {
    return "mesh(steiner=" + std::to_string(graph_->steiner()) + ")";
  }
  std::string descriptor() const override {
    nlohmann::json j = !source_.empty() && source_.front() == '{'
                           ? nlohmann::json::parse(source_)
                           : nlohmann::json{{"type", "mesh"}, {"path", source_}};
    j["steiner"] = graph_->steiner();
    return j.dump();
  }

  double distance(const Point& a, const Point& b) const override {
    const auto targets = ends(b);
    const auto dist = graph_->shortest_paths(seeds(a), nullptr, &targets);
    return resolve(*graph_, dist, a, b);
  }

  std::function<double(const Point&)> distance_from(const Point& q) const override {
    auto dist = std::make_shared<std::vector<double>>(graph_->shortest_paths(seeds(q)));
    auto graph = graph_;
    return [graph, dist, q](const Point& p) { return resolve(*graph, *dist, q, p); };
  }

  std::vector<GeodesicSegment> minimal_geodesics(const Point& a,
                                                 const Point& b) const override {
    std::vector<std::uint32_t> pred;
    const auto targets = ends(b);
    const auto dist = graph_->shortest_paths(seeds(a), &pred, &targets);
    const auto& arcs = graph_->arcs();
    const auto& ab = arcs[b.label];
    const double fb = b.x[0];

    std::vector<Piece> pieces;
    const double via_u = dist[ab.u] + fb * ab.length;
    const double via_v = dist[ab.v] + (1 - fb) * ab.length;
    const double direct = a.label == b.label ? std::abs(a.x[0] - fb) * ab.length
                                             : std::numeric_limits<double>::infinity();
    if (direct <= std::min(via_u, via_v)) {
      pieces.push_back({static_cast<std::uint32_t>(a.label), a.x[0], fb, direct});
    } else {
      const bool enter_u = via_u <= via_v;
      std::uint32_t node = enter_u ? ab.u : ab.v;
      pieces.push_back({static_cast<std::uint32_t>(b.label), enter_u ? 0.0 : 1.0, fb,
                        (enter_u ? fb : 1 - fb) * ab.length});
      // Walk predecessors back to a seed node of a's arc.
      while (pred[node] != GeodesicGraph::npos) {
        const auto& arc = arcs[pred[node]];
        const bool from_u = arc.v == node;
        pieces.push_back({pred[node], from_u ? 0.0 : 1.0, from_u ? 1.0 : 0.0, arc.length});
        node = from_u ? arc.u : arc.v;
      }
      const auto& aa = arcs[a.label];
      const double fa = a.x[0];
      const double exit = node == aa.u ? 0.0 : 1.0;
      pieces.push_back({static_cast<std::uint32_t>(a.label), fa, exit,
                        std::abs(exit - fa) * aa.length});
      std::reverse(pieces.begin(), pieces.end());
    }

    std::vector<double> cumulative{0};
    for (const auto& pc : pieces) cumulative.push_back(cumulative.back() + pc.length);
    const double length = cumulative.back();
    return {GeodesicSegment(id(), a, b, length, [pieces, cumulative](double t) {
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), t);
      std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - cumulative.begin() - 1, 0));
      i = std::min(i, pieces.size() - 1);
      const auto& pc = pieces[i];
      const double w = pc.length > 0 ? std::clamp((t - cumulative[i]) / pc.length, 0.0, 1.0) : 0;
      Point p;
      p.label = static_cast<int>(pc.arc);
      p.x[0] = pc.f0 + w * (pc.f1 - pc.f0);
      return p;
    })};
  }

  // Uniform node within the ball, then a uniform step along one of its arcs
  // that stays inside.
  Point sample_ball(const Point& center, double radius, Rng& rng) const override {
    // An unbounded ball is the whole graph; skip the search.
    const auto dist = std::isfinite(radius)
                          ? graph_->shortest_paths(seeds(center), nullptr, nullptr, radius)
                                            : std::vector<double>(graph_->node_count(), 0.0);
    std::vector<std::uint32_t> inside;
    for (std::uint32_t n = 0; n < dist.size(); ++n) {
      if (dist[n] <= radius) inside.push_back(n);
    }
    if (inside.empty()) return center;
    std::uniform_int_distribution<std::size_t> pick(0, inside.size() - 1);
    const auto node = inside[pick(rng)];
    const auto& adj = graph_->adjacency()[node];
    std::uniform_int_distribution<std::size_t> pick_arc(0, adj.size() - 1);
    const auto& nb = adj[pick_arc(rng)];
    const auto& arc = graph_->arcs()[nb.arc];
    const double room = std::min(arc.length, radius - dist[node]);
    std::uniform_real_distribution<double> step(0, room);
    const double f = step(rng) / arc.length;
    Point p;
    p.label = static_cast<int>(nb.arc);
    p.x[0] = arc.u == node ? f : 1 - f;
    return p;
  }

  std::optional<Point> shoot(const Point&, double, double) const override { return std::nullopt; }

  bool diagnostic_only() const override { return true; }
  double resolution() const override { return resolution_; }

  std::vector<double> coords(const Point& p) const override {
    const auto& arc = graph_->arcs()[p.label];
    const auto& pos = graph_->positions();
    const double f = p.x[0];
    const auto xyz = (1 - f) * pos[arc.u] + f * pos[arc.v];
    return {static_cast<double>(p.label), f, xyz[0], xyz[1], xyz[2]};
  }

  // 1 coordinate: vertex index. 2: (arc, fraction). 3: nearest node to (x,y,z).
  Point point_from_coords(std::span<const double> c) const override {
    if (c.size() == 1) {
      if (!(c[0] >= 0) || c[0] >= static_cast<double>(vertex_count_)) {
        throw SpaceError("mesh vertex index out of range");
      }
      return node_point(static_cast<std::uint32_t>(c[0]));
    }
    if (c.size() == 2) {
      if (!(c[0] >= 0) || c[0] >= static_cast<double>(graph_->arcs().size()) ||
          !(c[1] >= 0 && c[1] <= 1)) {
        throw SpaceError("mesh (arc, fraction) out of range");
      }
      Point p;
      p.label = static_cast<int>(c[0]);
      p.x[0] = c[1];
      return p;
    }
    if (c.size() == 3 || c.size() == 5) {
      const detail::Vec3 target{c[c.size() - 3], c[c.size() - 2], c[c.size() - 1]};
      std::uint32_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::uint32_t n = 0; n < graph_->node_count(); ++n) {
        const double d = detail::norm(graph_->positions()[n] - target);
        if (d < best_d) {
          best_d = d;
          best = n;
        }
      }
      return node_point(best);
    }
    throw SpaceError("mesh points take 1 (vertex), 2 (arc, fraction) or 3 (x, y, z) coordinates");
  }

  Point default_center() const override { return node_point(0); }

 private:
  Point node_point(std::uint32_t n) const {
    const auto& nb = graph_->adjacency()[n].front();
    Point p;
    p.label = static_cast<int>(nb.arc);
    p.x[0] = graph_->arcs()[nb.arc].u == n ? 0.0 : 1.0;
    return p;
  }

  std::vector<std::uint32_t> ends(const Point& q) const {
    const auto& arc = graph_->arcs()[q.label];
    return {arc.u, arc.v};
  }

  std::vector<std::pair<std::uint32_t, double>> seeds(const Point& q) const {
    const auto& arc = graph_->arcs()[q.label];
    return {{arc.u, q.x[0] * arc.length}, {arc.v, (1 - q.x[0]) * arc.length}};
  }

  static double resolve(const GeodesicGraph& g, const std::vector<double>& dist, const Point& q,
                        const Point& p) {
    const auto& arc = g.arcs()[p.label];
    double d = std::min(dist[arc.u] + p.x[0] * arc.length, dist[arc.v] + (1 - p.x[0]) * arc.length);
    if (p.label == q.label) d = std::min(d, std::abs(p.x[0] - q.x[0]) * arc.length);
    return d;
  }

  std::shared_ptr<const GeodesicGraph> graph_;
  std::size_t vertex_count_;
  std::string source_;
  double resolution_ = 0;
};

}  // namespace

SpacePtr mesh_space(const TriMesh& mesh, int steiner, const std::string& source) {
  return std::make_shared<MeshSpace>(mesh, steiner, source);
}

}  // namespace cmpk
