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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cmpk/geodesic_space.hpp"

namespace cmpk {

// Validated triangle mesh. Vertex order is file order.
class TriMesh {
 public:
  using Vec = std::array<double, 3>;
  using Tri = std::array<std::uint32_t, 3>;
  using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

  // Throws MeshError on out-of-range indices, degenerate triangles
  // (area <= 1e-12 * bbox diagonal^2), or edges shared by more than two
  // triangles.
  TriMesh(std::vector<Vec> vertices, std::vector<Tri> triangles);

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Tri>& triangles() const { return triangles_; }
  // Sorted unique edges.
  const std::vector<Edge>& edges() const { return edges_; }
  // Index into edges() for the edge {a, b}.
  std::size_t edge_index(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<Vec> vertices_;
  std::vector<Tri> triangles_;
  std::vector<Edge> edges_;
};

// Wavefront OBJ, `v` and `f` records only; other records are ignored. Face
// entries may carry /vt/vn suffixes and negative (relative) indices. Throws
// ParseError with the line number, MeshError for invalid topology, or
// IoError (load_obj) when the file cannot be opened.
TriMesh parse_obj(std::istream& in);
TriMesh load_obj(const std::filesystem::path& path);
void write_obj(std::ostream& out, const TriMesh& mesh);

// Unit icosphere: icosahedron refined `level` times, vertices projected to
// the unit sphere. Level 3 has 642 vertices.
TriMesh make_icosphere(int level);
TriMesh make_octahedron();
// Unit square [0,1]^2 split into n x n cells, each cut along the (1,0)-(0,1)
// diagonal direction.
TriMesh make_square_grid(int n);

// Mesh vertices plus `steiner` equally spaced points inside every edge, with
// an arc between every two nodes on the boundary of a common triangle.
class GeodesicGraph {
 public:
  struct Arc {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double length = 0;
  };
  struct Adjacent {
    std::uint32_t node = 0;
    std::uint32_t arc = 0;
    double length = 0;  // copy of the arc length, kept local for the search
  };

  GeodesicGraph(const TriMesh& mesh, int steiner);

  int steiner() const { return steiner_; }
  std::size_t node_count() const { return positions_.size(); }
  const std::vector<TriMesh::Vec>& positions() const { return positions_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<std::vector<Adjacent>>& adjacency() const { return adjacency_; }

  // Dijkstra from several seeded sources; ties settle in node-id order.
  // `pred_arc` receives the arc used to reach each node (or npos). With
  // `targets`, the search stops once every target is settled; only target
  // distances (and their predecessor chains) are then final. Nodes farther
  // than `limit` are left at infinity.
  std::vector<double> shortest_paths(
      const std::vector<std::pair<std::uint32_t, double>>& sources,
      std::vector<std::uint32_t>* pred_arc = nullptr,
      const std::vector<std::uint32_t>* targets = nullptr,
      double limit = std::numeric_limits<double>::infinity()) const;

  bool connected() const;

  static constexpr std::uint32_t npos = 0xffffffffu;

 private:
  int steiner_;
  std::vector<TriMesh::Vec> positions_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Adjacent>> adjacency_;
};

// Metric graph of the Steiner graph as a geodesic space. Points are
// (arc, fraction) in (label, x[0]); geodesics are polylines. `source` is
// the OBJ path echoed in the descriptor, or a JSON object describing where
// the mesh came from. Throws MeshError if the graph is
// disconnected.
SpacePtr mesh_space(const TriMesh& mesh, int steiner, const std::string& source = "");

}  // namespace cmpk
