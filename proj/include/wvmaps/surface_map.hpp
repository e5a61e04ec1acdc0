#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wvmaps/error.hpp"

namespace wvmaps {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  int sign = 1;  // +1 or -1
};

// Raw, unvalidated embedding data. SurfaceMap::build checks it.
struct MapData {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<DartId>> rotation;
};

// One face boundary. Corner k sits at vertices[k]; the walk leaves it along
// darts[k] with traversal flag orientation[k].
struct FaceWalk {
  std::vector<DartId> darts;
  std::vector<int> orientation;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<VertexId> boundary_vertices;  // sorted, unique
  std::vector<EdgeId> boundary_edges;       // sorted, unique
  bool simple = true;

  int length() const { return static_cast<int>(darts.size()); }
  // First corner at v, or -1.
  int corner_of(VertexId v) const;
};

// Signed rotation system of a connected multigraph.
//
// Edge e owns darts 2e (at edge.u) and 2e+1 (at edge.v). Faces are traced with
// a traversal flag o: from state (d, o) we cross d, multiply o by sign(d), and
// continue with the successor of twin(d) in the rotation when o > 0, the
// predecessor when o < 0.
class SurfaceMap {
 public:
  SurfaceMap() = default;

  static SurfaceMap build(MapData data);
  static SurfaceMap build(int vertex_count, std::vector<Edge> edges,
                          std::vector<std::vector<DartId>> rotation) {
    return build(MapData{vertex_count, std::move(edges), std::move(rotation)});
  }

  int vertex_count() const { return data_.vertex_count; }
  int edge_count() const { return static_cast<int>(data_.edges.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int euler_char() const { return vertex_count() - edge_count() + face_count(); }
  bool orientable() const { return orientable_; }

  const MapData& data() const { return data_; }
  const Edge& edge(EdgeId e) const { return data_.edges[e]; }
  const std::vector<Edge>& edges() const { return data_.edges; }
  const std::vector<DartId>& rotation(VertexId v) const { return data_.rotation[v]; }
  int degree(VertexId v) const { return static_cast<int>(data_.rotation[v].size()); }

  static DartId twin(DartId d) { return d ^ 1; }
  static EdgeId edge_of(DartId d) { return d >> 1; }
  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[d ^ 1]; }
  int sign(EdgeId e) const { return data_.edges[e].sign; }
  DartId next(DartId d) const { return next_[d]; }
  DartId prev(DartId d) const { return prev_[d]; }
  DartId step(DartId d, int o) const { return o > 0 ? next_[d] : prev_[d]; }
  VertexId other_end(EdgeId e, VertexId v) const {
    return data_.edges[e].u == v ? data_.edges[e].v : data_.edges[e].u;
  }
  // Dart of e leaving v (the first one for loops).
  DartId dart_at(EdgeId e, VertexId v) const { return data_.edges[e].u == v ? 2 * e : 2 * e + 1; }

  const std::vector<FaceWalk>& faces() const { return faces_; }
  const FaceWalk& face(FaceId f) const { return faces_[f]; }
  FaceId face_of_state(DartId d, int o) const { return state_face_[2 * d + (o > 0 ? 0 : 1)]; }
  // The two face sides of an edge (equal when the edge is traversed twice by one face).
  std::array<FaceId, 2> faces_of_edge(EdgeId e) const {
    return {face_of_state(2 * e, 1), face_of_state(2 * e, -1)};
  }
  const std::vector<FaceId>& faces_at(VertexId v) const { return vertex_faces_[v]; }
  bool on_face(VertexId v, FaceId f) const;
  bool edge_on_face(EdgeId e, FaceId f) const;

  std::vector<VertexId> neighbors(VertexId v) const;  // sorted, unique
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }
  bool is_simple_graph() const;

 private:
  MapData data_;
  std::vector<VertexId> origin_;
  std::vector<DartId> next_, prev_;
  std::vector<FaceWalk> faces_;
  std::vector<FaceId> state_face_;
  std::vector<std::vector<FaceId>> vertex_faces_;
  bool orientable_ = true;

  void trace_faces();
  void compute_orientability();
};

// A closed walk given by vertices c_0..c_{m-1} and edges, edges[i] joining
// c_i and c_{i+1 mod m}.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

// Builds a cycle through the given vertices using the lowest-id connecting edges.
Cycle cycle_from_vertices(const SurfaceMap& map, const std::vector<VertexId>& vertices);
Cycle face_cycle(const SurfaceMap& map, FaceId f);
// Throws NotSimpleCycle unless the cycle is closed, consecutive and vertex-simple.
void validate_cycle(const SurfaceMap& map, const Cycle& cycle);

struct CutComponent {
  SurfaceMap map;  // boundary circles appear as faces of this map
  int euler_char = 0;  // bordered: V - E + F - boundary_count
  int boundary_count = 0;
  std::vector<VertexId> original_vertex;  // per component vertex
  std::vector<EdgeId> original_edge;      // per component edge
  std::vector<bool> on_boundary;          // per component vertex: copy of a cycle vertex
  std::vector<FaceId> original_face;      // per component face, -1 for boundary circles
  std::vector<VertexId> interior_vertices;  // original ids of non-cycle vertices, sorted
  std::vector<FaceId> interior_faces;       // original face ids, sorted

  bool is_disk() const { return euler_char == 1 && boundary_count == 1; }
  bool contains_vertex(VertexId original) const;
  bool contains_face(FaceId original) const;
};

struct CutResult {
  std::vector<CutComponent> components;
  bool separating = false;
  bool one_sided = false;  // cycle has a Moebius neighbourhood
};

CutResult cut_along_cycle(const SurfaceMap& map, const Cycle& cycle);
bool is_contractible(const SurfaceMap& map, const Cycle& cycle);

struct ChordResult {
  SurfaceMap map;
  EdgeId chord = -1;
};

// New edge inside face f between two corners (positions on the face walk).
// The edge sign is the product of the corner traversal flags, which is +1
// whenever the map is all-positive.
ChordResult insert_chord_at(const SurfaceMap& map, FaceId f, int u_corner, int v_corner);
// Same, locating the corners of u and v on the (simple) face.
ChordResult insert_chord(const SurfaceMap& map, FaceId f, VertexId u, VertexId v);

// Removes e; later edges shift down by one. The result must stay connected.
SurfaceMap delete_edge(const SurfaceMap& map, EdgeId e);

struct Contraction {
  SurfaceMap map;
  std::vector<VertexId> vertex_image;  // old vertex -> new vertex
  std::vector<EdgeId> edge_image;      // old edge -> new edge, -1 for the contracted one
};

// Merges edge.v into edge.u.
Contraction contract_embedded_edge(const SurfaceMap& map, EdgeId e);

// Local switch: reverse rotations at the chosen vertices and flip the signs of
// edges leaving the set. Yields an equivalent embedding.
SurfaceMap switch_vertices(const SurfaceMap& map, const std::vector<VertexId>& vertices);
// Switch so every spanning-tree edge is positive; orientable maps become all-positive.
SurfaceMap normalized(const SurfaceMap& map);

// Builds a map from a list of closed face boundaries (vertex cycles) of a
// simple graph. Rotations and signs are derived and then normalized.
SurfaceMap map_from_faces(int vertex_count, const std::vector<std::vector<VertexId>>& faces);

// Isomorphism-invariant code (up to relabelling and switching).
std::string canonical_form(const SurfaceMap& map);

}  // namespace wvmaps
