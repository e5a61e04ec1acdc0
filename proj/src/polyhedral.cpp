#include "wvmaps/polyhedral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wvmaps/paths.hpp"

namespace wvmaps {

std::string to_string(PolyhedralFailure f) {
  switch (f) {
    case PolyhedralFailure::None: return "none";
    case PolyhedralFailure::NotSimpleGraph: return "not a simple graph";
    case PolyhedralFailure::FaceNotSimple: return "face boundary not a simple cycle of length >= 3";
    case PolyhedralFailure::ImproperMeeting: return "improper face intersection";
    case PolyhedralFailure::NotThreeConnected: return "not 3-connected";
  }
  return "?";
}

std::vector<IntersectionComponent> face_intersection(const SurfaceMap& map, FaceId a, FaceId b) {
  const FaceWalk& fa = map.face(a);
  const FaceWalk& fb = map.face(b);
  std::vector<VertexId> vs;
  std::set_intersection(fa.boundary_vertices.begin(), fa.boundary_vertices.end(), fb.boundary_vertices.begin(),
                        fb.boundary_vertices.end(), std::back_inserter(vs));
  std::vector<EdgeId> es;
  std::set_intersection(fa.boundary_edges.begin(), fa.boundary_edges.end(), fb.boundary_edges.begin(),
                        fb.boundary_edges.end(), std::back_inserter(es));
  if (vs.empty()) return {};

  auto index = [&](VertexId v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (EdgeId e : es) parent[find(index(map.edge(e).u))] = find(index(map.edge(e).v));

  std::vector<IntersectionComponent> out;
  std::vector<int> slot(vs.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(vs[i]);
  }
  for (EdgeId e : es) out[slot[find(index(map.edge(e).u))]].edges.push_back(e);
  return out;
}

namespace {

// Face pairs that share at least one vertex, a < b.
std::vector<std::pair<FaceId, FaceId>> touching_pairs(const SurfaceMap& map) {
  std::vector<std::pair<FaceId, FaceId>> pairs;
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    const auto& fs = map.faces_at(v);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] != fs[j]) pairs.emplace_back(std::min(fs[i], fs[j]), std::max(fs[i], fs[j]));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

bool proper(const std::vector<IntersectionComponent>& comps) {
  if (comps.size() > 1) return false;
  if (comps.empty()) return true;
  const auto& c = comps.front();
  return (c.vertices.size() == 1 && c.edges.empty()) || (c.vertices.size() == 2 && c.edges.size() == 1);
}

}  // namespace

std::optional<ProperIntersectionWitness> faces_meet_properly(const SurfaceMap& map) {
  for (auto [a, b] : touching_pairs(map)) {
    auto comps = face_intersection(map, a, b);
    if (!proper(comps)) return ProperIntersectionWitness{a, b, std::move(comps)};
  }
  return std::nullopt;
}

bool is_three_connected(const SurfaceMap& map) {
  if (!map.is_simple_graph()) throw Error(ErrorKind::NotSimpleGraph, "connectivity needs a simple graph");
  if (map.vertex_count() < 4) return false;
  return vertex_connectivity(map) >= 3;
}

PolyhedralVerdict is_polyhedral(const SurfaceMap& map) {
  PolyhedralVerdict v;
  if (!map.is_simple_graph()) {
    v.reason = PolyhedralFailure::NotSimpleGraph;
    v.detail = "graph has a loop or parallel edges";
    return v;
  }
  for (FaceId f = 0; f < map.face_count(); ++f)
    if (!map.face(f).simple || map.face(f).length() < 3) {
      v.reason = PolyhedralFailure::FaceNotSimple;
      v.detail = "face " + std::to_string(f);
      return v;
    }
  if (auto w = faces_meet_properly(map)) {
    v.reason = PolyhedralFailure::ImproperMeeting;
    v.detail = "faces " + std::to_string(w->face_a) + " and " + std::to_string(w->face_b) + " meet in " +
               std::to_string(w->components.size()) + " component(s)";
    v.witness = std::move(w);
    return v;
  }
  if (!is_three_connected(map)) {
    v.reason = PolyhedralFailure::NotThreeConnected;
    v.detail = "vertex connectivity " + std::to_string(vertex_connectivity(map));
    return v;
  }
  v.polyhedral = true;
  return v;
}

TouchingNumber face_touching_number(const SurfaceMap& map) {
  TouchingNumber t;
  for (auto [a, b] : touching_pairs(map)) {
    int k = static_cast<int>(face_intersection(map, a, b).size());
    if (k > t.value) t = {k, a, b};
  }
  return t;
}

double cook_bound(int chi) { return (5.0 + std::sqrt(49.0 - 24.0 * chi)) / 2.0; }

bool cook_bound_ok(const SurfaceMap& map) {
  if (map.euler_char() > 0) throw Error(ErrorKind::SurfaceNotApplicable, "bound only stated for chi <= 0");
  return vertex_connectivity(map) <= cook_bound(map.euler_char()) + 1e-9;
}

}  // namespace wvmaps
