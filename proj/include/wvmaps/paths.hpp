#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "wvmaps/surface_map.hpp"

namespace wvmaps {

struct XYPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1]

  VertexId x() const { return vertices.front(); }
  VertexId y() const { return vertices.back(); }
  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const XYPath&) const = default;
};

// Uses the lowest-id edge between consecutive vertices.
XYPath make_path(const SurfaceMap& map, const std::vector<VertexId>& vertices);
// Throws PreconditionViolated when the path is not simple or not a walk of the map.
void validate_path(const SurfaceMap& map, const XYPath& path);
XYPath reversed(const XYPath& path);
std::uint64_t path_hash(const XYPath& path);

struct PathSystem {
  VertexId x = -1;
  VertexId y = -1;
  std::vector<XYPath> paths;

  int size() const { return static_cast<int>(paths.size()); }
};

bool internally_disjoint(const XYPath& a, const XYPath& b);
bool internally_disjoint(const PathSystem& system);

bool cofacial(const SurfaceMap& map, VertexId x, VertexId y);
std::optional<FaceId> common_face(const SurfaceMap& map, VertexId x, VertexId y);

struct Connectivity {
  int kappa = 0;
  PathSystem system;
};

// Unit vertex capacities (x, y uncapacitated), augmenting along shortest paths
// with arcs scanned in dart order.
Connectivity local_connectivity(const SurfaceMap& map, VertexId x, VertexId y);
// A maximum system found with depth-first augmentation in shuffled order;
// paths tend to wander, which makes it a good source of revisits.
PathSystem random_disjoint_paths(const SurfaceMap& map, VertexId x, VertexId y, std::mt19937& rng);
// Flow value with some vertices deleted.
int local_connectivity_avoiding(const SurfaceMap& map, VertexId x, VertexId y, const std::vector<char>& removed);

// Minimum local connectivity over non-adjacent pairs (V-1 for complete graphs).
// Throws NotSimpleGraph.
int vertex_connectivity(const SurfaceMap& map);

// Component of F ∩ P: path positions first..last (inclusive).
struct PathComponent {
  int first = 0;
  int last = 0;
  bool operator==(const PathComponent&) const = default;
};

std::vector<PathComponent> face_path_components(const SurfaceMap& map, const XYPath& path, FaceId f);

// Faces to leave out of revisit accounting (empty: none).
using FaceMask = std::vector<char>;

int total_revisit_number(const SurfaceMap& map, const XYPath& path, const FaceMask& ignore = {});
int total_revisit_number(const SurfaceMap& map, const PathSystem& system, const FaceMask& ignore = {});
bool is_wv_path(const SurfaceMap& map, const XYPath& path);

// Faces met by the path, each with its components; only faces touching the
// path are listed, in increasing face order.
struct FaceComponents {
  FaceId face = -1;
  std::vector<PathComponent> components;
};
std::vector<FaceComponents> path_face_components(const SurfaceMap& map, const XYPath& path, const FaceMask& ignore = {});

// Memoizes face_path_components per (path hash, face).
class RevisitCounter {
 public:
  explicit RevisitCounter(const SurfaceMap& map, FaceMask ignore = {}) : map_(map), ignore_(std::move(ignore)) {}

  const std::vector<PathComponent>& components(const XYPath& path, FaceId f);
  int revisits(const XYPath& path);
  int revisits(const PathSystem& system);

 private:
  struct Key {
    std::uint64_t hash;
    FaceId face;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.hash * 1000003u ^ static_cast<std::size_t>(k.face); }
  };
  const SurfaceMap& map_;
  FaceMask ignore_;
  std::unordered_map<Key, std::vector<PathComponent>, KeyHash> cache_;
};

}  // namespace wvmaps
