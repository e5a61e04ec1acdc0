#pragma once

#include <vector>

#include "wvmaps/paths.hpp"
#include "wvmaps/surface_map.hpp"

namespace wvmaps {

// Which end of a component stands in for it when closing a dual curve.
enum class Representative { FirstInWalk, LastInWalk };

struct DualCurve {
  FaceId face = -1;
  int path_index = 0;
  int comp_i = 0;
  int comp_j = 0;
  VertexId u = -1;  // representative of comp_i
  VertexId v = -1;  // representative of comp_j
  SurfaceMap augmented;  // map plus the chord
  EdgeId chord = -1;
  Cycle cycle;  // subpath of P from u to v, closed by the chord
  bool contractible = false;
};

// comp_i, comp_j index into face_path_components(map, path, face).
DualCurve dual_curve(const SurfaceMap& map, const XYPath& path, FaceId face, int comp_i, int comp_j,
                     int path_index = 0, Representative rep = Representative::FirstInWalk);

struct RevisitPair {
  int comp_i = 0;
  int comp_j = 0;
  bool contractible = false;
};

struct RevisitRecord {
  FaceId face = -1;
  int path_index = 0;
  std::vector<PathComponent> components;
  std::vector<RevisitPair> pairs;  // every i < j
};

// One record per face met at least twice by the path.
std::vector<RevisitRecord> revisit_records(const SurfaceMap& map, const XYPath& path, int path_index = 0,
                                           const FaceMask& ignore = {});

// Component count of P and F when every revisit pair is non-contractible.
// Throws PreconditionViolated if some pair is contractible and BoundViolated
// if two or more components exceed 4 - 2 chi.
int count_noncontractible_components(const SurfaceMap& map, const XYPath& path, FaceId face);

// Union of the two paths as a cycle through x and y. Throws PathsNotDisjoint.
Cycle path_pair_cycle(const SurfaceMap& map, const XYPath& a, const XYPath& b);
bool paths_homotopic(const SurfaceMap& map, const XYPath& a, const XYPath& b);

struct HomotopyClass {
  std::vector<int> members;  // path indices, increasing
  // For classes of size >= 2: the pair whose union bounds the smallest disk
  // holding every other member.
  int bound_a = -1;
  int bound_b = -1;
  std::vector<VertexId> disk_vertices;  // interior vertices of that disk
  std::vector<FaceId> disk_faces;
};

struct HomotopyClassification {
  std::vector<HomotopyClass> classes;
  int class_count() const { return static_cast<int>(classes.size()); }
};

// Throws NonTransitiveHomotopy, NoBoundingPair, and (unless check_bound is
// false) BoundViolated when the class count breaks 4 - 2 chi (1 on the sphere).
HomotopyClassification classify_homotopy(const SurfaceMap& map, const PathSystem& system, bool check_bound = true);

// Largest allowed class count.
int homotopy_class_bound(int euler_char);

}  // namespace wvmaps
