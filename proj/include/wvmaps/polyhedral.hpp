#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvmaps/surface_map.hpp"

namespace wvmaps {

// Connected piece of the intersection of two face boundaries.
struct IntersectionComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct ProperIntersectionWitness {
  FaceId face_a = -1;
  FaceId face_b = -1;
  std::vector<IntersectionComponent> components;
};

std::vector<IntersectionComponent> face_intersection(const SurfaceMap& map, FaceId a, FaceId b);

bool is_three_connected(const SurfaceMap& map);

// nullopt when every pair of distinct faces meets in nothing, a vertex or an edge.
std::optional<ProperIntersectionWitness> faces_meet_properly(const SurfaceMap& map);

enum class PolyhedralFailure { None, NotSimpleGraph, FaceNotSimple, ImproperMeeting, NotThreeConnected };
std::string to_string(PolyhedralFailure f);

struct PolyhedralVerdict {
  bool polyhedral = false;
  PolyhedralFailure reason = PolyhedralFailure::None;
  std::string detail;
  std::optional<ProperIntersectionWitness> witness;

  explicit operator bool() const { return polyhedral; }
};

PolyhedralVerdict is_polyhedral(const SurfaceMap& map);

struct TouchingNumber {
  int value = 0;
  FaceId face_a = -1;
  FaceId face_b = -1;
};

TouchingNumber face_touching_number(const SurfaceMap& map);

// (5 + sqrt(49 - 24 chi)) / 2
double cook_bound(int euler_char);
// Throws SurfaceNotApplicable when chi > 0.
bool cook_bound_ok(const SurfaceMap& map);

}  // namespace wvmaps
