#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wvmaps/homotopy.hpp"
#include "wvmaps/paths.hpp"

namespace wvmaps {

enum class RerouteCase { EndpointsOutsideDisk, EndpointsInsideDisk };
std::string to_string(RerouteCase c);

struct RerouteStep {
  int path_index = 0;
  FaceId face = -1;
  int comp_i = 0;
  int comp_j = 0;
  RerouteCase which = RerouteCase::EndpointsOutsideDisk;
  int old_r = 0;
  int new_r = 0;
  bool moved_inward = false;  // a more inner revisit replaced the requested one
  std::vector<VertexId> arc;  // substituted face-boundary arc, including its ends
};

struct RerouteResult {
  PathSystem system;
  RerouteStep step;
};

// Replaces path i by one that follows the boundary of `face` across the
// contractible revisit (comp_i, comp_j), after moving to an innermost revisit
// if needed. The map is assumed polyhedral. Throws SystemTooSmall,
// CofacialEndpoints, RevisitNotContractible, RerouteFailed.
RerouteResult reroute_contractible(const SurfaceMap& map, const PathSystem& system, int path_index, FaceId face,
                                   int comp_i, int comp_j);

struct MinimizeOptions {
  std::mt19937* rng = nullptr;     // random choice among contractible revisits
  std::vector<char> active;        // paths allowed to move (empty: all)
  // Vertices a moved path must stay inside (empty: no constraint).
  std::vector<VertexId> confine_to;
};

struct MinimizeResult {
  PathSystem system;
  std::vector<RerouteStep> steps;
};

MinimizeResult minimize_revisits(const SurfaceMap& map, const PathSystem& system, const MinimizeOptions& opts = {});

// Non-bounding members of a class after their revisits are removed inside the
// class disk. Throws ClassTooSmall for classes of fewer than 3 paths.
std::vector<XYPath> wv_paths_in_class(const SurfaceMap& map, const PathSystem& system, const HomotopyClass& cls);

// Depth-first search with per-face component tracking; exact.
std::optional<XYPath> exists_wv_path(const SurfaceMap& map, VertexId x, VertexId y);
// Calls visit for every W_v-path; stop early by returning false.
void for_each_wv_path(const SurfaceMap& map, VertexId x, VertexId y, const std::function<bool(const XYPath&)>& visit);

// Vertex cutoff for exhaustive searches (WVMAPS_CUTOFF, default 40).
int exhaustive_cutoff();

// Size of a largest internally disjoint family of W_v-paths. Throws
// InstanceTooLarge above the cutoff (or beyond 64 vertices).
int max_disjoint_wv_paths(const SurfaceMap& map, VertexId x, VertexId y);

}  // namespace wvmaps
