#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvmaps/paths.hpp"
#include "wvmaps/polyhedral.hpp"

namespace wvmaps {

// One bound evaluated on one instance: lhs <relation> rhs.
struct BoundCheck {
  std::string tag;  // L2.1 C2.2 T2.1 L3.1 L3.2 T1.2 T1.3 T4.1 COOK
  std::string what;
  double lhs = 0;
  std::string relation;  // "<=", ">=", "=="
  double rhs = 0;
  bool pass = true;
};

BoundCheck make_check(std::string tag, std::string what, double lhs, std::string relation, double rhs);

struct MapSummary {
  int vertices = 0, edges = 0, faces = 0;
  int euler_char = 0;
  bool orientable = true;
  PolyhedralVerdict polyhedral;
};

MapSummary summarize(const SurfaceMap& map);

// Map-level bounds: face touching (C2.2) and, for chi <= 0, connectivity (COOK).
std::vector<BoundCheck> map_checks(const SurfaceMap& map);

// Component bound over every (path, face) whose revisits are all non-contractible.
// Returns the largest such component count (0 if none) through max_k.
BoundCheck component_bound_check(const SurfaceMap& map, const PathSystem& system, int* max_k = nullptr);

struct PairReport {
  VertexId x = -1, y = -1;
  bool cofacial = false;
  std::vector<XYPath> cofacial_paths;  // the W_v-paths of a cofacial pair
  int kappa = 0;
  int class_count = 0;
  std::vector<int> class_sizes;
  int initial_r = 0;
  int minimized_r = 0;
  int reroute_steps = 0;
  std::optional<bool> wv_exists;
  std::optional<XYPath> wv_example;
  std::optional<int> wv_disjoint;  // only with exhaustive search
  std::optional<long long> wv_count;  // likewise; stops at wv_count_cap
  static constexpr long long wv_count_cap = 1000000;
  std::vector<BoundCheck> checks;
  std::vector<std::string> violations;  // errors raised while checking

  bool ok() const;
};

// Throws NotPolyhedral, SameVertex.
PairReport analyze_pair(const SurfaceMap& map, VertexId x, VertexId y, bool exhaustive);

}  // namespace wvmaps
