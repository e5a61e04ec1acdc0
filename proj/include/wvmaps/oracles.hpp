#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wvmaps/paths.hpp"

// Slow reference implementations used to cross-check the fast algorithms.
namespace wvmaps::oracle {

// Every simple x-y path, no pruning. Return false from visit to stop.
void for_each_simple_path(const SurfaceMap& map, VertexId x, VertexId y,
                          const std::function<bool(const XYPath&)>& visit);

// First W_v-path found by filtering all simple paths with total_revisit_number.
std::optional<XYPath> naive_wv_path(const SurfaceMap& map, VertexId x, VertexId y);
long long count_wv_paths_naive(const SurfaceMap& map, VertexId x, VertexId y);

// Menger by separator enumeration: smallest vertex set (x, y excluded) that
// cuts every x-y path, plus one for each direct edge. Needs V <= 24.
int brute_local_connectivity(const SurfaceMap& map, VertexId x, VertexId y);

// Largest family of pairwise internally disjoint simple x-y paths, by search
// over all simple paths. Only for very small maps.
int brute_disjoint_family(const SurfaceMap& map, VertexId x, VertexId y);

// Cycles from depth-first search over the graph, up to `limit` of them.
std::vector<Cycle> sample_cycles(const SurfaceMap& map, int limit);

}  // namespace wvmaps::oracle
