#include "wvmaps/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace wvmaps::oracle {

void for_each_simple_path(const SurfaceMap& map, VertexId x, VertexId y,
                          const std::function<bool(const XYPath&)>& visit) {
  std::vector<char> used(map.vertex_count(), 0);
  XYPath p;
  p.vertices.push_back(x);
  used[x] = 1;
  bool stop = false;
  std::function<void(VertexId)> go = [&](VertexId u) {
    for (EdgeId e = 0; e < map.edge_count() && !stop; ++e) {
      const Edge& ed = map.edge(e);
      if (ed.u != u && ed.v != u) continue;
      VertexId v = ed.u == u ? ed.v : ed.u;
      if (used[v]) continue;
      p.vertices.push_back(v);
      p.edges.push_back(e);
      if (v == y) {
        if (!visit(p)) stop = true;
      } else {
        used[v] = 1;
        go(v);
        used[v] = 0;
      }
      p.vertices.pop_back();
      p.edges.pop_back();
    }
  };
  go(x);
}

std::optional<XYPath> naive_wv_path(const SurfaceMap& map, VertexId x, VertexId y) {
  std::optional<XYPath> found;
  for_each_simple_path(map, x, y, [&](const XYPath& p) {
    if (total_revisit_number(map, p) == 0) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

long long count_wv_paths_naive(const SurfaceMap& map, VertexId x, VertexId y) {
  long long n = 0;
  for_each_simple_path(map, x, y, [&](const XYPath& p) {
    if (total_revisit_number(map, p) == 0) ++n;
    return true;
  });
  return n;
}

namespace {

bool connected_avoiding(const SurfaceMap& map, VertexId x, VertexId y, std::uint32_t removed,
                        const std::vector<VertexId>& others, bool skip_direct) {
  std::vector<char> gone(map.vertex_count(), 0);
  for (std::size_t i = 0; i < others.size(); ++i)
    if (removed >> i & 1u) gone[others[i]] = 1;
  std::vector<char> seen(map.vertex_count(), 0);
  std::vector<VertexId> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (EdgeId e = 0; e < map.edge_count(); ++e) {
      const Edge& ed = map.edge(e);
      if (ed.u != u && ed.v != u) continue;
      VertexId v = ed.u == u ? ed.v : ed.u;
      if (skip_direct && ((u == x && v == y) || (u == y && v == x))) continue;
      if (seen[v] || gone[v]) continue;
      if (v == y) return true;
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  return false;
}

}  // namespace

int brute_local_connectivity(const SurfaceMap& map, VertexId x, VertexId y) {
  std::vector<VertexId> others;
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    if (v != x && v != y) others.push_back(v);
  if (others.size() > 24) throw Error(ErrorKind::InstanceTooLarge, "separator enumeration limited to 26 vertices");
  int direct = 0;
  for (const Edge& e : map.edges())
    if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) ++direct;
  const std::uint32_t limit = std::uint32_t{1} << others.size();
  int best = static_cast<int>(others.size());
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (size >= best) continue;
    if (!connected_avoiding(map, x, y, s, others, true)) best = size;
  }
  return best + direct;
}

int brute_disjoint_family(const SurfaceMap& map, VertexId x, VertexId y) {
  std::vector<XYPath> all;
  for_each_simple_path(map, x, y, [&](const XYPath& p) {
    all.push_back(p);
    return true;
  });
  int best = 0;
  std::vector<int> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t j = from; j < all.size(); ++j) {
      bool ok = true;
      for (int c : chosen)
        if (!internally_disjoint(all[c], all[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(j));
      go(j + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

std::vector<Cycle> sample_cycles(const SurfaceMap& map, int limit) {
  // Every non-tree edge of a BFS tree closes a cycle; add all face boundaries too.
  std::vector<Cycle> out;
  const int n = map.vertex_count();
  for (VertexId root = 0; root < n && static_cast<int>(out.size()) < limit; ++root) {
    std::vector<int> parent_edge(n, -2), depth(n, 0);
    std::vector<VertexId> order{root};
    parent_edge[root] = -1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      VertexId u = order[h];
      for (DartId d : map.rotation(u)) {
        VertexId v = map.head(d);
        if (parent_edge[v] != -2) continue;
        parent_edge[v] = SurfaceMap::edge_of(d);
        depth[v] = depth[u] + 1;
        order.push_back(v);
      }
    }
    for (EdgeId e = 0; e < map.edge_count() && static_cast<int>(out.size()) < limit; ++e) {
      const Edge& ed = map.edge(e);
      if (ed.u == ed.v || parent_edge[ed.u] == e || parent_edge[ed.v] == e) continue;
      std::vector<VertexId> left{ed.u}, right{ed.v};
      std::vector<EdgeId> le, re;
      while (left.back() != right.back()) {
        VertexId& deeper = depth[left.back()] >= depth[right.back()] ? left.back() : right.back();
        bool is_left = &deeper == &left.back();
        EdgeId pe = parent_edge[deeper];
        VertexId up = map.other_end(pe, deeper);
        (is_left ? le : re).push_back(pe);
        (is_left ? left : right).push_back(up);
      }
      Cycle c;
      c.vertices = left;
      c.edges = le;
      for (int k = static_cast<int>(right.size()) - 2; k >= 0; --k) {
        c.edges.push_back(re[k]);
        c.vertices.push_back(right[k]);
      }
      c.edges.push_back(e);
      try {
        validate_cycle(map, c);
        out.push_back(std::move(c));
      } catch (const Error&) {
      }
    }
  }
  for (FaceId f = 0; f < map.face_count() && static_cast<int>(out.size()) < limit; ++f)
    if (map.face(f).simple) out.push_back(face_cycle(map, f));
  return out;
}

}  // namespace wvmaps::oracle
