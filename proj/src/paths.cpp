#include "wvmaps/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace wvmaps {

XYPath make_path(const SurfaceMap& map, const std::vector<VertexId>& vertices) {
  XYPath p;
  p.vertices = vertices;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = map.edge_between(vertices[i], vertices[i + 1]);
    if (!e)
      throw Error(ErrorKind::PreconditionViolated,
                  "no edge between " + std::to_string(vertices[i]) + " and " + std::to_string(vertices[i + 1]));
    p.edges.push_back(*e);
  }
  validate_path(map, p);
  return p;
}

void validate_path(const SurfaceMap& map, const XYPath& p) {
  if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size())
    throw Error(ErrorKind::PreconditionViolated, "path needs at least one edge");
  std::vector<VertexId> vs = p.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw Error(ErrorKind::PreconditionViolated, "path repeats a vertex");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (e < 0 || e >= map.edge_count()) throw Error(ErrorKind::PreconditionViolated, "path edge out of range");
    const Edge& ed = map.edge(e);
    VertexId a = p.vertices[i], b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
      throw Error(ErrorKind::PreconditionViolated, "path edge does not join consecutive vertices");
  }
}

XYPath reversed(const XYPath& p) {
  XYPath r = p;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

std::uint64_t path_hash(const XYPath& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  };
  for (VertexId v : p.vertices) mix(static_cast<std::uint64_t>(v));
  mix(0xffffffffull);
  for (EdgeId e : p.edges) mix(static_cast<std::uint64_t>(e));
  return h;
}

bool internally_disjoint(const XYPath& a, const XYPath& b) {
  std::vector<VertexId> ia(a.vertices.begin() + 1, a.vertices.end() - 1);
  std::vector<VertexId> ib(b.vertices.begin() + 1, b.vertices.end() - 1);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  std::vector<VertexId> common;
  std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(common));
  if (!common.empty()) return false;
  // endpoints may not appear inside the other path either
  for (VertexId v : {a.x(), a.y()})
    if (std::binary_search(ib.begin(), ib.end(), v)) return false;
  for (VertexId v : {b.x(), b.y()})
    if (std::binary_search(ia.begin(), ia.end(), v)) return false;
  // two copies of the same single edge are not disjoint
  if (a.length() == 1 && b.length() == 1 && a.edges[0] == b.edges[0]) return false;
  return true;
}

bool internally_disjoint(const PathSystem& s) {
  for (const auto& p : s.paths)
    if (p.x() != s.x || p.y() != s.y) return false;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j)
      if (!internally_disjoint(s.paths[i], s.paths[j])) return false;
  return true;
}

std::optional<FaceId> common_face(const SurfaceMap& map, VertexId x, VertexId y) {
  if (x == y) throw Error(ErrorKind::SameVertex, "x and y coincide");
  const auto& fx = map.faces_at(x);
  const auto& fy = map.faces_at(y);
  std::vector<FaceId> both;
  std::set_intersection(fx.begin(), fx.end(), fy.begin(), fy.end(), std::back_inserter(both));
  if (both.empty()) return std::nullopt;
  return both.front();
}

bool cofacial(const SurfaceMap& map, VertexId x, VertexId y) { return common_face(map, x, y).has_value(); }

namespace {

// Split-vertex flow network: in(v) = 2v, out(v) = 2v + 1.
class FlowNet {
 public:
  FlowNet(const SurfaceMap& map, VertexId x, VertexId y, const std::vector<char>* removed) : map_(map), x_(x), y_(y) {
    const int n = map.vertex_count();
    adj_.assign(2 * n, {});
    const int inf = std::numeric_limits<int>::max() / 4;
    for (VertexId v = 0; v < n; ++v) {
      bool gone = removed && (*removed)[v] && v != x && v != y;
      add_arc(2 * v, 2 * v + 1, gone ? 0 : (v == x || v == y ? inf : 1), -1);
    }
    for (DartId d = 0; d < map.dart_count(); ++d) {
      VertexId a = map.origin(d), b = map.head(d);
      if (a == b) continue;
      add_arc(2 * a + 1, 2 * b, 1, d >> 1);
    }
  }

  int source() const { return 2 * x_ + 1; }
  int sink() const { return 2 * y_; }

  bool augment_bfs() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> q{source()};
    seen[source()] = 1;
    while (!q.empty() && !seen[sink()]) {
      int u = q.front();
      q.pop_front();
      for (int a : adj_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = a;
          q.push_back(arc.to);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (int v = sink(); v != source(); v = arcs_[via[v] ^ 1].to) push(via[v]);
    return true;
  }

  bool augment_dfs(std::mt19937& rng) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{source()};
    seen[source()] = 1;
    while (!stack.empty() && !seen[sink()]) {
      int u = stack.back();
      stack.pop_back();
      std::vector<int> order = adj_[u];
      std::shuffle(order.begin(), order.end(), rng);
      for (int a : order) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = a;
          stack.push_back(arc.to);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (int v = sink(); v != source(); v = arcs_[via[v] ^ 1].to) push(via[v]);
    return true;
  }

  // Decomposes the current flow into x-y paths.
  PathSystem extract() {
    PathSystem s;
    s.x = x_;
    s.y = y_;
    for (;;) {
      XYPath p;
      p.vertices.push_back(x_);
      int node = source();
      bool found = false;
      while (true) {
        int chosen = -1;
        for (int a : adj_[node])
          if (arcs_[a].edge >= 0 && arcs_[a].flow > 0) {
            chosen = a;
            break;
          }
        if (chosen < 0) break;
        arcs_[chosen].flow -= 1;
        VertexId w = arcs_[chosen].to / 2;
        p.vertices.push_back(w);
        p.edges.push_back(arcs_[chosen].edge);
        if (w == y_) {
          found = true;
          break;
        }
        node = 2 * w + 1;
      }
      if (!found) break;
      s.paths.push_back(std::move(p));
    }
    return s;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    EdgeId edge;
  };
  const SurfaceMap& map_;
  VertexId x_, y_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;

  void add_arc(int from, int to, int cap, EdgeId edge) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0, edge});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0, edge});
  }
  void push(int a) {
    arcs_[a].cap -= 1;
    arcs_[a].flow += 1;
    arcs_[a ^ 1].cap += 1;
    arcs_[a ^ 1].flow -= 1;
  }
};

void check_pair(const SurfaceMap& map, VertexId x, VertexId y) {
  if (x < 0 || y < 0 || x >= map.vertex_count() || y >= map.vertex_count())
    throw Error(ErrorKind::PreconditionViolated, "vertex out of range");
  if (x == y) throw Error(ErrorKind::SameVertex, "x and y coincide");
}

}  // namespace

Connectivity local_connectivity(const SurfaceMap& map, VertexId x, VertexId y) {
  check_pair(map, x, y);
  FlowNet net(map, x, y, nullptr);
  int k = 0;
  while (net.augment_bfs()) ++k;
  Connectivity c;
  c.kappa = k;
  c.system = net.extract();
  return c;
}

PathSystem random_disjoint_paths(const SurfaceMap& map, VertexId x, VertexId y, std::mt19937& rng) {
  check_pair(map, x, y);
  FlowNet net(map, x, y, nullptr);
  while (net.augment_dfs(rng)) {
  }
  return net.extract();
}

int local_connectivity_avoiding(const SurfaceMap& map, VertexId x, VertexId y, const std::vector<char>& removed) {
  check_pair(map, x, y);
  FlowNet net(map, x, y, &removed);
  int k = 0;
  while (net.augment_bfs()) ++k;
  return k;
}

int vertex_connectivity(const SurfaceMap& map) {
  if (!map.is_simple_graph()) throw Error(ErrorKind::NotSimpleGraph, "connectivity needs a simple graph");
  const int n = map.vertex_count();
  int best = n - 1;
  for (VertexId x = 0; x < n; ++x) {
    auto nx = map.neighbors(x);
    for (VertexId y = x + 1; y < n; ++y) {
      if (std::binary_search(nx.begin(), nx.end(), y)) continue;
      FlowNet net(map, x, y, nullptr);
      int k = 0;
      while (k < best && net.augment_bfs()) ++k;
      best = std::min(best, k);
    }
  }
  return best;
}

std::vector<PathComponent> face_path_components(const SurfaceMap& map, const XYPath& p, FaceId f) {
  std::vector<PathComponent> out;
  const int n = static_cast<int>(p.vertices.size());
  for (int i = 0; i < n; ++i) {
    if (!map.on_face(p.vertices[i], f)) continue;
    bool joined = i > 0 && !out.empty() && out.back().last == i - 1 && map.edge_on_face(p.edges[i - 1], f);
    if (joined)
      out.back().last = i;
    else
      out.push_back({i, i});
  }
  return out;
}

std::vector<FaceComponents> path_face_components(const SurfaceMap& map, const XYPath& p, const FaceMask& ignore) {
  std::vector<FaceId> faces;
  for (VertexId v : p.vertices) faces.insert(faces.end(), map.faces_at(v).begin(), map.faces_at(v).end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceComponents> out;
  for (FaceId f : faces) {
    if (!ignore.empty() && ignore[f]) continue;
    out.push_back({f, face_path_components(map, p, f)});
  }
  return out;
}

int total_revisit_number(const SurfaceMap& map, const XYPath& p, const FaceMask& ignore) {
  int r = 0;
  for (const auto& fc : path_face_components(map, p, ignore)) r += static_cast<int>(fc.components.size()) - 1;
  return r;
}

int total_revisit_number(const SurfaceMap& map, const PathSystem& s, const FaceMask& ignore) {
  int r = 0;
  for (const auto& p : s.paths) r += total_revisit_number(map, p, ignore);
  return r;
}

bool is_wv_path(const SurfaceMap& map, const XYPath& p) { return total_revisit_number(map, p) == 0; }

const std::vector<PathComponent>& RevisitCounter::components(const XYPath& path, FaceId f) {
  Key k{path_hash(path), f};
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(k, face_path_components(map_, path, f)).first->second;
}

int RevisitCounter::revisits(const XYPath& path) {
  std::vector<FaceId> faces;
  for (VertexId v : path.vertices) faces.insert(faces.end(), map_.faces_at(v).begin(), map_.faces_at(v).end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  int r = 0;
  for (FaceId f : faces) {
    if (!ignore_.empty() && ignore_[f]) continue;
    r += static_cast<int>(components(path, f).size()) - 1;
  }
  return r;
}

int RevisitCounter::revisits(const PathSystem& s) {
  int r = 0;
  for (const auto& p : s.paths) r += revisits(p);
  return r;
}

}  // namespace wvmaps
