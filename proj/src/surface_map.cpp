#include "wvmaps/surface_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace wvmaps {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::BadEndpoint: return "BadEndpoint";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSimpleCycle: return "NotSimpleCycle";
    case ErrorKind::VertexNotOnFace: return "VertexNotOnFace";
    case ErrorKind::LoopContraction: return "LoopContraction";
    case ErrorKind::NotSimpleGraph: return "NotSimpleGraph";
    case ErrorKind::SurfaceNotApplicable: return "SurfaceNotApplicable";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::ComponentsNotDistinct: return "ComponentsNotDistinct";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::PathsNotDisjoint: return "PathsNotDisjoint";
    case ErrorKind::NonTransitiveHomotopy: return "NonTransitiveHomotopy";
    case ErrorKind::NoBoundingPair: return "NoBoundingPair";
    case ErrorKind::RevisitNotContractible: return "RevisitNotContractible";
    case ErrorKind::SystemTooSmall: return "SystemTooSmall";
    case ErrorKind::CofacialEndpoints: return "CofacialEndpoints";
    case ErrorKind::ClassTooSmall: return "ClassTooSmall";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::RerouteFailed: return "RerouteFailed";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::NotPolyhedral: return "NotPolyhedral";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Error";
}

int FaceWalk::corner_of(VertexId v) const {
  for (int k = 0; k < length(); ++k)
    if (vertices[k] == v) return k;
  return -1;
}

SurfaceMap SurfaceMap::build(MapData data) {
  SurfaceMap m;
  const int n = data.vertex_count;
  const int ne = static_cast<int>(data.edges.size());
  if (n <= 0) throw Error(ErrorKind::MalformedRotation, "map needs at least one vertex");
  if (static_cast<int>(data.rotation.size()) != n)
    throw Error(ErrorKind::MalformedRotation, "expected one rotation per vertex");
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = data.edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
      throw Error(ErrorKind::BadEndpoint, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.sign != 1 && ed.sign != -1)
      throw Error(ErrorKind::MalformedRotation, "edge " + std::to_string(e) + " has sign other than +-1");
  }

  m.origin_.assign(2 * ne, -1);
  m.next_.assign(2 * ne, -1);
  m.prev_.assign(2 * ne, -1);
  std::vector<int> seen(2 * ne, 0);
  for (int v = 0; v < n; ++v) {
    const auto& rot = data.rotation[v];
    for (DartId d : rot) {
      if (d < 0 || d >= 2 * ne)
        throw Error(ErrorKind::MalformedRotation, "vertex " + std::to_string(v) + " lists unknown dart " + std::to_string(d));
      if (seen[d]++)
        throw Error(ErrorKind::MalformedRotation, "dart " + std::to_string(d) + " listed twice");
      const Edge& ed = data.edges[d >> 1];
      VertexId expected = (d & 1) ? ed.v : ed.u;
      if (expected != v)
        throw Error(ErrorKind::MalformedRotation, "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                                                      " but belongs to vertex " + std::to_string(expected));
      m.origin_[d] = v;
    }
    const int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i) {
      m.next_[rot[i]] = rot[(i + 1) % k];
      m.prev_[rot[i]] = rot[(i + k - 1) % k];
    }
  }
  for (int d = 0; d < 2 * ne; ++d)
    if (!seen[d]) throw Error(ErrorKind::MalformedRotation, "dart " + std::to_string(d) + " missing from rotations");

  // Connectivity.
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& ed : data.edges) {
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  std::vector<char> reached(n, 0);
  std::vector<VertexId> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) throw Error(ErrorKind::Disconnected, "underlying graph is not connected");

  m.data_ = std::move(data);
  m.trace_faces();
  m.compute_orientability();
  return m;
}

void SurfaceMap::trace_faces() {
  const int nd = dart_count();
  faces_.clear();
  state_face_.assign(2 * nd, -1);
  if (nd == 0) {
    FaceWalk w;
    w.boundary_vertices = {0};
    faces_.push_back(w);
  }
  auto sidx = [](DartId d, int o) { return 2 * d + (o > 0 ? 0 : 1); };
  for (DartId d0 = 0; d0 < nd; ++d0) {
    for (int o0 : {1, -1}) {
      if (state_face_[sidx(d0, o0)] >= 0) continue;
      FaceId id = static_cast<FaceId>(faces_.size());
      FaceWalk walk;
      DartId d = d0;
      int o = o0;
      do {
        walk.darts.push_back(d);
        walk.orientation.push_back(o);
        walk.vertices.push_back(origin_[d]);
        walk.edges.push_back(d >> 1);
        state_face_[sidx(d, o)] = id;
        // the same side of the edge, traversed backwards
        state_face_[sidx(d ^ 1, -o * sign(d >> 1))] = id;
        int o2 = o * sign(d >> 1);
        DartId t = d ^ 1;
        d = o2 > 0 ? next_[t] : prev_[t];
        o = o2;
      } while (!(d == d0 && o == o0));
      walk.boundary_vertices = walk.vertices;
      std::sort(walk.boundary_vertices.begin(), walk.boundary_vertices.end());
      walk.boundary_vertices.erase(std::unique(walk.boundary_vertices.begin(), walk.boundary_vertices.end()),
                                   walk.boundary_vertices.end());
      walk.boundary_edges = walk.edges;
      std::sort(walk.boundary_edges.begin(), walk.boundary_edges.end());
      walk.boundary_edges.erase(std::unique(walk.boundary_edges.begin(), walk.boundary_edges.end()),
                                walk.boundary_edges.end());
      walk.simple = static_cast<int>(walk.boundary_vertices.size()) == walk.length();
      faces_.push_back(std::move(walk));
    }
  }
  vertex_faces_.assign(vertex_count(), {});
  for (FaceId f = 0; f < face_count(); ++f)
    for (VertexId v : faces_[f].boundary_vertices) vertex_faces_[v].push_back(f);
}

void SurfaceMap::compute_orientability() {
  const int n = vertex_count();
  std::vector<int> lambda(n, 0);
  lambda[0] = 1;
  std::queue<VertexId> q;
  q.push(0);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (DartId d : data_.rotation[v]) {
      VertexId w = head(d);
      if (!lambda[w]) {
        lambda[w] = lambda[v] * sign(d >> 1);
        q.push(w);
      }
    }
  }
  orientable_ = true;
  for (const Edge& e : data_.edges)
    if (lambda[e.u] * lambda[e.v] * e.sign != 1) orientable_ = false;
}

bool SurfaceMap::on_face(VertexId v, FaceId f) const {
  const auto& b = faces_[f].boundary_vertices;
  return std::binary_search(b.begin(), b.end(), v);
}

bool SurfaceMap::edge_on_face(EdgeId e, FaceId f) const {
  auto fs = faces_of_edge(e);
  return fs[0] == f || fs[1] == f;
}

std::vector<VertexId> SurfaceMap::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (DartId d : data_.rotation[v]) out.push_back(head(d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<EdgeId> SurfaceMap::edge_between(VertexId u, VertexId v) const {
  std::optional<EdgeId> best;
  for (DartId d : data_.rotation[u])
    if (head(d) == v && (!best || (d >> 1) < *best)) best = d >> 1;
  return best;
}

bool SurfaceMap::is_simple_graph() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : data_.edges) {
    if (e.u == e.v) return false;
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

Cycle cycle_from_vertices(const SurfaceMap& map, const std::vector<VertexId>& vertices) {
  Cycle c;
  c.vertices = vertices;
  const int m = static_cast<int>(vertices.size());
  for (int i = 0; i < m; ++i) {
    VertexId a = vertices[i], b = vertices[(i + 1) % m];
    if (a < 0 || a >= map.vertex_count() || b < 0 || b >= map.vertex_count())
      throw Error(ErrorKind::NotSimpleCycle, "vertex out of range");
    auto e = map.edge_between(a, b);
    if (!e) throw Error(ErrorKind::NotSimpleCycle, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
    c.edges.push_back(*e);
  }
  validate_cycle(map, c);
  return c;
}

Cycle face_cycle(const SurfaceMap& map, FaceId f) {
  const FaceWalk& w = map.face(f);
  Cycle c{w.vertices, w.edges};
  validate_cycle(map, c);
  return c;
}

void validate_cycle(const SurfaceMap& map, const Cycle& c) {
  const int m = c.length();
  if (m == 0 || static_cast<int>(c.vertices.size()) != m) throw Error(ErrorKind::NotSimpleCycle, "empty or ragged cycle");
  std::vector<VertexId> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw Error(ErrorKind::NotSimpleCycle, "repeated vertex");
  std::vector<EdgeId> es = c.edges;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) throw Error(ErrorKind::NotSimpleCycle, "repeated edge");
  for (int i = 0; i < m; ++i) {
    EdgeId e = c.edges[i];
    if (e < 0 || e >= map.edge_count()) throw Error(ErrorKind::NotSimpleCycle, "edge out of range");
    VertexId a = c.vertices[i], b = c.vertices[(i + 1) % m];
    const Edge& ed = map.edge(e);
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
      throw Error(ErrorKind::NotSimpleCycle, "edge " + std::to_string(e) + " does not join consecutive cycle vertices");
  }
}

SurfaceMap switch_vertices(const SurfaceMap& map, const std::vector<VertexId>& vertices) {
  MapData d = map.data();
  std::vector<char> in(d.vertex_count, 0);
  for (VertexId v : vertices) in[v] = 1;
  for (VertexId v = 0; v < d.vertex_count; ++v)
    if (in[v]) std::reverse(d.rotation[v].begin(), d.rotation[v].end());
  for (Edge& e : d.edges)
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  return SurfaceMap::build(std::move(d));
}

SurfaceMap normalized(const SurfaceMap& map) {
  const int n = map.vertex_count();
  std::vector<int> lambda(n, 0);
  lambda[0] = 1;
  std::queue<VertexId> q;
  q.push(0);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (DartId d : map.rotation(v)) {
      VertexId w = map.head(d);
      if (!lambda[w]) {
        lambda[w] = lambda[v] * map.sign(d >> 1);
        q.push(w);
      }
    }
  }
  std::vector<VertexId> flip;
  for (VertexId v = 0; v < n; ++v)
    if (lambda[v] < 0) flip.push_back(v);
  return switch_vertices(map, flip);
}

SurfaceMap map_from_faces(int vertex_count, const std::vector<std::vector<VertexId>>& faces) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  MapData d;
  d.vertex_count = vertex_count;
  auto edge_id = [&](VertexId a, VertexId b) {
    if (a == b) throw Error(ErrorKind::MalformedRotation, "face list contains a loop");
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    EdgeId e = static_cast<EdgeId>(d.edges.size());
    d.edges.push_back({key.first, key.second, 1});
    ids.emplace(key, e);
    return e;
  };
  // corners[v] = list of (edge in, edge out)
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> corners(vertex_count);
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      VertexId a = f[(i + k - 1) % k], b = f[i], c = f[(i + 1) % k];
      if (b < 0 || b >= vertex_count) throw Error(ErrorKind::BadEndpoint, "face vertex out of range");
      corners[b].emplace_back(edge_id(a, b), edge_id(b, c));
    }
  }
  auto dart_at = [&](EdgeId e, VertexId v) { return d.edges[e].u == v ? 2 * e : 2 * e + 1; };

  d.rotation.assign(vertex_count, {});
  for (VertexId v = 0; v < vertex_count; ++v) {
    std::map<EdgeId, std::vector<EdgeId>> link;
    for (auto [a, b] : corners[v]) {
      link[a].push_back(b);
      link[b].push_back(a);
    }
    if (link.empty()) continue;
    for (auto& [e, nb] : link)
      if (nb.size() != 2) throw Error(ErrorKind::MalformedRotation, "vertex " + std::to_string(v) + " is not a disk point");
    EdgeId start = link.begin()->first;
    EdgeId prev = -1, cur = start;
    std::vector<DartId> rot;
    do {
      rot.push_back(dart_at(cur, v));
      const auto& nb = link[cur];
      EdgeId nxt = prev == -1 ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
      prev = cur;
      cur = nxt;
    } while (cur != start && rot.size() <= link.size());
    if (rot.size() != link.size()) throw Error(ErrorKind::MalformedRotation, "vertex " + std::to_string(v) + " link is not a single cycle");
    d.rotation[v] = std::move(rot);
  }

  // Traversal flags at each corner, then edge signs from consecutive corners.
  std::vector<DartId> next(2 * d.edges.size()), prev(2 * d.edges.size());
  for (const auto& rot : d.rotation) {
    const int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i) {
      next[rot[i]] = rot[(i + 1) % k];
      prev[rot[i]] = rot[(i + k - 1) % k];
    }
  }
  std::vector<int> assigned(d.edges.size(), 0);
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    std::vector<int> flag(k);
    for (int i = 0; i < k; ++i) {
      VertexId a = f[(i + k - 1) % k], b = f[i], c = f[(i + 1) % k];
      DartId din = dart_at(ids.at({std::min(a, b), std::max(a, b)}), b);
      DartId dout = dart_at(ids.at({std::min(b, c), std::max(b, c)}), b);
      flag[i] = next[din] == dout ? 1 : -1;
      if (flag[i] < 0 && prev[din] != dout) throw Error(ErrorKind::MalformedRotation, "inconsistent face corner");
    }
    for (int i = 0; i < k; ++i) {
      EdgeId e = ids.at({std::min(f[i], f[(i + 1) % k]), std::max(f[i], f[(i + 1) % k])});
      int s = flag[i] * flag[(i + 1) % k];
      if (assigned[e] && assigned[e] != s) throw Error(ErrorKind::MalformedRotation, "faces disagree on an edge sign");
      assigned[e] = s;
      d.edges[e].sign = s;
    }
  }
  SurfaceMap m = SurfaceMap::build(std::move(d));
  if (m.face_count() != static_cast<int>(faces.size()))
    throw Error(ErrorKind::MalformedRotation, "face list does not describe a closed surface");
  return normalized(m);
}

std::string canonical_form(const SurfaceMap& map) {
  std::string best;
  for (DartId d0 = 0; d0 < map.dart_count(); ++d0) {
    for (int o0 : {1, -1}) {
      std::vector<int> label(map.vertex_count(), -1), orient(map.vertex_count(), 0);
      std::vector<DartId> entry(map.vertex_count(), -1);
      std::queue<VertexId> q;
      VertexId v0 = map.origin(d0);
      label[v0] = 0;
      orient[v0] = o0;
      entry[v0] = d0;
      q.push(v0);
      int next_label = 1;
      std::ostringstream out;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        out << '[';
        DartId d = entry[v];
        do {
          VertexId w = map.head(d);
          int s = map.sign(d >> 1);
          if (label[w] < 0) {
            label[w] = next_label++;
            orient[w] = orient[v] * s;
            entry[w] = d ^ 1;
            q.push(w);
          }
          out << label[w] << (orient[v] * orient[w] * s > 0 ? '+' : '-') << ',';
          d = map.step(d, orient[v]);
        } while (d != entry[v]);
        out << ']';
      }
      std::string code = out.str();
      if (best.empty() || code < best) best = code;
    }
  }
  if (best.empty()) best = "[]";
  return std::to_string(map.vertex_count()) + ":" + std::to_string(map.edge_count()) + ":" + best;
}

}  // namespace wvmaps
