// Cut, chord insertion, edge deletion and contraction.
#include <algorithm>
#include <queue>

#include "wvmaps/surface_map.hpp"

namespace wvmaps {

bool CutComponent::contains_vertex(VertexId original) const {
  return std::binary_search(interior_vertices.begin(), interior_vertices.end(), original);
}

bool CutComponent::contains_face(FaceId original) const {
  return std::binary_search(interior_faces.begin(), interior_faces.end(), original);
}

CutResult cut_along_cycle(const SurfaceMap& map, const Cycle& cycle) {
  validate_cycle(map, cycle);
  const int n = map.vertex_count();
  const int ne = map.edge_count();
  const int m = cycle.length();
  const auto& c = cycle.vertices;

  // Dart of cycle edge i at c_i (out) and of edge i-1 at c_i (in).
  std::vector<DartId> out_l(m), in_l(m), out_r(m), in_r(m);
  for (int i = 0; i < m; ++i) {
    EdgeId e = cycle.edges[i];
    EdgeId ep = cycle.edges[(i + m - 1) % m];
    if (m == 1) {
      out_l[i] = 2 * e;
      in_l[i] = 2 * e + 1;
    } else {
      out_l[i] = map.dart_at(e, c[i]);
      in_l[i] = map.dart_at(ep, c[i]);
    }
    out_r[i] = 2 * (ne + i) + (out_l[i] & 1);
    in_r[i] = 2 * (ne + (i + m - 1) % m) + (in_l[i] & 1);
  }
  std::vector<int> orient(m + 1);
  orient[0] = 1;
  for (int i = 0; i < m; ++i) orient[i + 1] = orient[i] * map.sign(cycle.edges[i]);
  const bool one_sided = orient[m] != orient[0];
  if (one_sided) std::swap(in_l[0], in_r[0]);

  MapData d;
  d.vertex_count = n + m;
  d.rotation.assign(n + m, {});
  for (VertexId v = 0; v < n; ++v) d.rotation[v] = map.rotation(v);
  std::vector<char> on_cycle(n, 0);
  for (VertexId v : c) on_cycle[v] = 1;

  for (int i = 0; i < m; ++i) {
    const int o = orient[i];
    DartId out0 = map.dart_at(cycle.edges[i], c[i]);
    DartId in0 = map.dart_at(cycle.edges[(i + m - 1) % m], c[i]);
    if (m == 1) {
      out0 = 2 * cycle.edges[0];
      in0 = out0 + 1;
    }
    std::vector<DartId> left, right;
    for (DartId x = map.step(out0, o); x != in0; x = map.step(x, o)) left.push_back(x);
    for (DartId x = map.step(in0, o); x != out0; x = map.step(x, o)) right.push_back(x);
    std::vector<DartId> lrot, rrot;
    if (o > 0) {
      lrot.push_back(out_l[i]);
      lrot.insert(lrot.end(), left.begin(), left.end());
      lrot.push_back(in_l[i]);
      rrot.push_back(in_r[i]);
      rrot.insert(rrot.end(), right.begin(), right.end());
      rrot.push_back(out_r[i]);
    } else {
      lrot.push_back(in_l[i]);
      lrot.insert(lrot.end(), left.rbegin(), left.rend());
      lrot.push_back(out_l[i]);
      rrot.push_back(out_r[i]);
      rrot.insert(rrot.end(), right.rbegin(), right.rend());
      rrot.push_back(in_r[i]);
    }
    d.rotation[c[i]] = std::move(lrot);
    d.rotation[n + i] = std::move(rrot);
  }

  // Endpoints follow from rotation membership.
  std::vector<VertexId> org(2 * (ne + m), -1);
  for (VertexId v = 0; v < n + m; ++v)
    for (DartId x : d.rotation[v]) org[x] = v;
  d.edges.resize(ne + m);
  for (EdgeId e = 0; e < ne + m; ++e) {
    int s = e < ne ? map.sign(e) : map.sign(cycle.edges[e - ne]);
    d.edges[e] = {org[2 * e], org[2 * e + 1], s};
  }
  std::vector<EdgeId> source_edge(ne + m);
  for (EdgeId e = 0; e < ne; ++e) source_edge[e] = e;
  for (int i = 0; i < m; ++i) source_edge[ne + i] = cycle.edges[i];

  // Split into connected components.
  std::vector<int> comp(n + m, -1);
  int ncomp = 0;
  for (VertexId s = 0; s < n + m; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (DartId x : d.rotation[v]) {
        VertexId w = org[x ^ 1];
        if (comp[w] < 0) {
          comp[w] = ncomp;
          q.push(w);
        }
      }
    }
    ++ncomp;
  }

  CutResult result;
  result.one_sided = one_sided;
  result.separating = ncomp == 2;
  for (int k = 0; k < ncomp; ++k) {
    CutComponent cc;
    std::vector<VertexId> vmap(n + m, -1);
    std::vector<EdgeId> emap(ne + m, -1);
    MapData cd;
    for (VertexId v = 0; v < n + m; ++v)
      if (comp[v] == k) {
        vmap[v] = cd.vertex_count++;
        cc.original_vertex.push_back(v < n ? v : c[v - n]);
        cc.on_boundary.push_back(v >= n || on_cycle[v]);
        if (v < n && !on_cycle[v]) cc.interior_vertices.push_back(v);
      }
    std::vector<DartId> original_dart;
    for (EdgeId e = 0; e < ne + m; ++e)
      if (comp[d.edges[e].u] == k) {
        emap[e] = static_cast<EdgeId>(cd.edges.size());
        cd.edges.push_back({vmap[d.edges[e].u], vmap[d.edges[e].v], d.edges[e].sign});
        cc.original_edge.push_back(source_edge[e]);
        // copies keep the endpoint order of their source edge
        original_dart.push_back(2 * source_edge[e]);
        original_dart.push_back(2 * source_edge[e] + 1);
      }
    cd.rotation.assign(cd.vertex_count, {});
    for (VertexId v = 0; v < n + m; ++v)
      if (comp[v] == k)
        for (DartId x : d.rotation[v]) cd.rotation[vmap[v]].push_back(2 * emap[x >> 1] + (x & 1));
    cc.map = SurfaceMap::build(std::move(cd));

    // Boundary circles pass through the corner between the in- and out-darts
    // of every cycle-vertex copy.
    std::vector<char> boundary_face(cc.map.face_count(), 0);
    for (int i = 0; i < m; ++i) {
      if (comp[c[i]] == k) {
        DartId x = 2 * emap[out_l[i] >> 1] + (out_l[i] & 1);
        boundary_face[cc.map.face_of_state(x, orient[i])] = 1;
      }
      if (comp[n + i] == k) {
        DartId x = 2 * emap[in_r[i] >> 1] + (in_r[i] & 1);
        boundary_face[cc.map.face_of_state(x, orient[i])] = 1;
      }
    }
    cc.boundary_count = static_cast<int>(std::count(boundary_face.begin(), boundary_face.end(), 1));
    cc.euler_char = cc.map.euler_char() - cc.boundary_count;
    for (FaceId f = 0; f < cc.map.face_count(); ++f) {
      if (boundary_face[f]) {
        cc.original_face.push_back(-1);
        continue;
      }
      const FaceWalk& w = cc.map.face(f);
      DartId od = original_dart[w.darts[0]];
      FaceId of = map.face_of_state(od, w.orientation[0]);
      cc.original_face.push_back(of);
      cc.interior_faces.push_back(of);
    }
    std::sort(cc.interior_faces.begin(), cc.interior_faces.end());
    cc.interior_faces.erase(std::unique(cc.interior_faces.begin(), cc.interior_faces.end()), cc.interior_faces.end());
    result.components.push_back(std::move(cc));
  }
  int total_boundary = 0;
  for (const auto& cc : result.components) total_boundary += cc.boundary_count;
  if (total_boundary != (one_sided ? 1 : 2))
    throw Error(ErrorKind::NotSimpleCycle, "boundary bookkeeping failed; cycle is not a simple closed curve");
  return result;
}

bool is_contractible(const SurfaceMap& map, const Cycle& cycle) {
  CutResult r = cut_along_cycle(map, cycle);
  if (!r.separating) return false;
  for (const auto& cc : r.components)
    if (cc.is_disk()) return true;
  return false;
}

namespace {

// Position in a rotation list where a new dart enters corner k of face f.
void insert_at_corner(const SurfaceMap& map, MapData& d, FaceId f, int k, DartId fresh) {
  const FaceWalk& w = map.face(f);
  DartId dk = w.darts[k];
  VertexId v = map.origin(dk);
  auto& rot = d.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), dk);
  if (w.orientation[k] > 0)
    rot.insert(it, fresh);
  else
    rot.insert(it + 1, fresh);
}

}  // namespace

ChordResult insert_chord_at(const SurfaceMap& map, FaceId f, int u_corner, int v_corner) {
  if (f < 0 || f >= map.face_count()) throw Error(ErrorKind::VertexNotOnFace, "no such face");
  const FaceWalk& w = map.face(f);
  if (u_corner < 0 || u_corner >= w.length() || v_corner < 0 || v_corner >= w.length())
    throw Error(ErrorKind::VertexNotOnFace, "corner outside face walk");
  VertexId u = w.vertices[u_corner], v = w.vertices[v_corner];
  if (u == v) throw Error(ErrorKind::VertexNotOnFace, "chord endpoints coincide");
  MapData d = map.data();
  EdgeId e = map.edge_count();
  d.edges.push_back({u, v, w.orientation[u_corner] * w.orientation[v_corner]});
  insert_at_corner(map, d, f, u_corner, 2 * e);
  insert_at_corner(map, d, f, v_corner, 2 * e + 1);
  return {SurfaceMap::build(std::move(d)), e};
}

ChordResult insert_chord(const SurfaceMap& map, FaceId f, VertexId u, VertexId v) {
  if (f < 0 || f >= map.face_count()) throw Error(ErrorKind::VertexNotOnFace, "no such face");
  int cu = map.face(f).corner_of(u), cv = map.face(f).corner_of(v);
  if (cu < 0 || cv < 0) throw Error(ErrorKind::VertexNotOnFace, "chord endpoint not on face " + std::to_string(f));
  return insert_chord_at(map, f, cu, cv);
}

SurfaceMap delete_edge(const SurfaceMap& map, EdgeId e) {
  MapData d = map.data();
  d.edges.erase(d.edges.begin() + e);
  for (auto& rot : d.rotation) {
    std::vector<DartId> out;
    for (DartId x : rot) {
      if ((x >> 1) == e) continue;
      out.push_back((x >> 1) > e ? x - 2 : x);
    }
    rot = std::move(out);
  }
  return SurfaceMap::build(std::move(d));
}

Contraction contract_embedded_edge(const SurfaceMap& input, EdgeId e) {
  const Edge& ed0 = input.edge(e);
  if (ed0.u == ed0.v) throw Error(ErrorKind::LoopContraction, "edge " + std::to_string(e) + " is a loop");
  const VertexId u = ed0.u, v = ed0.v;
  SurfaceMap map = ed0.sign < 0 ? switch_vertices(input, {v}) : input;

  const auto& ru = map.rotation(u);
  const auto& rv = map.rotation(v);
  auto after = [](const std::vector<DartId>& rot, DartId a) {
    std::vector<DartId> out;
    auto it = std::find(rot.begin(), rot.end(), a);
    const std::size_t k = rot.size();
    std::size_t pos = static_cast<std::size_t>(it - rot.begin());
    for (std::size_t i = 1; i < k; ++i) out.push_back(rot[(pos + i) % k]);
    return out;
  };
  std::vector<DartId> merged = after(ru, 2 * e);
  std::vector<DartId> tail = after(rv, 2 * e + 1);
  merged.insert(merged.end(), tail.begin(), tail.end());

  Contraction c;
  const int n = map.vertex_count();
  c.vertex_image.resize(n);
  for (VertexId w = 0; w < n; ++w) {
    VertexId t = w == v ? u : w;
    c.vertex_image[w] = t > v ? t - 1 : t;
  }
  c.edge_image.resize(map.edge_count());
  for (EdgeId f = 0; f < map.edge_count(); ++f) c.edge_image[f] = f == e ? -1 : (f > e ? f - 1 : f);

  MapData d;
  d.vertex_count = n - 1;
  for (EdgeId f = 0; f < map.edge_count(); ++f) {
    if (f == e) continue;
    const Edge& x = map.edge(f);
    d.edges.push_back({c.vertex_image[x.u], c.vertex_image[x.v], x.sign});
  }
  auto remap = [&](DartId x) { return 2 * c.edge_image[x >> 1] + (x & 1); };
  d.rotation.assign(n - 1, {});
  for (VertexId w = 0; w < n; ++w) {
    if (w == v) continue;
    const auto& src = w == u ? merged : map.rotation(w);
    for (DartId x : src) d.rotation[c.vertex_image[w]].push_back(remap(x));
  }
  c.map = SurfaceMap::build(std::move(d));
  return c;
}

}  // namespace wvmaps
