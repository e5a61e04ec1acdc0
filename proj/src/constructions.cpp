#include "wvmaps/constructions.hpp"

#include <algorithm>
#include <set>

namespace wvmaps {

std::string to_string(GammaKind kind) {
  switch (kind) {
    case GammaKind::Orientable: return "orientable";
    case GammaKind::NonorientableEven: return "nonorientable-even";
    case GammaKind::NonorientableOdd: return "nonorientable-odd";
  }
  return "?";
}

namespace {

// Builds a simple-graph map from per-vertex neighbour rotations.
SurfaceMap from_neighbour_rotation(int n, const std::vector<Edge>& edges,
                                   const std::vector<std::vector<VertexId>>& nbrs) {
  MapData d;
  d.vertex_count = n;
  d.edges = edges;
  d.rotation.assign(n, {});
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : nbrs[v]) {
      DartId found = -1;
      for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) {
        if (edges[e].u == v && edges[e].v == w) found = 2 * e;
        if (edges[e].v == v && edges[e].u == w) found = 2 * e + 1;
      }
      if (found < 0) throw Error(ErrorKind::MalformedRotation, "rotation names a non-neighbour");
      d.rotation[v].push_back(found);
    }
  return SurfaceMap::build(std::move(d));
}

FaceId find_face(const SurfaceMap& m, std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  for (FaceId f = 0; f < m.face_count(); ++f)
    if (m.face(f).boundary_vertices == vs) return f;
  throw Error(ErrorKind::PreconditionViolated, "construction expected a face that is not present");
}

std::string idx(int i) { return std::to_string(i); }

}  // namespace

Gamma gamma_h1(int n, int s, bool crosscaps) {
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };
  const VertexId x = 0, y = 1;
  auto a = [&](int i) { return 1 + wrap(i); };
  auto ap = [&](int i) { return n + 1 + wrap(i); };
  auto b = [&](int i) { return 2 * n + 1 + wrap(i); };
  auto bp = [&](int i) { return 3 * n + 1 + wrap(i); };

  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({x, a(i), 1});
  for (int i = 1; i <= n; ++i) edges.push_back({y, bp(i), 1});
  for (int i = 1; i <= n; ++i) {
    edges.push_back({a(i), ap(i), 1});
    edges.push_back({ap(i), a(i + 1), 1});
  }
  for (int i = 1; i <= n; ++i) {
    edges.push_back({b(i), bp(i + s), 1});
    edges.push_back({bp(i + s), b(i + 1), 1});
  }
  for (int i = 1; i <= n; ++i) edges.push_back({a(i), b(i), 1});
  for (int i = 1; i <= n; ++i) edges.push_back({ap(i), bp(i), crosscaps ? -1 : 1});

  const int nv = 4 * n + 2;
  std::vector<std::vector<VertexId>> rot(nv);
  for (int i = n; i >= 1; --i) rot[x].push_back(a(i));
  for (int i = 1; i <= n; ++i) rot[y].push_back(bp(i));
  for (int i = 1; i <= n; ++i) {
    rot[a(i)] = {x, ap(i), b(i), ap(i - 1)};
    rot[ap(i)] = {a(i), a(i + 1), bp(i)};
    rot[b(i)] = {a(i), bp(i + s), bp(i + s - 1)};
    rot[bp(i)] = {ap(i), b(i - s + 1), y, b(i - s)};
  }
  Gamma g;
  g.map = from_neighbour_rotation(nv, edges, rot);
  g.spec.labels["x"] = x;
  g.spec.labels["y"] = y;
  for (int i = 1; i <= n; ++i) {
    g.spec.labels["a" + idx(i)] = a(i);
    g.spec.labels["a" + idx(i) + "'"] = ap(i);
    g.spec.labels["b" + idx(i)] = b(i);
    g.spec.labels["b" + idx(i) + "'"] = bp(i);
  }
  return g;
}

Gamma gamma_h2(int n, int s, bool crosscaps) {
  Gamma h1 = gamma_h1(n, s, crosscaps);
  SurfaceMap m = h1.map;
  std::vector<VertexId> image(m.vertex_count());
  for (VertexId v = 0; v < m.vertex_count(); ++v) image[v] = v;
  // The vertical edges are the last 2n edges; contract from the back so the
  // remaining ids stay put.
  const EdgeId first_vertical = m.edge_count() - 2 * n;
  for (EdgeId e = m.edge_count() - 1; e >= first_vertical; --e) {
    Contraction c = contract_embedded_edge(m, e);
    for (auto& v : image) v = c.vertex_image[v];
    m = std::move(c.map);
  }
  Gamma g;
  g.map = std::move(m);
  g.spec.labels["x"] = image[h1.spec.at("x")];
  g.spec.labels["y"] = image[h1.spec.at("y")];
  for (int i = 1; i <= n; ++i) {
    g.spec.labels[idx(i)] = image[h1.spec.at("a" + idx(i))];
    g.spec.labels[idx(i) + "'"] = image[h1.spec.at("a" + idx(i) + "'")];
  }
  return g;
}

Gamma gamma_orientable(int g) {
  if (g < 2) throw Error(ErrorKind::GenusTooSmall, "orientable construction needs g >= 2");
  const int n = 2 * g;
  Gamma out = gamma_h2(n, g, false);
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };
  auto L = [&](int i) { return out.spec.at(idx(wrap(i))); };
  auto P = [&](int i) { return out.spec.at(idx(wrap(i)) + "'"); };
  for (int i = 1; i <= g; ++i) {
    FaceId f = find_face(out.map, {L(i), P(i), L(g + i), P(g + i)});
    out.map = insert_chord(out.map, f, L(i), L(g + i)).map;
  }
  for (int i = 1; i <= g; ++i) {
    FaceId f = find_face(out.map, {P(i - 1), L(i), P(g + i - 1), L(g + i)});
    out.map = insert_chord(out.map, f, P(i - 1), P(g + i - 1)).map;
  }
  out.spec.kind = GammaKind::Orientable;
  out.spec.genus = g;
  return out;
}

Gamma gamma_nonorientable_even(int gbar) {
  if (gbar < 4 || gbar % 2) throw Error(ErrorKind::BadGenus, "even construction needs even genus >= 4");
  const int n = gbar, k = gbar / 2;
  Gamma out = gamma_h2(n, k, true);
  auto wrap = [n](int i) { return ((i - 1) % n + n) % n + 1; };
  auto L = [&](int i) { return out.spec.at(idx(wrap(i))); };
  auto P = [&](int i) { return out.spec.at(idx(wrap(i)) + "'"); };
  for (int i = 1; i <= k; ++i) {
    FaceId f = find_face(out.map, {L(i), P(i), L(k + 1 + i), P(k + i)});
    out.map = insert_chord(out.map, f, L(i), L(k + i + 1)).map;
  }
  for (int i = 1; i <= k; ++i) {
    FaceId f = find_face(out.map, {P(i), L(i + 1), P(k + i), L(k + i)});
    out.map = insert_chord(out.map, f, P(i), P(k + i)).map;
  }
  out.spec.kind = GammaKind::NonorientableEven;
  out.spec.genus = gbar;
  return out;
}

GadgetResult attach_crosscap_gadget(const SurfaceMap& input, FaceId tri) {
  if (input.face(tri).length() != 3 || !input.face(tri).simple)
    throw Error(ErrorKind::PreconditionViolated, "gadget needs a triangular face");
  // Switch so the triangle is traced with flag +1 at every corner.
  std::vector<VertexId> verts = input.face(tri).boundary_vertices;
  std::vector<VertexId> flip;
  for (int k = 0; k < 3; ++k)
    if (input.face(tri).orientation[k] < 0) flip.push_back(input.face(tri).vertices[k]);
  SurfaceMap base = flip.empty() ? input : switch_vertices(input, flip);
  tri = -1;
  for (FaceId f = 0; f < base.face_count(); ++f)
    if (base.face(f).boundary_vertices == verts && base.face(f).length() == 3) tri = f;
  const FaceWalk& w = base.face(tri);
  // corners as (vertex, outgoing dart), all with flag +1
  std::vector<std::pair<VertexId, DartId>> corner;
  if (w.orientation[0] > 0) {
    for (int k = 0; k < 3; ++k) corner.emplace_back(w.vertices[k], w.darts[k]);
  } else {
    for (int k = 2; k >= 0; --k) corner.emplace_back(base.head(w.darts[k]), SurfaceMap::twin(w.darts[k]));
  }
  // The walk runs a -> c -> b.
  const VertexId a = corner[0].first, c = corner[1].first, b = corner[2].first;
  const VertexId d = base.vertex_count(), e = d + 1;

  MapData md = base.data();
  md.vertex_count += 2;
  md.rotation.resize(md.vertex_count);
  const EdgeId e0 = base.edge_count();
  // de, ad, ae, be, cd, ce, bd; ce and bd run through the new crosscap.
  enum { DE, AD, AE, BE, CD, CE, BD };
  md.edges.push_back({d, e, 1});
  md.edges.push_back({a, d, 1});
  md.edges.push_back({a, e, 1});
  md.edges.push_back({b, e, 1});
  md.edges.push_back({c, d, 1});
  md.edges.push_back({c, e, -1});
  md.edges.push_back({b, d, -1});
  auto first = [&](int k) { return 2 * (e0 + k); };
  auto second = [&](int k) { return 2 * (e0 + k) + 1; };

  // New darts enter each corner in the order met sweeping from the incoming
  // side to the outgoing side.
  auto put = [&](int k, const std::vector<DartId>& seq) {
    auto& rot = md.rotation[corner[k].first];
    auto it = std::find(rot.begin(), rot.end(), corner[k].second);
    rot.insert(it, seq.begin(), seq.end());
  };
  put(0, {first(AE), first(AD)});
  put(1, {first(CD), first(CE)});
  put(2, {first(BD), first(BE)});
  md.rotation[d] = {second(AD), first(DE), second(BD), second(CD)};
  md.rotation[e] = {second(AE), second(BE), second(CE), second(DE)};
  return {SurfaceMap::build(std::move(md)), a, b, c, d, e};
}

Gamma gamma_nonorientable_odd(int gbar) {
  if (gbar < 5 || gbar % 2 == 0) throw Error(ErrorKind::BadGenus, "odd construction needs odd genus >= 5");
  Gamma out = gamma_nonorientable_even(gbar - 1);
  FaceId tri = -1;
  for (FaceId f = 0; f < out.map.face_count() && tri < 0; ++f)
    if (out.map.face(f).length() == 3 && out.map.face(f).simple) tri = f;
  if (tri < 0) throw Error(ErrorKind::PreconditionViolated, "base map has no triangular face");
  GadgetResult gr = attach_crosscap_gadget(out.map, tri);
  out.map = std::move(gr.map);
  out.spec.kind = GammaKind::NonorientableOdd;
  out.spec.genus = gbar;
  out.spec.labels["a"] = gr.a;
  out.spec.labels["b"] = gr.b;
  out.spec.labels["c"] = gr.c;
  out.spec.labels["d"] = gr.d;
  out.spec.labels["e"] = gr.e;
  return out;
}

}  // namespace wvmaps
