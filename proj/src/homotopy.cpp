#include "wvmaps/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace wvmaps {

namespace {

VertexId pick_representative(const SurfaceMap& map, const XYPath& p, const PathComponent& c, FaceId f,
                             Representative rep) {
  VertexId a = p.vertices[c.first], b = p.vertices[c.last];
  if (a == b) return a;
  int ca = map.face(f).corner_of(a), cb = map.face(f).corner_of(b);
  bool a_first = ca < cb;
  return (rep == Representative::FirstInWalk) == a_first ? a : b;
}

int position(const XYPath& p, VertexId v) {
  return static_cast<int>(std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
}

}  // namespace

DualCurve dual_curve(const SurfaceMap& map, const XYPath& path, FaceId face, int ci, int cj, int path_index,
                     Representative rep) {
  auto comps = face_path_components(map, path, face);
  if (ci == cj || ci < 0 || cj < 0 || ci >= static_cast<int>(comps.size()) || cj >= static_cast<int>(comps.size()))
    throw Error(ErrorKind::ComponentsNotDistinct, "dual curve needs two distinct components");
  if (!map.face(face).simple) throw Error(ErrorKind::PreconditionViolated, "dual curve needs a simple face");
  if (ci > cj) std::swap(ci, cj);

  DualCurve dc;
  dc.face = face;
  dc.path_index = path_index;
  dc.comp_i = ci;
  dc.comp_j = cj;
  dc.u = pick_representative(map, path, comps[ci], face, rep);
  dc.v = pick_representative(map, path, comps[cj], face, rep);
  ChordResult ch = insert_chord(map, face, dc.u, dc.v);
  dc.augmented = std::move(ch.map);
  dc.chord = ch.chord;
  int pu = position(path, dc.u), pv = position(path, dc.v);
  for (int k = pu; k <= pv; ++k) dc.cycle.vertices.push_back(path.vertices[k]);
  for (int k = pu; k < pv; ++k) dc.cycle.edges.push_back(path.edges[k]);
  dc.cycle.edges.push_back(dc.chord);
  dc.contractible = is_contractible(dc.augmented, dc.cycle);
  return dc;
}

std::vector<RevisitRecord> revisit_records(const SurfaceMap& map, const XYPath& path, int path_index,
                                           const FaceMask& ignore) {
  std::vector<RevisitRecord> out;
  for (auto& fc : path_face_components(map, path, ignore)) {
    if (fc.components.size() < 2) continue;
    RevisitRecord r;
    r.face = fc.face;
    r.path_index = path_index;
    r.components = fc.components;
    const int k = static_cast<int>(fc.components.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        r.pairs.push_back({i, j, dual_curve(map, path, fc.face, i, j, path_index).contractible});
    out.push_back(std::move(r));
  }
  return out;
}

int count_noncontractible_components(const SurfaceMap& map, const XYPath& path, FaceId face) {
  auto comps = face_path_components(map, path, face);
  const int k = static_cast<int>(comps.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (dual_curve(map, path, face, i, j).contractible)
        throw Error(ErrorKind::PreconditionViolated, "face " + std::to_string(face) + " has a contractible revisit");
  // With a single component there is no revisit and nothing to bound.
  if (k >= 2 && k > 4 - 2 * map.euler_char())
    throw Error(ErrorKind::BoundViolated, std::to_string(k) + " components on face " + std::to_string(face));
  return k;
}

Cycle path_pair_cycle(const SurfaceMap& map, const XYPath& a, const XYPath& b) {
  if (a.x() != b.x() || a.y() != b.y() || !internally_disjoint(a, b))
    throw Error(ErrorKind::PathsNotDisjoint, "paths must share exactly their endpoints");
  Cycle c;
  c.vertices = a.vertices;
  c.edges = a.edges;
  for (int k = b.length() - 1; k >= 0; --k) {
    c.edges.push_back(b.edges[k]);
    if (k > 0) c.vertices.push_back(b.vertices[k]);
  }
  validate_cycle(map, c);
  return c;
}

bool paths_homotopic(const SurfaceMap& map, const XYPath& a, const XYPath& b) {
  return is_contractible(map, path_pair_cycle(map, a, b));
}

int homotopy_class_bound(int chi) { return chi >= 2 ? 1 : 4 - 2 * chi; }

HomotopyClassification classify_homotopy(const SurfaceMap& map, const PathSystem& s, bool check_bound) {
  if (!internally_disjoint(s)) throw Error(ErrorKind::PathsNotDisjoint, "system is not internally disjoint");
  const int k = s.size();
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) rel[i][j] = rel[j][i] = paths_homotopic(map, s.paths[i], s.paths[j]);

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rel[i][j]) parent[find(i)] = find(j);

  HomotopyClassification out;
  std::vector<int> slot(k, -1);
  for (int i = 0; i < k; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = out.class_count();
      out.classes.emplace_back();
    }
    out.classes[slot[r]].members.push_back(i);
  }

  for (auto& cls : out.classes) {
    const auto& m = cls.members;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b)
        if (!rel[m[a]][m[b]])
          throw Error(ErrorKind::NonTransitiveHomotopy, "paths " + std::to_string(m[a]) + " and " +
                                                            std::to_string(m[b]) + " are linked only through others");
    if (m.size() < 2) continue;

    bool found = false;
    std::size_t best_size = 0;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        CutResult cut = cut_along_cycle(map, path_pair_cycle(map, s.paths[m[a]], s.paths[m[b]]));
        for (const auto& comp : cut.components) {
          if (!comp.is_disk()) continue;
          bool holds_all = true;
          for (int o : m) {
            if (o == m[a] || o == m[b]) continue;
            const auto& vs = s.paths[o].vertices;
            for (std::size_t t = 1; t + 1 < vs.size() && holds_all; ++t) holds_all = comp.contains_vertex(vs[t]);
            // a single-edge member has no interior; test it through its faces
            if (holds_all && vs.size() == 2) {
              auto fs = map.faces_of_edge(s.paths[o].edges[0]);
              holds_all = comp.contains_face(fs[0]) && comp.contains_face(fs[1]);
            }
          }
          if (!holds_all) continue;
          std::size_t size = comp.interior_vertices.size() * 4096 + comp.interior_faces.size();
          if (!found || size < best_size) {
            found = true;
            best_size = size;
            cls.bound_a = m[a];
            cls.bound_b = m[b];
            cls.disk_vertices = comp.interior_vertices;
            cls.disk_faces = comp.interior_faces;
          }
        }
      }
    if (!found) throw Error(ErrorKind::NoBoundingPair, "no member pair bounds a disk holding the class");
  }

  if (check_bound && out.class_count() > homotopy_class_bound(map.euler_char()))
    throw Error(ErrorKind::BoundViolated, std::to_string(out.class_count()) + " homotopy classes, bound " +
                                              std::to_string(homotopy_class_bound(map.euler_char())));
  return out;
}

}  // namespace wvmaps
