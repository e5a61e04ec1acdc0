#include "wvmaps/nonrevisit.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>

#include "wvmaps/polyhedral.hpp"

namespace wvmaps {

std::string to_string(RerouteCase c) {
  return c == RerouteCase::EndpointsOutsideDisk ? "endpoints-outside-disk" : "endpoints-inside-disk";
}

namespace {

// A face-boundary arc from the end of one component to the start of the other.
struct GapArc {
  std::vector<VertexId> vertices;  // p ... q
  std::vector<EdgeId> edges;
};

struct Plan {
  FaceId face = -1;
  int comp_i = 0, comp_j = 0;
  GapArc arc;
  int pos_p = 0, pos_q = 0;  // positions of the arc ends on the path
  RerouteCase which = RerouteCase::EndpointsOutsideDisk;
  std::vector<VertexId> free_side;  // interior vertices of the side the arc runs through
};

std::vector<GapArc> gap_arcs(const SurfaceMap& map, const XYPath& p, FaceId f, const PathComponent& a,
                             const PathComponent& b) {
  const FaceWalk& w = map.face(f);
  const int L = w.length();
  std::vector<int> label(L, 0);
  for (int k = 0; k < L; ++k) {
    auto it = std::find(p.vertices.begin(), p.vertices.end(), w.vertices[k]);
    if (it == p.vertices.end()) continue;
    int pos = static_cast<int>(it - p.vertices.begin());
    if (pos >= a.first && pos <= a.last) label[k] = 1;
    if (pos >= b.first && pos <= b.last) label[k] = 2;
  }
  std::vector<GapArc> arcs;
  for (int k = 0; k < L; ++k) {
    if (label[k] == 0 || label[(k + 1) % L] == label[k]) continue;
    GapArc g;
    g.vertices.push_back(w.vertices[k]);
    int j = k;
    do {
      g.edges.push_back(w.edges[j]);
      j = (j + 1) % L;
      g.vertices.push_back(w.vertices[j]);
    } while (label[j] == 0);
    if (label[j] == label[k]) throw Error(ErrorKind::RerouteFailed, "component is not an arc of the face");
    if (label[k] == 2) {
      std::reverse(g.vertices.begin(), g.vertices.end());
      std::reverse(g.edges.begin(), g.edges.end());
    }
    arcs.push_back(std::move(g));
  }
  if (arcs.size() != 2) throw Error(ErrorKind::RerouteFailed, "expected two gap arcs");
  return arcs;
}

int position(const XYPath& p, VertexId v) {
  return static_cast<int>(std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
}

// Analyses one revisit; nullopt when its dual curve is not contractible.
std::optional<Plan> plan_revisit(const SurfaceMap& map, const PathSystem& s, int i, FaceId f, int ca, int cb) {
  const XYPath& P = s.paths[i];
  auto comps = face_path_components(map, P, f);
  if (ca > cb) std::swap(ca, cb);
  // Any internal vertex of another path marks the side holding x and y.
  VertexId witness = -1;
  for (int j = 0; j < s.size() && witness < 0; ++j)
    if (j != i && s.paths[j].vertices.size() > 2) witness = s.paths[j].vertices[1];
  if (witness < 0) throw Error(ErrorKind::RerouteFailed, "no other path has an internal vertex");

  for (GapArc& g : gap_arcs(map, P, f, comps[ca], comps[cb])) {
    VertexId p = g.vertices.front(), q = g.vertices.back();
    ChordResult ch = insert_chord(map, f, p, q);
    Cycle c;
    int pp = position(P, p), pq = position(P, q);
    for (int k = pp; k <= pq; ++k) c.vertices.push_back(P.vertices[k]);
    for (int k = pp; k < pq; ++k) c.edges.push_back(P.edges[k]);
    c.edges.push_back(ch.chord);
    CutResult cut = cut_along_cycle(ch.map, c);
    if (!cut.separating) return std::nullopt;
    if (!cut.components[0].is_disk() && !cut.components[1].is_disk()) return std::nullopt;

    int end_side = cut.components[0].contains_vertex(witness) ? 0 : 1;
    for (int j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      const auto& vs = s.paths[j].vertices;
      for (std::size_t t = 1; t + 1 < vs.size(); ++t)
        if (!cut.components[end_side].contains_vertex(vs[t]))
          throw Error(ErrorKind::RerouteFailed, "other paths lie on both sides of the dual curve");
    }
    auto fs = ch.map.faces_of_edge(ch.chord);
    FaceId arc_face = ch.map.edge_on_face(g.edges.front(), fs[0]) ? fs[0] : fs[1];
    int arc_side = cut.components[0].contains_face(arc_face) ? 0 : 1;
    if (arc_side == end_side) continue;

    Plan plan;
    plan.face = f;
    plan.comp_i = ca;
    plan.comp_j = cb;
    plan.pos_p = pp;
    plan.pos_q = pq;
    plan.which = cut.components[arc_side].is_disk() ? RerouteCase::EndpointsOutsideDisk
                                                    : RerouteCase::EndpointsInsideDisk;
    plan.free_side = cut.components[arc_side].interior_vertices;
    plan.arc = std::move(g);
    return plan;
  }
  throw Error(ErrorKind::RerouteFailed, "neither gap arc lies away from the endpoints");
}

bool strict_subset(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_system(const SurfaceMap& map, const PathSystem& s) {
  if (s.size() < 3) throw Error(ErrorKind::SystemTooSmall, "rerouting needs at least three paths");
  if (cofacial(map, s.x, s.y)) throw Error(ErrorKind::CofacialEndpoints, "x and y share a face");
  if (!internally_disjoint(s)) throw Error(ErrorKind::PathsNotDisjoint, "system is not internally disjoint");
}

std::vector<int> face_counts(const SurfaceMap& map, const XYPath& p) {
  std::vector<int> c(map.face_count(), 0);
  for (auto& fc : path_face_components(map, p)) c[fc.face] = static_cast<int>(fc.components.size());
  return c;
}

}  // namespace

RerouteResult reroute_contractible(const SurfaceMap& map, const PathSystem& s, int i, FaceId f, int ca, int cb) {
  check_system(map, s);
  if (i < 0 || i >= s.size()) throw Error(ErrorKind::PreconditionViolated, "path index out of range");
  const XYPath& P = s.paths[i];
  auto comps = face_path_components(map, P, f);
  if (ca == cb || ca < 0 || cb < 0 || ca >= static_cast<int>(comps.size()) || cb >= static_cast<int>(comps.size()))
    throw Error(ErrorKind::RevisitNotContractible, "no such revisit");
  auto plan = plan_revisit(map, s, i, f, ca, cb);
  if (!plan) throw Error(ErrorKind::RevisitNotContractible, "dual curve is not contractible");

  // Descend to a revisit whose free side holds no smaller one.
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (auto& fc : path_face_components(map, P)) {
      const int k = static_cast<int>(fc.components.size());
      for (int a = 0; a < k && !again; ++a)
        for (int b = a + 1; b < k && !again; ++b) {
          if (fc.face == plan->face && a == plan->comp_i && b == plan->comp_j) continue;
          auto other = plan_revisit(map, s, i, fc.face, a, b);
          if (other && strict_subset(other->free_side, plan->free_side)) {
            plan = std::move(other);
            moved = again = true;
          }
        }
      if (again) break;
    }
  }

  XYPath np;
  np.vertices.assign(P.vertices.begin(), P.vertices.begin() + plan->pos_p + 1);
  np.edges.assign(P.edges.begin(), P.edges.begin() + plan->pos_p);
  np.vertices.insert(np.vertices.end(), plan->arc.vertices.begin() + 1, plan->arc.vertices.end() - 1);
  np.edges.insert(np.edges.end(), plan->arc.edges.begin(), plan->arc.edges.end());
  np.vertices.insert(np.vertices.end(), P.vertices.begin() + plan->pos_q, P.vertices.end());
  np.edges.insert(np.edges.end(), P.edges.begin() + plan->pos_q, P.edges.end());

  try {
    validate_path(map, np);
  } catch (const Error& e) {
    throw Error(ErrorKind::RerouteFailed, std::string("rerouted path invalid: ") + e.what());
  }
  RerouteResult out;
  out.system = s;
  out.system.paths[i] = np;
  if (!internally_disjoint(out.system)) throw Error(ErrorKind::RerouteFailed, "rerouted path meets another path");

  RerouteStep& st = out.step;
  st.path_index = i;
  st.face = plan->face;
  st.comp_i = plan->comp_i;
  st.comp_j = plan->comp_j;
  st.which = plan->which;
  st.moved_inward = moved;
  st.arc = plan->arc.vertices;
  st.old_r = total_revisit_number(map, P);
  st.new_r = total_revisit_number(map, np);
  if (st.new_r >= st.old_r)
    throw Error(ErrorKind::RerouteFailed,
                "revisit number did not drop (" + std::to_string(st.old_r) + " -> " + std::to_string(st.new_r) + ")");
  auto before = face_counts(map, P), after = face_counts(map, np);
  for (FaceId g = 0; g < map.face_count(); ++g)
    if (g != plan->face && after[g] > std::max(before[g], 1))
      throw Error(ErrorKind::RerouteFailed, "substituted arc revisits face " + std::to_string(g));
  return out;
}

MinimizeResult minimize_revisits(const SurfaceMap& map, const PathSystem& system, const MinimizeOptions& opts) {
  MinimizeResult res;
  res.system = system;
  struct Candidate {
    int path;
    FaceId face;
    int a, b;
  };
  for (;;) {
    std::vector<Candidate> cands;
    for (int i = 0; i < res.system.size(); ++i) {
      if (!opts.active.empty() && !opts.active[i]) continue;
      for (auto& rec : revisit_records(map, res.system.paths[i], i))
        for (auto& pr : rec.pairs)
          if (pr.contractible) cands.push_back({i, rec.face, pr.comp_i, pr.comp_j});
    }
    if (cands.empty()) break;
    std::size_t pick = 0;
    if (opts.rng) pick = std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(*opts.rng);
    const Candidate& c = cands[pick];
    RerouteResult r = reroute_contractible(map, res.system, c.path, c.face, c.a, c.b);
    if (!opts.confine_to.empty()) {
      const auto& vs = r.system.paths[c.path].vertices;
      for (std::size_t t = 1; t + 1 < vs.size(); ++t)
        if (!std::binary_search(opts.confine_to.begin(), opts.confine_to.end(), vs[t]))
          throw Error(ErrorKind::RerouteFailed, "rerouted path left its disk at vertex " + std::to_string(vs[t]));
    }
    res.system = std::move(r.system);
    res.steps.push_back(std::move(r.step));
  }
  return res;
}

std::vector<XYPath> wv_paths_in_class(const SurfaceMap& map, const PathSystem& system, const HomotopyClass& cls) {
  if (cls.members.size() < 3) throw Error(ErrorKind::ClassTooSmall, "class needs at least three paths");
  // The two bounding paths stay put; interior members are rerouted inside the
  // disk they span, which keeps the disk fixed while revisits are removed.
  MinimizeOptions opts;
  opts.active.assign(system.size(), 0);
  for (int m : cls.members)
    if (m != cls.bound_a && m != cls.bound_b) opts.active[m] = 1;
  opts.confine_to = cls.disk_vertices;
  MinimizeResult r = minimize_revisits(map, system, opts);
  std::vector<XYPath> out;
  for (int m : cls.members)
    if (opts.active[m]) out.push_back(r.system.paths[m]);
  return out;
}

void for_each_wv_path(const SurfaceMap& map, VertexId x, VertexId y, const std::function<bool(const XYPath&)>& visit) {
  if (x == y) throw Error(ErrorKind::SameVertex, "x and y coincide");
  std::vector<int> count(map.face_count(), 0);
  std::vector<char> used(map.vertex_count(), 0);
  XYPath path;
  path.vertices.push_back(x);
  used[x] = 1;
  for (FaceId f : map.faces_at(x)) count[f] = 1;
  bool stop = false;
  std::vector<FaceId> opened;

  std::function<void(VertexId)> dfs = [&](VertexId u) {
    for (DartId d : map.rotation(u)) {
      if (stop) return;
      VertexId v = map.head(d);
      EdgeId e = SurfaceMap::edge_of(d);
      if (used[v]) continue;
      // A face already met may only be re-entered along its own boundary from
      // the vertex we stand on; anything else starts a second component.
      bool ok = true;
      for (FaceId f : map.faces_at(v))
        if (count[f] > 0 && !(map.on_face(u, f) && map.edge_on_face(e, f))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::size_t mark = opened.size();
      for (FaceId f : map.faces_at(v))
        if (count[f] == 0) {
          count[f] = 1;
          opened.push_back(f);
        }
      path.vertices.push_back(v);
      path.edges.push_back(e);
      if (v == y) {
        if (!visit(path)) stop = true;
      } else {
        used[v] = 1;
        dfs(v);
        used[v] = 0;
      }
      path.vertices.pop_back();
      path.edges.pop_back();
      while (opened.size() > mark) {
        count[opened.back()] = 0;
        opened.pop_back();
      }
    }
  };
  dfs(x);
}

std::optional<XYPath> exists_wv_path(const SurfaceMap& map, VertexId x, VertexId y) {
  std::optional<XYPath> found;
  for_each_wv_path(map, x, y, [&](const XYPath& p) {
    found = p;
    return false;
  });
  return found;
}

int exhaustive_cutoff() {
  if (const char* s = std::getenv("WVMAPS_CUTOFF")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return static_cast<int>(v);
  }
  return 40;
}

int max_disjoint_wv_paths(const SurfaceMap& map, VertexId x, VertexId y) {
  const int n = map.vertex_count();
  if (n > exhaustive_cutoff() || n > 64)
    throw Error(ErrorKind::InstanceTooLarge, std::to_string(n) + " vertices exceeds the exhaustive cutoff");
  const int kappa = local_connectivity(map, x, y).kappa;

  int direct = 0;  // single-edge paths have empty interiors
  std::vector<std::uint64_t> masks;
  for_each_wv_path(map, x, y, [&](const XYPath& p) {
    std::uint64_t m = 0;
    for (std::size_t t = 1; t + 1 < p.vertices.size(); ++t) m |= std::uint64_t{1} << p.vertices[t];
    if (m == 0)
      ++direct;
    else
      masks.push_back(m);
    return true;
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });

  const int target = kappa - direct;
  int best = 0;
  std::uint64_t all = 0;
  for (auto m : masks) all |= m;
  std::function<void(std::size_t, std::uint64_t, int)> pack = [&](std::size_t from, std::uint64_t used, int count) {
    best = std::max(best, count);
    if (best >= target) return;
    for (std::size_t j = from; j < masks.size(); ++j) {
      if (masks[j] & used) continue;
      int free_left = std::popcount(all & ~used);
      if (count + free_left / std::popcount(masks[j]) <= best) return;
      pack(j + 1, used | masks[j], count + 1);
      if (best >= target) return;
    }
  };
  pack(0, 0, 0);
  return direct + best;
}

}  // namespace wvmaps
