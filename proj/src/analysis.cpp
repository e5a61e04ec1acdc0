#include "wvmaps/analysis.hpp"

#include <algorithm>

#include "wvmaps/homotopy.hpp"
#include "wvmaps/nonrevisit.hpp"

namespace wvmaps {

BoundCheck make_check(std::string tag, std::string what, double lhs, std::string relation, double rhs) {
  BoundCheck c{std::move(tag), std::move(what), lhs, std::move(relation), rhs, true};
  if (c.relation == "<=")
    c.pass = lhs <= rhs + 1e-9;
  else if (c.relation == ">=")
    c.pass = lhs + 1e-9 >= rhs;
  else
    c.pass = lhs == rhs;
  return c;
}

MapSummary summarize(const SurfaceMap& map) {
  MapSummary s;
  s.vertices = map.vertex_count();
  s.edges = map.edge_count();
  s.faces = map.face_count();
  s.euler_char = map.euler_char();
  s.orientable = map.orientable();
  s.polyhedral = is_polyhedral(map);
  return s;
}

std::vector<BoundCheck> map_checks(const SurfaceMap& map) {
  std::vector<BoundCheck> out;
  const int chi = map.euler_char();
  TouchingNumber t = face_touching_number(map);
  // A single contact is not a revisit; the bound speaks about repeated contact.
  BoundCheck c = make_check("C2.2", "face touching number", t.value, "<=", 4 - 2 * chi);
  if (t.value <= 1) c.pass = true;
  out.push_back(c);
  if (chi <= 0 && map.is_simple_graph())
    out.push_back(make_check("COOK", "vertex connectivity", vertex_connectivity(map), "<=", cook_bound(chi)));
  return out;
}

BoundCheck component_bound_check(const SurfaceMap& map, const PathSystem& s, int* max_k) {
  int worst = 0;
  for (int i = 0; i < s.size(); ++i)
    for (const auto& rec : revisit_records(map, s.paths[i], i)) {
      bool all_non = std::none_of(rec.pairs.begin(), rec.pairs.end(), [](const RevisitPair& p) { return p.contractible; });
      if (all_non) worst = std::max(worst, static_cast<int>(rec.components.size()));
    }
  if (max_k) *max_k = worst;
  BoundCheck c = make_check("L2.1", "components of a face met only non-contractibly", worst, "<=", 4 - 2 * map.euler_char());
  if (worst == 0) c.pass = true;
  return c;
}

bool PairReport::ok() const {
  return violations.empty() && std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

namespace {

std::vector<XYPath> cofacial_wv_paths(const SurfaceMap& map, VertexId x, VertexId y) {
  std::vector<XYPath> out;
  if (auto e = map.edge_between(x, y)) {
    out.push_back(make_path(map, {x, y}));
    return out;
  }
  FaceId f = *common_face(map, x, y);
  const FaceWalk& w = map.face(f);
  const int L = w.length();
  int cx = w.corner_of(x), cy = w.corner_of(y);
  for (int dir : {1, -1}) {
    XYPath p;
    p.vertices.push_back(x);
    for (int k = cx; k != cy;) {
      int next = ((k + dir) % L + L) % L;
      p.edges.push_back(dir > 0 ? w.edges[k] : w.edges[next]);
      p.vertices.push_back(w.vertices[next]);
      k = next;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

PairReport analyze_pair(const SurfaceMap& map, VertexId x, VertexId y, bool exhaustive) {
  if (x == y) throw Error(ErrorKind::SameVertex, "x and y coincide");
  if (x < 0 || y < 0 || x >= map.vertex_count() || y >= map.vertex_count())
    throw Error(ErrorKind::PreconditionViolated, "vertex out of range");
  auto verdict = is_polyhedral(map);
  if (!verdict) throw Error(ErrorKind::NotPolyhedral, to_string(verdict.reason) + " (" + verdict.detail + ")");

  PairReport r;
  r.x = x;
  r.y = y;
  r.cofacial = cofacial(map, x, y);
  Connectivity con = local_connectivity(map, x, y);
  r.kappa = con.kappa;
  if (r.cofacial) {
    r.cofacial_paths = cofacial_wv_paths(map, x, y);
    r.wv_exists = true;
    r.wv_example = r.cofacial_paths.front();
    return r;
  }

  const int chi = map.euler_char();
  r.checks = map_checks(map);
  r.initial_r = total_revisit_number(map, con.system);

  try {
    HomotopyClassification hc = classify_homotopy(map, con.system, false);
    r.class_count = hc.class_count();
    for (auto& c : hc.classes) r.class_sizes.push_back(static_cast<int>(c.members.size()));
    r.checks.push_back(make_check("L3.1", "homotopy classes", r.class_count, chi >= 2 ? "==" : "<=",
                                  homotopy_class_bound(chi)));
    for (auto& c : hc.classes) {
      if (c.members.size() < 3) continue;
      auto wv = wv_paths_in_class(map, con.system, c);
      int clean = static_cast<int>(std::count_if(wv.begin(), wv.end(), [&](const XYPath& p) {
        return total_revisit_number(map, p) == 0;
      }));
      r.checks.push_back(make_check("L3.2", "W_v-paths inside a class disk", clean, ">=",
                                    static_cast<double>(c.members.size()) - 2));
      r.checks.push_back(make_check("T1.2", "W_v-path exists given a class of size >= 3",
                                    exists_wv_path(map, x, y) ? 1 : 0, "==", 1));
    }
  } catch (const Error& e) {
    r.violations.push_back(std::string("classification: ") + e.what());
  }

  PathSystem minimized = con.system;
  if (r.kappa >= 3) {
    try {
      MinimizeResult m = minimize_revisits(map, con.system);
      minimized = std::move(m.system);
      r.reroute_steps = static_cast<int>(m.steps.size());
    } catch (const Error& e) {
      r.violations.push_back(std::string("rerouting: ") + e.what());
    }
  }
  r.minimized_r = total_revisit_number(map, minimized);
  r.checks.push_back(component_bound_check(map, minimized));

  if (map.vertex_count() <= exhaustive_cutoff()) {
    r.wv_example = exists_wv_path(map, x, y);
    r.wv_exists = r.wv_example.has_value();
  }
  if (exhaustive && map.vertex_count() <= exhaustive_cutoff()) {
    try {
      long long n = 0;
      for_each_wv_path(map, x, y, [&](const XYPath&) { return ++n < PairReport::wv_count_cap; });
      r.wv_count = n;
      int w = max_disjoint_wv_paths(map, x, y);
      r.wv_disjoint = w;
      r.checks.push_back(make_check("T1.3", "disjoint W_v-paths", w, ">=", r.kappa + 4 * chi - 8));
      if (chi == 2) r.checks.push_back(make_check("T2.1", "disjoint W_v-paths", w, ">=", r.kappa));
      if (chi == 1 && !map.orientable())
        r.checks.push_back(make_check("T4.1", "disjoint W_v-paths", w, ">=", r.kappa - 2));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InstanceTooLarge) throw;
    }
  }
  return r;
}

}  // namespace wvmaps
