#include "wvmaps/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "wvmaps/analysis.hpp"
#include "wvmaps/homotopy.hpp"
#include "wvmaps/nonrevisit.hpp"
#include "wvmaps/oracles.hpp"
#include "wvmaps/polyhedral.hpp"

namespace wvmaps {

bool VerifyReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

namespace {

struct Partial {
  std::map<std::string, long> instances;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  void count(const std::string& tag, long n = 1) { instances[tag] += n; }
  void fail(const std::string& fixture, const std::string& tag, const std::string& detail) {
    violations.push_back({fixture, tag, detail});
  }
  // Records a check and its outcome.
  void check(const std::string& fixture, const BoundCheck& c, const std::string& where) {
    count(c.tag);
    if (!c.pass)
      fail(fixture, c.tag,
           where + c.what + ": " + fmt(c.lhs) + " " + c.relation + " " + fmt(c.rhs) + " fails");
  }
  static std::string fmt(double v) {
    if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
    std::string s = std::to_string(v);
    return s.substr(0, s.find('.') + 3);
  }
};

std::vector<Partial> run_parallel(int jobs, std::size_t n, const std::function<void(std::size_t, Partial&)>& fn) {
  std::vector<Partial> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i, out[i]);
      } catch (const std::exception& e) {
        out[i].fail("#" + std::to_string(i), "ERROR", e.what());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

CriterionResult merge(int id, std::string title, std::vector<Partial> parts) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  for (auto& p : parts) {
    for (auto& [k, v] : p.instances) r.instances[k] += v;
    r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
    r.notes.insert(r.notes.end(), p.notes.begin(), p.notes.end());
  }
  std::sort(r.violations.begin(), r.violations.end());
  std::sort(r.notes.begin(), r.notes.end());
  r.pass = r.violations.empty();
  return r;
}

unsigned name_seed(unsigned seed, const std::string& name) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : name) h = (h ^ c) * 16777619u;
  return seed ^ h;
}

std::string pair_name(VertexId x, VertexId y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ") "; }

bool surface_consistent(const Fixture& fx) {
  const auto& m = fx.map;
  switch (fx.surface) {
    case SurfaceTag::Sphere: return m.euler_char() == 2;
    case SurfaceTag::ProjectivePlane: return m.euler_char() == 1 && !m.orientable();
    case SurfaceTag::Torus: return m.euler_char() == 0 && m.orientable();
    case SurfaceTag::Other: return true;
  }
  return true;
}

// Declared-polyhedral fixtures that really are polyhedral; complaints otherwise.
bool admit(const Fixture& fx, Partial& p) {
  if (!surface_consistent(fx)) p.fail(fx.name, "SURFACE", "surface tag disagrees with chi/orientability");
  auto v = is_polyhedral(fx.map);
  if (!v) {
    p.fail(fx.name, "POLY", "declared polyhedral but " + to_string(v.reason));
    return false;
  }
  return true;
}

template <class F>
void for_noncofacial_pairs(const SurfaceMap& m, F fn) {
  for (VertexId x = 0; x < m.vertex_count(); ++x)
    for (VertexId y = x + 1; y < m.vertex_count(); ++y)
      if (!cofacial(m, x, y)) fn(x, y);
}

std::vector<const Fixture*> select(const std::vector<Fixture>& corpus, const std::function<bool(const Fixture&)>& keep) {
  std::vector<const Fixture*> out;
  for (const auto& f : corpus)
    if (keep(f)) out.push_back(&f);
  return out;
}

// ---- 1: sphere packing --------------------------------------------------------

CriterionResult sphere_packing(const std::vector<Fixture>& corpus, const VerifyOptions& o) {
  auto fs = select(corpus, [](const Fixture& f) { return f.surface == SurfaceTag::Sphere && f.expect_polyhedral; });
  auto parts = run_parallel(o.jobs, fs.size(), [&](std::size_t i, Partial& p) {
    const Fixture& fx = *fs[i];
    if (!admit(fx, p)) return;
    for_noncofacial_pairs(fx.map, [&](VertexId x, VertexId y) {
      int kappa = local_connectivity(fx.map, x, y).kappa;
      int w = max_disjoint_wv_paths(fx.map, x, y);
      p.check(fx.name, make_check("T2.1", "disjoint W_v-paths vs kappa", w, ">=", kappa), pair_name(x, y));
    });
  });
  return merge(1, "sphere: disjoint W_v-paths >= kappa", std::move(parts));
}

// ---- 2 and 3: the constructions --------------------------------------------

struct GammaCase {
  std::string name;
  std::function<Gamma()> build;
  bool orientable;
  int chi;
  std::optional<int> kappa;
};

void certify_gamma(const GammaCase& gc, Partial& p) {
  Gamma g = gc.build();
  const auto& m = g.map;
  const std::string tag = gc.orientable ? "GAMMA_O" : "GAMMA_N";
  auto need = [&](bool ok, const std::string& what) {
    p.count(tag);
    if (!ok) p.fail(gc.name, tag, what);
  };
  VertexId x = g.spec.at("x"), y = g.spec.at("y");
  if (gc.orientable)
    need(m.vertex_count() == 4 * g.spec.genus + 2, "vertex count " + std::to_string(m.vertex_count()) + " != 4g+2");
  need(m.orientable() == gc.orientable, std::string("expected ") + (gc.orientable ? "orientable" : "non-orientable"));
  need(m.euler_char() == gc.chi, "chi " + std::to_string(m.euler_char()) + " != " + std::to_string(gc.chi));
  auto v = is_polyhedral(m);
  need(v.polyhedral, "not polyhedral: " + to_string(v.reason) + " (" + v.detail + ")");
  int kappa = local_connectivity(m, x, y).kappa;
  if (gc.kappa)
    need(kappa == *gc.kappa, "kappa(x,y) " + std::to_string(kappa) + " != " + std::to_string(*gc.kappa));
  else
    p.notes.push_back(gc.name + ": kappa(x,y) = " + std::to_string(kappa));
  need(!cofacial(m, x, y), "x and y are cofacial");
  need(!exists_wv_path(m, x, y).has_value(), "a W_v-path joins x and y");
}

CriterionResult gamma_criterion(int id, std::string title, std::vector<GammaCase> cases, const VerifyOptions& o) {
  auto parts = run_parallel(o.jobs, cases.size(), [&](std::size_t i, Partial& p) { certify_gamma(cases[i], p); });
  return merge(id, std::move(title), std::move(parts));
}

// ---- 4: bound suite ----------------------------------------------------------

CriterionResult bound_suite(const std::vector<Fixture>& corpus, const VerifyOptions& o) {
  auto fs = select(corpus, [](const Fixture& f) { return f.expect_polyhedral; });
  auto parts = run_parallel(o.jobs, fs.size(), [&](std::size_t i, Partial& p) {
    const Fixture& fx = *fs[i];
    if (!admit(fx, p)) return;
    const auto& m = fx.map;
    const int chi = m.euler_char();
    for (const auto& c : map_checks(m)) p.check(fx.name, c, "");
    std::mt19937 rng(name_seed(o.seed, fx.name));
    const bool exhaustive = m.vertex_count() <= exhaustive_cutoff();
    for_noncofacial_pairs(m, [&](VertexId x, VertexId y) {
      Connectivity con = local_connectivity(m, x, y);
      std::vector<PathSystem> systems{con.system};
      for (int k = 0; k < 2; ++k) systems.push_back(random_disjoint_paths(m, x, y, rng));
      for (std::size_t s = 0; s < systems.size(); ++s) {
        std::string where = pair_name(x, y) + (s == 0 ? "flow system: " : "random system: ");
        try {
          auto hc = classify_homotopy(m, systems[s], false);
          p.check(fx.name,
                  make_check("L3.1", "homotopy classes", hc.class_count(), chi >= 2 ? "==" : "<=",
                             homotopy_class_bound(chi)),
                  where);
        } catch (const Error& e) {
          p.fail(fx.name, "L3.1", where + e.what());
        }
        p.check(fx.name, component_bound_check(m, systems[s]), where);
        if (con.kappa >= 3) {
          try {
            auto mr = minimize_revisits(m, systems[s]);
            p.check(fx.name, component_bound_check(m, mr.system), where + "after minimizing: ");
          } catch (const Error& e) {
            p.fail(fx.name, "L2.1", where + e.what());
          }
        }
      }
      if (exhaustive) {
        int w = max_disjoint_wv_paths(m, x, y);
        p.check(fx.name, make_check("T1.3", "disjoint W_v-paths", w, ">=", con.kappa + 4 * chi - 8), pair_name(x, y));
        if (fx.surface == SurfaceTag::ProjectivePlane) {
          p.check(fx.name, make_check("T4.1", "disjoint W_v-paths", w, ">=", con.kappa - 2), pair_name(x, y));
          // Pairs where the projective-plane bound is attained.
          if (w == con.kappa - 2)
            p.notes.push_back(fx.name + " " + pair_name(x, y) + "attains kappa-2: kappa " + std::to_string(con.kappa) +
                              ", " + std::to_string(w) + " disjoint W_v-paths");
        }
      } else {
        p.count("skipped-exhaustive");
      }
    });
  });
  return merge(4, "bound suite on polyhedral fixtures", std::move(parts));
}

// ---- 5: rerouting -------------------------------------------------------------

void check_reroute(const SurfaceMap& m, const PathSystem& before, const RerouteResult& rr, const std::string& name,
                   const std::string& where, Partial& p) {
  const auto& after = rr.system;
  const int i = rr.step.path_index;
  auto bad = [&](const std::string& what) { p.fail(name, "L2.2", where + what); };
  if (after.size() != before.size()) bad("path count changed");
  if (after.x != before.x || after.y != before.y) bad("endpoints changed");
  for (const auto& q : after.paths) {
    if (q.x() != before.x || q.y() != before.y) bad("a path lost its endpoints");
    try {
      validate_path(m, q);
    } catch (const Error& e) {
      bad(std::string("path not simple: ") + e.what());
    }
  }
  if (!internally_disjoint(after)) bad("paths no longer internally disjoint");
  int r0 = total_revisit_number(m, before), r1 = total_revisit_number(m, after);
  if (r1 >= r0) bad("total revisit number " + std::to_string(r0) + " -> " + std::to_string(r1));
  // Faces met by the substituted arc must not gain a second component.
  const auto& arc = rr.step.arc;
  std::vector<FaceId> touched;
  for (std::size_t k = 1; k + 1 < arc.size(); ++k)
    touched.insert(touched.end(), m.faces_at(arc[k]).begin(), m.faces_at(arc[k]).end());
  for (FaceId f : touched) {
    if (f == rr.step.face) continue;
    auto c0 = face_path_components(m, before.paths[i], f).size();
    auto c1 = face_path_components(m, after.paths[i], f).size();
    if (c1 > std::max<std::size_t>(c0, 1)) bad("arc revisits face " + std::to_string(f));
  }
}

// Random systems almost never put the endpoints inside the revisit disk, so one
// system on a 12x12 torus grid is built to force that case: path 0 winds a ring
// around the other two and comes back past its own start.
struct Scripted {
  SurfaceMap map;
  PathSystem system;
};

Scripted ring_configuration() {
  const int n = 12;
  auto id = [&](int r, int c) { return ((r + n) % n) * n + (c + n) % n; };
  std::vector<VertexId> p0{id(4, 4), id(4, 3), id(5, 3), id(5, 2), id(5, 1)};
  for (int r = 4; r >= 1; --r) p0.push_back(id(r, 1));
  for (int c = 2; c <= 10; ++c) p0.push_back(id(1, c));
  for (int r = 2; r <= 10; ++r) p0.push_back(id(r, 10));
  for (int c = 9; c >= 1; --c) p0.push_back(id(10, c));
  for (int r = 9; r >= 6; --r) p0.push_back(id(r, 1));
  for (auto [r, c] : {std::pair{6, 2}, {6, 3}, {7, 3}, {7, 4}}) p0.push_back(id(r, c));
  Scripted s{torus_grid(n, n), {}};
  s.system.x = id(4, 4);
  s.system.y = id(7, 4);
  s.system.paths = {make_path(s.map, p0),
                    make_path(s.map, {id(4, 4), id(4, 5), id(5, 5), id(6, 5), id(7, 5), id(7, 4)}),
                    make_path(s.map, {id(4, 4), id(5, 4), id(6, 4), id(7, 4)})};
  return s;
}

void reroute_to_exhaustion(const SurfaceMap& m, PathSystem s, std::mt19937* rng, const std::string& name,
                           const std::string& prefix, Partial& p) {
  for (int guard = 0; guard < 1000; ++guard) {
    struct Pick {
      int path;
      FaceId face;
      int a, b;
    };
    std::vector<Pick> picks;
    for (int k = 0; k < s.size(); ++k)
      for (auto& rec : revisit_records(m, s.paths[k], k))
        for (auto& pr : rec.pairs)
          if (pr.contractible) picks.push_back({k, rec.face, pr.comp_i, pr.comp_j});
    if (picks.empty()) return;
    std::size_t at = rng ? std::uniform_int_distribution<std::size_t>(0, picks.size() - 1)(*rng) : 0;
    const Pick& pk = picks[at];
    std::string where = prefix + "path " + std::to_string(pk.path) + " face " + std::to_string(pk.face) + ": ";
    p.count("L2.2");
    try {
      RerouteResult rr = reroute_contractible(m, s, pk.path, pk.face, pk.a, pk.b);
      p.count(to_string(rr.step.which));
      check_reroute(m, s, rr, name, where, p);
      s = std::move(rr.system);
    } catch (const Error& e) {
      p.fail(name, "L2.2", where + e.what());
      return;
    }
  }
}

CriterionResult reroute_trials(const std::vector<Fixture>& corpus, const VerifyOptions& o) {
  auto fs = select(corpus, [](const Fixture& f) { return f.expect_polyhedral; });
  auto parts = run_parallel(o.jobs, fs.size() + 1, [&](std::size_t i, Partial& p) {
    if (i == fs.size()) {
      Scripted sc = ring_configuration();
      reroute_to_exhaustion(sc.map, sc.system, nullptr, "torus_grid12_ring", "", p);
      return;
    }
    const Fixture& fx = *fs[i];
    if (!admit(fx, p)) return;
    const auto& m = fx.map;
    std::mt19937 rng(name_seed(o.seed, fx.name));
    for_noncofacial_pairs(m, [&](VertexId x, VertexId y) {
      if (local_connectivity(m, x, y).kappa < 3) return;
      for (int round = 0; round < 3; ++round)
        reroute_to_exhaustion(m, random_disjoint_paths(m, x, y, rng), &rng, fx.name, pair_name(x, y), p);
    });
  });
  CriterionResult r = merge(5, "rerouting (contractible revisits)", std::move(parts));
  long trials = r.instances["L2.2"];
  if (trials < o.reroute_trials) {
    r.violations.push_back({"*", "L2.2", "only " + std::to_string(trials) + " reroute trials (need " +
                                             std::to_string(o.reroute_trials) + ")"});
    r.pass = false;
  }
  return r;
}

// ---- 6: three homotopic paths -------------------------------------------------

CriterionResult homotopic_triple(const std::vector<Fixture>& corpus, const VerifyOptions& o) {
  auto fs = select(corpus, [](const Fixture& f) { return f.expect_polyhedral; });
  auto parts = run_parallel(o.jobs, fs.size(), [&](std::size_t i, Partial& p) {
    const Fixture& fx = *fs[i];
    if (!admit(fx, p)) return;
    const auto& m = fx.map;
    for_noncofacial_pairs(m, [&](VertexId x, VertexId y) {
      Connectivity con = local_connectivity(m, x, y);
      HomotopyClassification hc;
      try {
        hc = classify_homotopy(m, con.system, false);
      } catch (const Error& e) {
        p.fail(fx.name, "T1.2", pair_name(x, y) + e.what());
        return;
      }
      for (const auto& c : hc.classes) {
        if (c.members.size() < 3) continue;
        try {
          auto wv = wv_paths_in_class(m, con.system, c);
          long clean = std::count_if(wv.begin(), wv.end(), [&](const XYPath& q) { return total_revisit_number(m, q) == 0; });
          p.check(fx.name, make_check("L3.2", "W_v-paths in class disk", clean, ">=", double(c.members.size()) - 2),
                  pair_name(x, y));
        } catch (const Error& e) {
          p.fail(fx.name, "L3.2", pair_name(x, y) + e.what());
        }
        p.check(fx.name, make_check("T1.2", "W_v-path exists", exists_wv_path(m, x, y) ? 1 : 0, "==", 1),
                pair_name(x, y));
      }
    });
  });
  return merge(6, "three homotopic paths give a W_v-path", std::move(parts));
}

// ---- 7: oracle cross-validation --------------------------------------------------

CriterionResult oracle_agreement(const std::vector<Fixture>& corpus, const VerifyOptions& o) {
  auto fs = select(corpus, [](const Fixture& f) { return f.map.vertex_count() <= 12; });
  auto parts = run_parallel(o.jobs, fs.size(), [&](std::size_t i, Partial& p) {
    const Fixture& fx = *fs[i];
    const auto& m = fx.map;
    for (VertexId x = 0; x < m.vertex_count(); ++x)
      for (VertexId y = x + 1; y < m.vertex_count(); ++y) {
        bool fast = exists_wv_path(m, x, y).has_value();
        bool slow = oracle::naive_wv_path(m, x, y).has_value();
        p.count("WV");
        if (fast != slow)
          p.fail(fx.name, "WV", pair_name(x, y) + "pruned search says " + (fast ? "yes" : "no") + ", enumeration says " +
                                    (slow ? "yes" : "no"));
        int flow = local_connectivity(m, x, y).kappa;
        int brute = oracle::brute_local_connectivity(m, x, y);
        p.count("KAPPA");
        if (flow != brute)
          p.fail(fx.name, "KAPPA", pair_name(x, y) + "flow " + std::to_string(flow) + ", separators " + std::to_string(brute));
      }
    for (const Cycle& c : oracle::sample_cycles(m, 150)) {
      CutResult cut = cut_along_cycle(m, c);
      int total = 0;
      for (const auto& comp : cut.components) total += comp.euler_char;
      p.count("CUT");
      if (total != m.euler_char())
        p.fail(fx.name, "CUT", "component chi sum " + std::to_string(total) + " != " + std::to_string(m.euler_char()));
      if (cut.separating != (cut.components.size() == 2)) p.fail(fx.name, "CUT", "separating flag disagrees");
      if (m.euler_char() == 2 && !is_contractible(m, c)) p.fail(fx.name, "CUT", "non-contractible cycle on a sphere");
    }
  });
  return merge(7, "oracle cross-validation", std::move(parts));
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& o) {
  std::vector<Fixture> corpus = o.corpus ? *o.corpus : fixture_corpus();
  std::vector<int> ids = o.criteria;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7};
  VerifyReport rep;
  for (int id : ids) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
      case 1: r = sphere_packing(corpus, o); break;
      case 2:
        r = gamma_criterion(2, "orientable constructions g = 2, 3",
                            {{"gamma_o2", [] { return gamma_orientable(2); }, true, -2, 4},
                             {"gamma_o3", [] { return gamma_orientable(3); }, true, -4, 6}},
                            o);
        break;
      case 3:
        r = gamma_criterion(3, "non-orientable constructions genus 4, 5, 6",
                            {{"gamma_n4", [] { return gamma_nonorientable_even(4); }, false, -2, 4},
                             {"gamma_n5", [] { return gamma_nonorientable_odd(5); }, false, -3, std::nullopt},
                             {"gamma_n6", [] { return gamma_nonorientable_even(6); }, false, -4, 6}},
                            o);
        break;
      case 4: r = bound_suite(corpus, o); break;
      case 5: r = reroute_trials(corpus, o); break;
      case 6: r = homotopic_triple(corpus, o); break;
      case 7: r = oracle_agreement(corpus, o); break;
      default: throw Error(ErrorKind::PreconditionViolated, "no criterion " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.criteria.push_back(std::move(r));
  }
  return rep;
}

}  // namespace wvmaps
