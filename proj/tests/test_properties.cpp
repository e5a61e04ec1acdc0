// Randomized invariants over the corpus and over random rotation systems.
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "wvmaps/analysis.hpp"
#include "wvmaps/constructions.hpp"
#include "wvmaps/homotopy.hpp"
#include "wvmaps/nonrevisit.hpp"
#include "wvmaps/oracles.hpp"
#include "wvmaps/paths.hpp"
#include "wvmaps/polyhedral.hpp"
#include "wvmaps/smap_io.hpp"

using namespace wvmaps;

namespace {

constexpr unsigned kSeed = 1234567;

std::vector<Fixture> polyhedral_corpus() {
  std::vector<Fixture> out;
  for (auto& f : fixture_corpus())
    if (f.expect_polyhedral && f.map.vertex_count() <= 30) out.push_back(std::move(f));
  return out;
}

// K_n with random rotations and signs.
SurfaceMap random_complete_map(int n, std::mt19937& rng, bool signs) {
  std::vector<Edge> edges;
  std::vector<std::vector<DartId>> rot(n);
  std::bernoulli_distribution flip(0.3);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      EdgeId e = static_cast<EdgeId>(edges.size());
      edges.push_back({u, v, signs && flip(rng) ? -1 : 1});
      rot[u].push_back(2 * e);
      rot[v].push_back(2 * e + 1);
    }
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return SurfaceMap::build(n, edges, rot);
}

bool reachable_without(const SurfaceMap& m, VertexId x, VertexId y, const std::vector<char>& gone) {
  std::vector<char> seen(m.vertex_count(), 0);
  std::vector<VertexId> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == y) return true;
    for (VertexId w : m.neighbors(v))
      if (!seen[w] && !gone[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

std::pair<VertexId, VertexId> random_pair(const SurfaceMap& m, std::mt19937& rng, bool noncofacial) {
  std::uniform_int_distribution<VertexId> pick(0, m.vertex_count() - 1);
  for (int guard = 0; guard < 1000; ++guard) {
    VertexId x = pick(rng), y = pick(rng);
    if (x != y && (!noncofacial || !cofacial(m, x, y))) return {x, y};
  }
  return {-1, -1};
}

}  // namespace

TEST_CASE("random rotation systems obey Euler's formula") {
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 300; ++t) {
    int n = std::uniform_int_distribution<int>(4, 7)(rng);
    SurfaceMap m = random_complete_map(n, rng, t % 2 == 1);
    int walk = 0;
    for (const auto& f : m.faces()) walk += f.length();
    CHECK(walk == 2 * m.edge_count());
    CHECK(m.euler_char() <= 2);
    if (m.orientable()) CHECK(m.euler_char() % 2 == 0);
    // Round trip through text.
    CHECK(emit_smap(parse_smap_string(emit_smap(m))) == emit_smap(m));
    // Polyhedral maps are 3-connected and their faces touch within the bound.
    auto v = is_polyhedral(m);
    if (v.polyhedral) {
      CHECK(is_three_connected(m));
      CHECK(face_touching_number(m).value <= std::max(1, 4 - 2 * m.euler_char()));
    }
  }
}

TEST_CASE("switching vertices changes nothing observable") {
  std::mt19937 rng(kSeed + 1);
  auto corpus = polyhedral_corpus();
  for (int t = 0; t < 40; ++t) {
    const Fixture& fx = corpus[rng() % corpus.size()];
    const auto& m = fx.map;
    std::vector<VertexId> flip;
    for (VertexId v = 0; v < m.vertex_count(); ++v)
      if (rng() % 2) flip.push_back(v);
    SurfaceMap s = switch_vertices(m, flip);
    INFO(fx.name);
    CHECK(s.euler_char() == m.euler_char());
    CHECK(s.orientable() == m.orientable());
    CHECK(is_polyhedral(s).polyhedral == is_polyhedral(m).polyhedral);
    CHECK(face_touching_number(s).value == face_touching_number(m).value);
    CHECK(canonical_form(s) == canonical_form(m));
    auto [x, y] = random_pair(m, rng, false);
    CHECK(local_connectivity(s, x, y).kappa == local_connectivity(m, x, y).kappa);
    if (m.vertex_count() <= 20) CHECK(exists_wv_path(s, x, y).has_value() == exists_wv_path(m, x, y).has_value());
  }
}

TEST_CASE("random path systems are maximum and disjoint") {
  std::mt19937 rng(kSeed + 2);
  for (const auto& fx : polyhedral_corpus()) {
    const auto& m = fx.map;
    for (int t = 0; t < 5; ++t) {
      auto [x, y] = random_pair(m, rng, false);
      int kappa = local_connectivity(m, x, y).kappa;
      PathSystem s = random_disjoint_paths(m, x, y, rng);
      INFO(fx.name << " " << x << " " << y);
      CHECK(s.size() == kappa);
      CHECK(internally_disjoint(s));
      for (auto& p : s.paths) {
        CHECK_NOTHROW(validate_path(m, p));
        CHECK(total_revisit_number(m, p) >= 0);
      }
      // Menger: any kappa - 1 internal vertices leave x and y connected.
      std::vector<VertexId> others;
      for (VertexId v = 0; v < m.vertex_count(); ++v)
        if (v != x && v != y) others.push_back(v);
      std::shuffle(others.begin(), others.end(), rng);
      std::vector<char> gone(m.vertex_count(), 0);
      for (int k = 0; k < kappa - 1 && k < static_cast<int>(others.size()); ++k) gone[others[k]] = 1;
      CHECK(reachable_without(m, x, y, gone));
    }
  }
}

TEST_CASE("flow connectivity matches separator enumeration") {
  std::mt19937 rng(kSeed + 3);
  for (int t = 0; t < 60; ++t) {
    SurfaceMap m = random_complete_map(std::uniform_int_distribution<int>(4, 6)(rng), rng, true);
    // Thin the graph by deleting a few random edges.
    for (int k = 0; k < 4; ++k) {
      try {
        m = delete_edge(m, rng() % m.edge_count());
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::Disconnected);
      }
    }
    auto [x, y] = random_pair(m, rng, false);
    CHECK(local_connectivity(m, x, y).kappa == oracle::brute_local_connectivity(m, x, y));
  }
}

TEST_CASE("reroute steps keep the system intact") {
  std::mt19937 rng(kSeed + 4);
  auto corpus = polyhedral_corpus();
  int steps = 0;
  for (int t = 0; t < 4000 && steps < 300; ++t) {
    const Fixture& fx = corpus[rng() % corpus.size()];
    const auto& m = fx.map;
    auto [x, y] = random_pair(m, rng, true);
    if (x < 0 || local_connectivity(m, x, y).kappa < 3) continue;
    PathSystem s = random_disjoint_paths(m, x, y, rng);
    for (int guard = 0; guard < 50; ++guard) {
      std::vector<std::tuple<int, FaceId, int, int>> picks;
      for (int i = 0; i < s.size(); ++i)
        for (auto& r : revisit_records(m, s.paths[i], i))
          for (auto& p : r.pairs)
            if (p.contractible) picks.emplace_back(i, r.face, p.comp_i, p.comp_j);
      if (picks.empty()) break;
      auto [i, f, a, b] = picks[rng() % picks.size()];
      INFO(fx.name << " " << x << " " << y << " path " << i << " face " << f);
      RerouteResult rr = reroute_contractible(m, s, i, f, a, b);
      ++steps;
      const PathSystem& n = rr.system;
      REQUIRE(n.size() == s.size());
      CHECK(internally_disjoint(n));
      for (auto& p : n.paths) {
        CHECK(p.x() == x);
        CHECK(p.y() == y);
        CHECK_NOTHROW(validate_path(m, p));
      }
      CHECK(total_revisit_number(m, n) < total_revisit_number(m, s));
      // No face met by the new arc gains a revisit.
      const int j = rr.step.path_index;
      for (std::size_t k = 1; k + 1 < rr.step.arc.size(); ++k)
        for (FaceId g : m.faces_at(rr.step.arc[k])) {
          if (g == rr.step.face) continue;
          auto before = face_path_components(m, s.paths[j], g).size();
          auto after = face_path_components(m, n.paths[j], g).size();
          CHECK(after <= std::max<std::size_t>(before, 1));
        }
      s = n;
    }
  }
  CHECK(steps >= 100);
}

TEST_CASE("homotopy is an equivalence on disjoint families") {
  std::mt19937 rng(kSeed + 5);
  for (const auto& fx : polyhedral_corpus()) {
    const auto& m = fx.map;
    for (int t = 0; t < 4; ++t) {
      auto [x, y] = random_pair(m, rng, true);
      if (x < 0) continue;
      PathSystem s = random_disjoint_paths(m, x, y, rng);
      const int k = s.size();
      std::vector<std::vector<char>> h(k, std::vector<char>(k, 1));
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) h[a][b] = h[b][a] = paths_homotopic(m, s.paths[a], s.paths[b]);
      INFO(fx.name << " " << x << " " << y);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int c = 0; c < k; ++c)
            if (h[a][b] && h[b][c]) CHECK(h[a][c]);
      auto hc = classify_homotopy(m, s);
      CHECK(hc.class_count() <= homotopy_class_bound(m.euler_char()));
      CHECK(component_bound_check(m, s).pass);
    }
  }
}

TEST_CASE("cuts conserve the Euler characteristic") {
  for (const auto& fx : polyhedral_corpus()) {
    const auto& m = fx.map;
    for (const Cycle& c : oracle::sample_cycles(m, 60)) {
      CutResult cut = cut_along_cycle(m, c);
      int total = 0;
      for (auto& comp : cut.components) total += comp.euler_char;
      CHECK(total == m.euler_char());
      CHECK(cut.components.size() == (cut.separating ? 2u : 1u));
      bool disk_side = cut.separating && std::any_of(cut.components.begin(), cut.components.end(),
                                                     [](const CutComponent& k) { return k.is_disk(); });
      CHECK(is_contractible(m, c) == disk_side);
      if (m.euler_char() == 2) CHECK(disk_side);
    }
  }
}

TEST_CASE("pruned search matches enumeration on random pairs of mid-size maps") {
  std::mt19937 rng(kSeed + 6);
  for (const char* name : {"icosahedron", "prism8", "antiprism7", "torus_grid4", "petersen_projective"}) {
    SurfaceMap m = fixture_by_name(name).map;
    for (int t = 0; t < 4; ++t) {
      auto [x, y] = random_pair(m, rng, false);
      INFO(name << " " << x << " " << y);
      CHECK(exists_wv_path(m, x, y).has_value() == oracle::naive_wv_path(m, x, y).has_value());
    }
  }
}
