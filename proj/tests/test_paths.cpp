#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "wvmaps/constructions.hpp"
#include "wvmaps/oracles.hpp"
#include "wvmaps/paths.hpp"

using namespace wvmaps;

namespace {

// Antipode of v on the cube: the only vertex sharing no face with it.
VertexId cube_antipode(const SurfaceMap& m, VertexId v) {
  for (VertexId w = 0; w < m.vertex_count(); ++w)
    if (w != v && !cofacial(m, v, w)) return w;
  return -1;
}

// Components of F and P counted from scratch: union-find over path positions
// on F, joined when the path edge between them lies on F.
int components_by_hand(const SurfaceMap& m, const XYPath& p, FaceId f) {
  std::set<VertexId> on_f(m.face(f).vertices.begin(), m.face(f).vertices.end());
  std::set<EdgeId> f_edges(m.face(f).edges.begin(), m.face(f).edges.end());
  int comps = 0;
  bool open = false;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!on_f.count(p.vertices[i])) {
      open = false;
      continue;
    }
    bool joined = open && f_edges.count(p.edges[i - 1]);
    if (!joined) ++comps;
    open = true;
  }
  return comps;
}

}  // namespace

TEST_CASE("cofaciality") {
  SurfaceMap m = cube();
  for (VertexId w : m.neighbors(0)) CHECK(cofacial(m, 0, w));
  VertexId far = cube_antipode(m, 0);
  REQUIRE(far >= 0);
  CHECK_FALSE(cofacial(m, 0, far));
  CHECK_THROWS_AS(cofacial(m, 2, 2), Error);

  Gamma g2 = gamma_orientable(2);
  CHECK_FALSE(cofacial(g2.map, g2.spec.at("x"), g2.spec.at("y")));
  CHECK(common_face(m, 0, m.neighbors(0)[0]).has_value());
}

TEST_CASE("local connectivity") {
  SurfaceMap m = cube();
  VertexId far = cube_antipode(m, 0);
  Connectivity c = local_connectivity(m, 0, far);
  CHECK(c.kappa == 3);
  CHECK(c.kappa == oracle::brute_local_connectivity(m, 0, far));
  CHECK(c.system.size() == 3);
  CHECK(internally_disjoint(c.system));
  CHECK_THROWS_AS(local_connectivity(m, 1, 1), Error);

  for (int g : {2, 3}) {
    Gamma gm = gamma_orientable(g);
    CHECK(local_connectivity(gm.map, gm.spec.at("x"), gm.spec.at("y")).kappa == 2 * g);
  }
  for (int gbar : {4, 6}) {
    Gamma gm = gamma_nonorientable_even(gbar);
    CHECK(local_connectivity(gm.map, gm.spec.at("x"), gm.spec.at("y")).kappa == gbar);
  }
}

TEST_CASE("flow systems are reproducible") {
  SurfaceMap m = icosahedron();
  auto a = local_connectivity(m, 0, 11).system, b = local_connectivity(m, 0, 11).system;
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) CHECK(a.paths[i].vertices == b.paths[i].vertices);
}

TEST_CASE("face path components") {
  SurfaceMap m = cube();
  const FaceWalk& f = m.face(0);
  // A path sharing one edge with F.
  VertexId u = f.vertices[0], v = f.vertices[1];
  XYPath e = make_path(m, {u, v});
  CHECK(face_path_components(m, e, 0).size() == 1);
  // Only an endpoint on F.
  VertexId off = -1;
  for (VertexId w : m.neighbors(u))
    if (!m.on_face(w, 0)) off = w;
  REQUIRE(off >= 0);
  XYPath leave = make_path(m, {u, off});
  auto comps = face_path_components(m, leave, 0);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].first == 0);
  CHECK(comps[0].last == 0);

  // Outer rim of a wheel met at two spokes.
  SurfaceMap w = wheel(6);
  FaceId rim = -1;
  for (FaceId g = 0; g < w.face_count(); ++g)
    if (w.face(g).length() == 6) rim = g;
  REQUIRE(rim >= 0);
  CHECK(face_path_components(w, make_path(w, {1, 0, 4}), rim).size() == 2);

  // Consecutive vertices of F joined by an edge off F are two components.
  SurfaceMap sq = map_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {3, 2, 1, 0}});
  FaceId outer = -1;
  for (FaceId g = 0; g < sq.face_count(); ++g)
    if (sq.face(g).length() == 4) outer = g;
  REQUIRE(outer >= 0);
  CHECK(face_path_components(sq, make_path(sq, {0, 2}), outer).size() == 2);
}

TEST_CASE("total revisit number") {
  SurfaceMap m = cube();
  for (const Edge& e : m.edges()) CHECK(total_revisit_number(m, make_path(m, {e.u, e.v})) == 0);

  // Face-boundary arc between opposite corners of a face.
  const FaceWalk& f = m.face(0);
  XYPath arc = make_path(m, {f.vertices[0], f.vertices[1], f.vertices[2]});
  CHECK(total_revisit_number(m, arc) == 0);
  CHECK(is_wv_path(m, arc));

  // Detour: leave face 0 and come back to it.
  VertexId a = f.vertices[0], b = f.vertices[1];
  VertexId a_off = -1, b_off = -1;
  for (VertexId w : m.neighbors(a))
    if (!m.on_face(w, 0)) a_off = w;
  for (VertexId w : m.neighbors(b))
    if (!m.on_face(w, 0)) b_off = w;
  XYPath detour = make_path(m, {a, a_off, b_off, b, f.vertices[2]});
  int by_hand = 0;
  for (FaceId g = 0; g < m.face_count(); ++g) by_hand += std::max(0, components_by_hand(m, detour, g) - 1);
  CHECK(total_revisit_number(m, detour) == by_hand);
  CHECK(by_hand >= 1);
  CHECK_FALSE(is_wv_path(m, detour));
}

TEST_CASE("revisit accounting agrees with the hand count") {
  std::mt19937 rng(7);
  for (const auto& fx : fixture_corpus()) {
    const auto& m = fx.map;
    if (m.vertex_count() > 30) continue;
    std::uniform_int_distribution<VertexId> pick(0, m.vertex_count() - 1);
    for (int t = 0; t < 10; ++t) {
      VertexId x = pick(rng), y = pick(rng);
      if (x == y) continue;
      PathSystem s = random_disjoint_paths(m, x, y, rng);
      for (const auto& p : s.paths) {
        int total = 0;
        bool all_single = true;
        for (FaceId g = 0; g < m.face_count(); ++g) {
          int c = components_by_hand(m, p, g);
          CHECK(static_cast<int>(face_path_components(m, p, g).size()) == c);
          total += std::max(0, c - 1);
          all_single = all_single && c <= 1;
        }
        CHECK(total_revisit_number(m, p) == total);
        CHECK(is_wv_path(m, p) == all_single);
      }
    }
  }
}

TEST_CASE("path validation") {
  SurfaceMap m = cube();
  VertexId u = m.face(0).vertices[0], v = m.face(0).vertices[2];
  CHECK_THROWS_AS(make_path(m, {u, v}), Error);  // not adjacent
  XYPath p = make_path(m, {m.face(0).vertices[0], m.face(0).vertices[1], m.face(0).vertices[2]});
  CHECK(reversed(p).vertices.front() == p.vertices.back());
  CHECK(path_hash(p) != path_hash(reversed(p)));
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(cube()) == 3);
  CHECK(vertex_connectivity(icosahedron()) == 5);
  CHECK(vertex_connectivity(octahedron()) == 4);
  CHECK(vertex_connectivity(tetrahedron()) == 3);
  CHECK(vertex_connectivity(k7_torus()) == 6);
  CHECK(vertex_connectivity(torus_grid(4, 4)) == 4);
}
