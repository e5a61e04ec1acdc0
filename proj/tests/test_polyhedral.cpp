#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "wvmaps/constructions.hpp"
#include "wvmaps/paths.hpp"
#include "wvmaps/polyhedral.hpp"

using namespace wvmaps;

namespace {

// Connectivity of the graph with some vertices deleted, by plain BFS.
bool connected_without(const SurfaceMap& m, const std::vector<char>& gone) {
  int start = -1, alive = 0;
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(m.vertex_count(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : m.neighbors(v))
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

bool brute_three_connected(const SurfaceMap& m) {
  const int n = m.vertex_count();
  if (n < 4) return false;
  std::vector<char> gone(n, 0);
  if (!connected_without(m, gone)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      gone[a] = gone[b] = 1;
      bool ok = connected_without(m, gone);
      gone[a] = gone[b] = 0;
      if (!ok) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("cube faces meet properly") {
  CHECK_FALSE(faces_meet_properly(cube()).has_value());
  CHECK(is_polyhedral(icosahedron()).polyhedral);
}

TEST_CASE("adjacent cube faces share exactly one edge") {
  SurfaceMap m = cube();
  int edge_pairs = 0, empty_pairs = 0;
  for (FaceId a = 0; a < m.face_count(); ++a)
    for (FaceId b = a + 1; b < m.face_count(); ++b) {
      auto comps = face_intersection(m, a, b);
      if (comps.empty()) {
        ++empty_pairs;
        continue;
      }
      REQUIRE(comps.size() == 1);
      CHECK(comps[0].edges.size() == 1);
      CHECK(comps[0].vertices.size() == 2);
      ++edge_pairs;
    }
  CHECK(edge_pairs == 12);
  CHECK(empty_pairs == 3);
}

TEST_CASE("H_2 for g = 2 has faces sharing i and g+i") {
  Gamma h2 = gamma_h2(4, 2, false);
  REQUIRE(faces_meet_properly(h2.map).has_value());
  auto L = [&](int i) { return h2.spec.at(std::to_string((i - 1) % 4 + 1)); };
  auto P = [&](int i) { return h2.spec.at(std::to_string((i - 1) % 4 + 1) + "'"); };
  // Every improper meeting is two isolated vertices {i, g+i} or {i', (g+i)'}.
  std::set<std::set<VertexId>> allowed;
  for (int i = 1; i <= 4; ++i) {
    allowed.insert({L(i), L(i + 2)});
    allowed.insert({P(i), P(i + 2)});
  }
  int improper = 0, unprimed = 0;
  for (FaceId a = 0; a < h2.map.face_count(); ++a)
    for (FaceId b = a + 1; b < h2.map.face_count(); ++b) {
      auto comps = face_intersection(h2.map, a, b);
      if (comps.size() < 2) continue;
      ++improper;
      REQUIRE(comps.size() == 2);
      std::set<VertexId> shared;
      for (auto& c : comps) {
        CHECK(c.edges.empty());
        REQUIRE(c.vertices.size() == 1);
        shared.insert(c.vertices[0]);
      }
      CHECK(allowed.count(shared) == 1);
      for (int i = 1; i <= 4; ++i) unprimed += shared == std::set<VertexId>{L(i), L(i + 2)};
    }
  CHECK(improper > 0);
  CHECK(unprimed > 0);

  auto v = is_polyhedral(h2.map);
  CHECK_FALSE(v.polyhedral);
  CHECK(v.reason == PolyhedralFailure::ImproperMeeting);
}

TEST_CASE("diagonals make the orientable constructions polyhedral") {
  for (int g : {2, 3}) {
    Gamma gm = gamma_orientable(g);
    CHECK_FALSE(faces_meet_properly(gm.map).has_value());
    CHECK(is_polyhedral(gm.map).polyhedral);
  }
  CHECK(is_polyhedral(gamma_nonorientable_even(6).map).polyhedral);
}

TEST_CASE("the odd gadget puts d and e on three common faces") {
  // d and e have degree 4 and are adjacent; only two faces can hold the edge
  // de, so a third face through both forces an improper meeting.
  Gamma gm = gamma_nonorientable_odd(5);
  VertexId d = gm.spec.at("d"), e = gm.spec.at("e");
  CHECK(gm.map.degree(d) == 4);
  CHECK(gm.map.degree(e) == 4);
  int common = 0;
  for (FaceId f = 0; f < gm.map.face_count(); ++f)
    if (gm.map.on_face(d, f) && gm.map.on_face(e, f)) ++common;
  CHECK(common >= 3);
  CHECK_FALSE(is_polyhedral(gm.map).polyhedral);
}

TEST_CASE("three-connectivity") {
  CHECK(is_three_connected(cube()));
  CHECK(is_three_connected(wheel(5)));
  CHECK(is_three_connected(tetrahedron()));
  // A 4-cycle drawn on the sphere is only 2-connected.
  SurfaceMap square = map_from_faces(4, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  CHECK_FALSE(is_three_connected(square));
  CHECK_FALSE(is_polyhedral(square).polyhedral);
  for (const auto& fx : fixture_corpus())
    if (fx.map.is_simple_graph() && fx.map.vertex_count() <= 40) {
      INFO(fx.name);
      CHECK(is_three_connected(fx.map) == brute_three_connected(fx.map));
    }
}

TEST_CASE("is_polyhedral reports the first failing clause") {
  // Two triangles glued along their whole boundary share three edges.
  auto v = is_polyhedral(map_from_faces(3, {{0, 1, 2}, {2, 1, 0}}));
  CHECK_FALSE(v.polyhedral);
  CHECK(v.reason == PolyhedralFailure::ImproperMeeting);

  CHECK(is_polyhedral(wheel(6)).reason == PolyhedralFailure::None);
}

TEST_CASE("polyhedral maps are three-connected") {
  for (const auto& fx : fixture_corpus()) {
    INFO(fx.name);
    auto v = is_polyhedral(fx.map);
    if (fx.expect_polyhedral) CHECK(v.polyhedral);
    if (v.polyhedral) CHECK(is_three_connected(fx.map));
  }
}

TEST_CASE("face intersection is symmetric") {
  for (const auto& fx : fixture_corpus()) {
    const auto& m = fx.map;
    if (m.face_count() > 40) continue;
    for (FaceId a = 0; a < m.face_count(); ++a)
      for (FaceId b = a + 1; b < m.face_count(); ++b) {
        auto ab = face_intersection(m, a, b), ba = face_intersection(m, b, a);
        REQUIRE(ab.size() == ba.size());
        std::multiset<std::size_t> sa, sb;
        for (auto& c : ab) sa.insert(c.vertices.size() * 100 + c.edges.size());
        for (auto& c : ba) sb.insert(c.vertices.size() * 100 + c.edges.size());
        CHECK(sa == sb);
      }
  }
}

TEST_CASE("touching number") {
  for (const auto& fx : fixture_corpus()) {
    INFO(fx.name);
    TouchingNumber t = face_touching_number(fx.map);
    if (fx.surface == SurfaceTag::Sphere) CHECK(t.value == 1);
    if (is_polyhedral(fx.map).polyhedral) {
      CHECK(t.value >= 1);
      CHECK(t.value <= std::max(1, 4 - 2 * fx.map.euler_char()));
      REQUIRE(t.face_a >= 0);
      CHECK(static_cast<int>(face_intersection(fx.map, t.face_a, t.face_b).size()) == t.value);
    }
  }
  TouchingNumber g2 = face_touching_number(gamma_orientable(2).map);
  CHECK(g2.value <= 8);
  MESSAGE("touching number of Gamma_2: " << g2.value);
  // H_2 is where faces meet twice.
  CHECK(face_touching_number(gamma_h2(4, 2, false).map).value == 2);
}

TEST_CASE("connectivity bound for chi <= 0") {
  CHECK(cook_bound(0) == doctest::Approx(6.0));
  CHECK(cook_bound(-2) == doctest::Approx((5 + std::sqrt(97.0)) / 2));
  CHECK(cook_bound(-2) < 8);
  CHECK(cook_bound_ok(torus_grid(4, 4)));
  CHECK(cook_bound_ok(gamma_orientable(2).map));
  SurfaceMap k7 = k7_torus();
  CHECK(vertex_connectivity(k7) == 6);
  CHECK(cook_bound_ok(k7));
  CHECK_THROWS_AS(cook_bound_ok(cube()), Error);
  bool refused = false;
  try {
    cook_bound_ok(k6_projective());
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::SurfaceNotApplicable;
  }
  CHECK(refused);
}
