#include <algorithm>
#include <array>
#include <map>

#include "wvmaps/constructions.hpp"

namespace wvmaps {

namespace {
using Faces = std::vector<std::vector<VertexId>>;
}

SurfaceMap tetrahedron() { return map_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}); }

SurfaceMap cube() {
  return map_from_faces(8, {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}});
}

SurfaceMap octahedron() {
  Faces f;
  for (int i = 0; i < 4; ++i) {
    int a = 1 + i, b = 1 + (i + 1) % 4;
    f.push_back({0, a, b});
    f.push_back({5, b, a});
  }
  return map_from_faces(6, f);
}

SurfaceMap icosahedron() {
  Faces f;
  auto up = [](int i) { return 1 + (i % 5); };
  auto lo = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    f.push_back({0, up(i), up(i + 1)});
    f.push_back({up(i), lo(i), up(i + 1)});
    f.push_back({up(i + 1), lo(i), lo(i + 1)});
    f.push_back({11, lo(i + 1), lo(i)});
  }
  return map_from_faces(12, f);
}

SurfaceMap wheel(int rim) {
  Faces f;
  std::vector<VertexId> outer;
  for (int i = 0; i < rim; ++i) {
    f.push_back({0, 1 + i, 1 + (i + 1) % rim});
    outer.push_back(rim - i);
  }
  f.push_back(outer);
  return map_from_faces(rim + 1, f);
}

SurfaceMap prism(int n) {
  Faces f;
  std::vector<VertexId> top, bottom;
  for (int i = 0; i < n; ++i) {
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
    f.push_back({i, n + i, n + (i + 1) % n, (i + 1) % n});
  }
  f.push_back(top);
  f.push_back(bottom);
  return map_from_faces(2 * n, f);
}

SurfaceMap antiprism(int n) {
  Faces f;
  std::vector<VertexId> top, bottom;
  for (int i = 0; i < n; ++i) {
    int t0 = i, t1 = (i + 1) % n, b0 = n + i, b1 = n + (i + 1) % n;
    top.push_back(i);
    bottom.push_back(2 * n - 1 - i);
    f.push_back({t0, b0, t1});
    f.push_back({t1, b0, b1});
  }
  f.push_back(top);
  f.push_back(bottom);
  return map_from_faces(2 * n, f);
}

SurfaceMap k6_projective() {
  return map_from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SurfaceMap petersen_projective() {
  Faces f{{0, 1, 2, 3, 4}};
  for (int i = 0; i < 5; ++i) f.push_back({i, (i + 1) % 5, 5 + (i + 1) % 5, 5 + (i + 3) % 5, 5 + i});
  return map_from_faces(10, f);
}

SurfaceMap k7_torus() {
  Faces f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return map_from_faces(7, f);
}

SurfaceMap torus_grid(int rows, int cols) {
  Faces f;
  auto id = [&](int i, int j) { return ((i + rows) % rows) * cols + (j + cols) % cols; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) f.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)});
  return map_from_faces(rows * cols, f);
}

SurfaceMap torus_triangulated(int rows, int cols) {
  Faces f;
  auto id = [&](int i, int j) { return ((i + rows) % rows) * cols + (j + cols) % cols; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      f.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i + 1, j + 1), id(i + 1, j)});
    }
  return map_from_faces(rows * cols, f);
}

SurfaceMap projective_geodesic(int freq) {
  // Lattice points (a, b, c) with |a| + |b| + |c| = freq, antipodes identified.
  std::map<std::array<int, 3>, VertexId> ids;
  auto id = [&](std::array<int, 3> p) {
    std::array<int, 3> q{-p[0], -p[1], -p[2]};
    if (q > p) p = q;
    auto it = ids.find(p);
    if (it != ids.end()) return it->second;
    VertexId v = static_cast<VertexId>(ids.size());
    ids.emplace(p, v);
    return v;
  };
  Faces f;
  // The upper hemisphere holds exactly one triangle of each antipodal pair.
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      auto pt = [&](int i, int j, int k) { return id({sx * i, sy * j, k}); };
      for (int i = 0; i < freq; ++i)
        for (int j = 0; i + j < freq; ++j) {
          int k = freq - 1 - i - j;
          f.push_back({pt(i + 1, j, k), pt(i, j + 1, k), pt(i, j, k + 1)});
          if (k >= 1) f.push_back({pt(i + 1, j + 1, k - 1), pt(i + 1, j, k), pt(i, j + 1, k)});
        }
    }
  return map_from_faces(static_cast<int>(ids.size()), f);
}

std::vector<Fixture> fixture_corpus() {
  std::vector<Fixture> out;
  auto sphere = [&](std::string name, SurfaceMap m) {
    Fixture fx;
    fx.name = std::move(name);
    fx.map = std::move(m);
    fx.surface = SurfaceTag::Sphere;
    out.push_back(std::move(fx));
  };
  sphere("tetrahedron", tetrahedron());
  sphere("cube", cube());
  sphere("octahedron", octahedron());
  sphere("icosahedron", icosahedron());
  for (int n = 4; n <= 8; ++n) sphere("wheel" + std::to_string(n), wheel(n));
  for (int n = 3; n <= 8; ++n) sphere("prism" + std::to_string(n), prism(n));
  for (int n = 4; n <= 8; ++n) sphere("antiprism" + std::to_string(n), antiprism(n));

  auto other = [&](std::string name, SurfaceMap m, SurfaceTag tag) {
    Fixture fx;
    fx.name = std::move(name);
    fx.map = std::move(m);
    fx.surface = tag;
    out.push_back(std::move(fx));
  };
  other("k6_projective", k6_projective(), SurfaceTag::ProjectivePlane);
  other("petersen_projective", petersen_projective(), SurfaceTag::ProjectivePlane);
  other("projective_geodesic3", projective_geodesic(3), SurfaceTag::ProjectivePlane);
  other("projective_geodesic4", projective_geodesic(4), SurfaceTag::ProjectivePlane);
  other("k7_torus", k7_torus(), SurfaceTag::Torus);
  other("torus_grid4", torus_grid(4, 4), SurfaceTag::Torus);
  other("torus_triangulated5", torus_triangulated(5, 5), SurfaceTag::Torus);

  auto gamma = [&](std::string name, Gamma g, bool polyhedral_expected, std::optional<int> kappa, std::string note) {
    Fixture fx;
    fx.name = std::move(name);
    fx.map = std::move(g.map);
    fx.surface = SurfaceTag::Other;
    fx.expect_polyhedral = polyhedral_expected;
    fx.xy = std::make_pair(g.spec.at("x"), g.spec.at("y"));
    fx.expect_kappa = kappa;
    fx.expect_no_wv = true;
    fx.note = std::move(note);
    out.push_back(std::move(fx));
  };
  gamma("gamma_o2", gamma_orientable(2), true, 4, "");
  gamma("gamma_o3", gamma_orientable(3), true, 6, "");
  gamma("gamma_n4", gamma_nonorientable_even(4), false, 4,
        "faces around the x-face meet in two vertices; no diagonal choice repairs it");
  gamma("gamma_n5", gamma_nonorientable_odd(5), false, std::nullopt,
        "the two added vertices lie on three common faces, so two of them meet twice");
  gamma("gamma_n6", gamma_nonorientable_even(6), true, 6, "");

  Gamma h2 = gamma_h2(4, 2, false);
  Fixture fx;
  fx.name = "h2_g2";
  fx.map = std::move(h2.map);
  fx.expect_polyhedral = false;
  fx.xy = std::make_pair(h2.spec.at("x"), h2.spec.at("y"));
  fx.note = "intermediate map before the diagonals";
  out.push_back(std::move(fx));
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixture_corpus()) names.push_back(f.name);
  return names;
}

Fixture fixture_by_name(const std::string& name) {
  for (auto& f : fixture_corpus())
    if (f.name == name) return f;
  if (name.rfind("torus_grid", 0) == 0 && name.size() > 10 &&
      name.find_first_not_of("0123456789", 10) == std::string::npos && name.size() < 14) {
    int k = std::stoi(name.substr(10));
    Fixture fx;
    fx.name = name;
    fx.map = torus_grid(k, k);
    fx.surface = SurfaceTag::Torus;
    return fx;
  }
  throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
}

}  // namespace wvmaps
