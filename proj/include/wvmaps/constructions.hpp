#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wvmaps/surface_map.hpp"

namespace wvmaps {

// ---- standard maps -------------------------------------------------------

SurfaceMap tetrahedron();
SurfaceMap cube();
SurfaceMap octahedron();
SurfaceMap icosahedron();
SurfaceMap wheel(int rim);        // hub is vertex 0
SurfaceMap prism(int n);          // top ring 0..n-1, bottom ring n..2n-1
SurfaceMap antiprism(int n);      // top ring 0..n-1, bottom ring n..2n-1
SurfaceMap k6_projective();       // hemi-icosahedron
SurfaceMap petersen_projective(); // hemi-dodecahedron
SurfaceMap k7_torus();
SurfaceMap torus_grid(int rows, int cols);  // vertex (i, j) is i * cols + j
SurfaceMap torus_triangulated(int rows, int cols);  // grid plus one diagonal per square
// Antipodal quotient of the frequency-f geodesic octahedron.
SurfaceMap projective_geodesic(int freq);

// ---- the counterexample families -----------------------------------------

enum class GammaKind { Orientable, NonorientableEven, NonorientableOdd };

struct GammaSpec {
  GammaKind kind = GammaKind::Orientable;
  int genus = 0;
  std::map<std::string, VertexId> labels;  // "x", "y", "1".."n", "1'".."n'", "a".."e"

  VertexId at(const std::string& label) const { return labels.at(label); }
};

struct Gamma {
  SurfaceMap map;
  GammaSpec spec;
};

// H_1 with the vertical edges still present. Labels include "a<i>", "a<i>'",
// "b<i>", "b<i>'" for the two copies of i and i'.
Gamma gamma_h1(int n, int shift, bool crosscaps);
// After contracting every vertical edge.
Gamma gamma_h2(int n, int shift, bool crosscaps);

Gamma gamma_orientable(int g);
Gamma gamma_nonorientable_even(int gbar);
Gamma gamma_nonorientable_odd(int gbar);

// Two new adjacent vertices d, e inside triangle abc plus a crosscap carrying
// the edges ce and bd.
struct GadgetResult {
  SurfaceMap map;
  VertexId a, b, c, d, e;
};
GadgetResult attach_crosscap_gadget(const SurfaceMap& map, FaceId triangle);

std::string to_string(GammaKind kind);

// ---- corpus ----------------------------------------------------------------

enum class SurfaceTag { Sphere, ProjectivePlane, Torus, Other };

struct Fixture {
  std::string name;
  SurfaceMap map;
  SurfaceTag surface = SurfaceTag::Other;
  bool expect_polyhedral = true;
  // Distinguished pair for the Γ families.
  std::optional<std::pair<VertexId, VertexId>> xy;
  std::optional<int> expect_kappa;
  bool expect_no_wv = false;
  std::string note;
};

std::vector<Fixture> fixture_corpus();
std::vector<std::string> fixture_names();
Fixture fixture_by_name(const std::string& name);

}  // namespace wvmaps
