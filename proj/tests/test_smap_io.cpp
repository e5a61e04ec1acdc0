#include <fstream>

#include "doctest.h"
#include "wvmaps/constructions.hpp"
#include "wvmaps/smap_io.hpp"

using namespace wvmaps;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_smap_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const char* kTetra =
    "V 4\n"
    "E 0 0 1 +\n"
    "E 1 0 2 +\n"
    "E 2 0 3 +\n"
    "E 3 1 2 +\n"
    "E 4 1 3 +\n"
    "E 5 2 3 +\n"
    "R 0: 0 2 4\n"
    "R 1: 1 8 6\n"
    "R 2: 3 7 10\n"
    "R 3: 5 11 9\n";

}  // namespace

TEST_CASE("parse a tetrahedron") {
  SurfaceMap m = parse_smap_string(kTetra);
  CHECK(m.vertex_count() == 4);
  CHECK(m.edge_count() == 6);
  CHECK(m.face_count() == 4);
  CHECK(emit_smap(m) == kTetra);
}

TEST_CASE("comments and blank lines") {
  std::string text = std::string("# tetrahedron\n\n") + kTetra + "   # trailing\n";
  CHECK(parse_smap_string(text).face_count() == 4);
}

TEST_CASE("round trip over the corpus") {
  for (const auto& fx : fixture_corpus()) {
    INFO(fx.name);
    std::string text = emit_smap(fx.map);
    SurfaceMap back = parse_smap_string(text);
    CHECK(emit_smap(back) == text);
    CHECK(back.euler_char() == fx.map.euler_char());
    CHECK(back.orientable() == fx.map.orientable());
  }
}

TEST_CASE("files") {
  const std::string path = "smap_io_test.smap";
  write_smap_file(icosahedron(), path);
  CHECK(emit_smap(read_smap_file(path)) == emit_smap(icosahedron()));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_smap_file("no/such/file.smap"), ParseError);
}

TEST_CASE("errors carry line numbers") {
  std::string t = kTetra;
  CHECK(parse_error_line("V 4\nE 1 0 1 +\n") == 2);                    // edge ids out of order
  CHECK(parse_error_line("V 2\nE 0 0 1 *\n") == 2);                    // bad sign
  CHECK(parse_error_line("V 2\nX 0\n") == 2);                          // unknown record
  CHECK(parse_error_line("V 2\nV 3\n") == 2);                          // second V
  CHECK(parse_error_line("E 0 0 1 +\n") == 1);                         // E before V
  CHECK(parse_error_line("V 2\nE 0 0 5 +\n") == 2);                    // endpoint out of range
  CHECK(parse_error_line("V 2\nE 0 0 1 +\nR 0: 0\nR 0: 0\n") == 4);    // repeated rotation
  CHECK(parse_error_line("V 2\nE 0 0 1 +\nR 0: 0\n") >= 0);            // missing rotation
  CHECK(parse_error_line(t.substr(0, t.size() / 2)) >= 0);             // truncated
  CHECK(parse_error_line("V 2\nE 0 0 1 +\nR 0: 7\nR 1: 1\n") >= 0);    // dart out of range
  CHECK(parse_error_line("V 2\nE 0 0 1 +\nR 0: 0 0\nR 1: 1\n") >= 0);  // dart twice
  CHECK(parse_error_line("") >= 0);
}
