#pragma once

#include <iosfwd>
#include <string>

#include "wvmaps/surface_map.hpp"

namespace wvmaps {

// Text format:
//   V <n>
//   E <id> <u> <v> <+|->      one per edge, ids 0..E-1 in order
//   R <v>: <dart> ...         one per vertex, rotation order
// '#' starts a comment. Throws ParseError (with line number), or the map's own
// build errors wrapped as ParseError on line 0.
SurfaceMap parse_smap(std::istream& in);
SurfaceMap parse_smap_string(const std::string& text);
SurfaceMap read_smap_file(const std::string& path);

// Canonical text: no comments, one space between fields, trailing newline.
std::string emit_smap(const SurfaceMap& map);
void write_smap_file(const SurfaceMap& map, const std::string& path);

}  // namespace wvmaps
