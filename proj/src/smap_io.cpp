#include "wvmaps/smap_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace wvmaps {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0)
    throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
  return v;
}

}  // namespace

SurfaceMap parse_smap(std::istream& in) {
  MapData d;
  bool have_v = false;
  std::vector<char> seen_rotation;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = tokens(raw);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "V") {
      if (have_v) throw ParseError(line, "second V line");
      if (tok.size() != 2) throw ParseError(line, "expected 'V <n>'");
      d.vertex_count = to_int(tok[1], line, "vertex count");
      d.rotation.assign(d.vertex_count, {});
      seen_rotation.assign(d.vertex_count, 0);
      have_v = true;
    } else if (kind == "E") {
      if (!have_v) throw ParseError(line, "E before V");
      if (tok.size() != 5) throw ParseError(line, "expected 'E <id> <u> <v> <sign>'");
      int id = to_int(tok[1], line, "edge id");
      if (id != static_cast<int>(d.edges.size()))
        throw ParseError(line, "edge id " + tok[1] + " out of order (expected " + std::to_string(d.edges.size()) + ")");
      int u = to_int(tok[2], line, "endpoint"), v = to_int(tok[3], line, "endpoint");
      if (u >= d.vertex_count || v >= d.vertex_count) throw ParseError(line, "endpoint out of range");
      if (tok[4] != "+" && tok[4] != "-") throw ParseError(line, "sign must be + or -");
      d.edges.push_back({u, v, tok[4] == "+" ? 1 : -1});
    } else if (kind == "R") {
      if (!have_v) throw ParseError(line, "R before V");
      if (tok.size() < 2 || tok[1].empty() || tok[1].back() != ':')
        throw ParseError(line, "expected 'R <v>: <darts>'");
      int v = to_int(tok[1].substr(0, tok[1].size() - 1), line, "vertex");
      if (v >= d.vertex_count) throw ParseError(line, "vertex out of range");
      if (seen_rotation[v]) throw ParseError(line, "second rotation for vertex " + std::to_string(v));
      seen_rotation[v] = 1;
      for (std::size_t k = 2; k < tok.size(); ++k) d.rotation[v].push_back(to_int(tok[k], line, "dart"));
    } else {
      throw ParseError(line, "unknown record '" + kind + "'");
    }
  }
  if (!have_v) throw ParseError(line, "missing V line");
  for (int v = 0; v < d.vertex_count; ++v)
    if (!seen_rotation[v]) throw ParseError(line, "missing rotation for vertex " + std::to_string(v));
  for (auto& rot : d.rotation)
    for (DartId x : rot)
      if (x >= 2 * static_cast<int>(d.edges.size())) throw ParseError(line, "dart " + std::to_string(x) + " out of range");
  try {
    return SurfaceMap::build(std::move(d));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

SurfaceMap parse_smap_string(const std::string& text) {
  std::istringstream in(text);
  return parse_smap(in);
}

SurfaceMap read_smap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_smap(in);
}

std::string emit_smap(const SurfaceMap& map) {
  std::ostringstream out;
  out << "V " << map.vertex_count() << '\n';
  for (EdgeId e = 0; e < map.edge_count(); ++e) {
    const Edge& ed = map.edge(e);
    out << "E " << e << ' ' << ed.u << ' ' << ed.v << ' ' << (ed.sign > 0 ? '+' : '-') << '\n';
  }
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    out << "R " << v << ':';
    for (DartId d : map.rotation(v)) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

void write_smap_file(const SurfaceMap& map, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::PreconditionViolated, "cannot write " + path);
  out << emit_smap(map);
}

}  // namespace wvmaps
