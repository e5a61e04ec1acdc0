#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wvmaps/analysis.hpp"
#include "wvmaps/constructions.hpp"
#include "wvmaps/smap_io.hpp"
#include "wvmaps/verify.hpp"

using json = nlohmann::ordered_json;
using namespace wvmaps;

namespace {

constexpr int kPass = 0, kViolation = 1, kInputError = 2;

json summary_json(const MapSummary& s) {
  json j;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  j["euler_char"] = s.euler_char;
  j["orientable"] = s.orientable;
  j["polyhedral"] = s.polyhedral.polyhedral;
  if (!s.polyhedral.polyhedral) {
    j["reason"] = to_string(s.polyhedral.reason);
    j["detail"] = s.polyhedral.detail;
  }
  return j;
}

void print_summary(const MapSummary& s) {
  std::cout << "vertices " << s.vertices << ", edges " << s.edges << ", faces " << s.faces << "\n"
            << "euler characteristic " << s.euler_char << ", " << (s.orientable ? "orientable" : "non-orientable")
            << "\n";
  if (s.polyhedral.polyhedral)
    std::cout << "polyhedral\n";
  else
    std::cout << "not polyhedral: " << to_string(s.polyhedral.reason) << " (" << s.polyhedral.detail << ")\n";
}

json path_json(const XYPath& p) { return p.vertices; }

std::string path_text(const XYPath& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? " " : "") << p.vertices[i];
  return out.str();
}

json check_json(const BoundCheck& c) {
  return {{"tag", c.tag}, {"what", c.what}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"pass", c.pass}};
}

json pair_json(const PairReport& r) {
  json j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["cofacial"] = r.cofacial;
  j["kappa"] = r.kappa;
  if (r.cofacial) {
    j["wv_paths"] = json::array();
    for (auto& p : r.cofacial_paths) j["wv_paths"].push_back(path_json(p));
  } else {
    j["class_count"] = r.class_count;
    j["class_sizes"] = r.class_sizes;
    j["initial_revisits"] = r.initial_r;
    j["minimized_revisits"] = r.minimized_r;
    j["reroute_steps"] = r.reroute_steps;
  }
  j["wv_exists"] = r.wv_exists ? json(*r.wv_exists) : json(nullptr);
  j["wv_example"] = r.wv_example ? path_json(*r.wv_example) : json(nullptr);
  j["wv_count"] = r.wv_count ? json(*r.wv_count) : json(nullptr);
  j["wv_disjoint"] = r.wv_disjoint ? json(*r.wv_disjoint) : json(nullptr);
  j["checks"] = json::array();
  for (auto& c : r.checks) j["checks"].push_back(check_json(c));
  return j;
}

void print_pair(const PairReport& r) {
  std::cout << "pair " << r.x << " " << r.y << ": kappa " << r.kappa << "\n";
  if (r.cofacial) {
    std::cout << "cofacial; W_v-paths:\n";
    for (auto& p : r.cofacial_paths) std::cout << "  " << path_text(p) << "\n";
    return;
  }
  std::cout << "homotopy classes " << r.class_count << " (sizes";
  for (int s : r.class_sizes) std::cout << " " << s;
  std::cout << ")\n";
  std::cout << "revisit number " << r.initial_r << " -> " << r.minimized_r << " after " << r.reroute_steps
            << " reroute step(s)\n";
  if (r.wv_exists) {
    std::cout << "W_v-path: " << (*r.wv_exists ? path_text(*r.wv_example) : std::string("none")) << "\n";
  } else {
    std::cout << "W_v-path: not searched (above cutoff)\n";
  }
  if (r.wv_count) {
    std::cout << "W_v-paths counted: " << *r.wv_count << (*r.wv_count >= PairReport::wv_count_cap ? "+" : "") << "\n";
  }
  if (r.wv_disjoint) std::cout << "disjoint W_v-paths: " << *r.wv_disjoint << "\n";
  for (auto& c : r.checks)
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.tag << " " << c.what << ": " << c.lhs << " " << c.relation << " "
              << c.rhs << "\n";
}

json verify_json(const VerifyReport& rep) {
  json j;
  j["pass"] = rep.pass();
  std::map<std::string, long> totals;
  j["criteria"] = json::array();
  for (auto& c : rep.criteria) {
    json cj;
    cj["id"] = c.id;
    cj["title"] = c.title;
    cj["pass"] = c.pass;
    cj["instances"] = c.instances;
    cj["violations"] = json::array();
    for (auto& v : c.violations) cj["violations"].push_back({{"fixture", v.fixture}, {"tag", v.tag}, {"detail", v.detail}});
    cj["notes"] = c.notes;
    for (auto& [k, n] : c.instances) totals[k] += n;
    j["criteria"].push_back(std::move(cj));
  }
  j["tags"] = totals;
  return j;
}

std::vector<int> parse_suite(const std::string& suite) {
  if (suite == "all") return {};
  std::vector<int> ids;
  std::stringstream ss(suite);
  for (std::string tok; std::getline(ss, tok, ',');) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(tok, &used);
      if (used != tok.size()) id = 0;
    } catch (const std::exception&) {
    }
    if (id < 1 || id > 7) throw Error(ErrorKind::PreconditionViolated, "bad suite '" + suite + "' (use all or 1..7)");
    ids.push_back(id);
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral maps, revisit analysis and W_v-paths"};
  app.require_subcommand(1);

  std::string file, out;
  bool as_json = false, exhaustive = false;

  auto* check = app.add_subcommand("check", "summarize a .smap file and decide polyhedrality");
  check->add_option("file", file)->required();
  check->add_flag("--json", as_json);

  VertexId x = -1, y = -1;
  auto* analyze = app.add_subcommand("analyze", "analyze a vertex pair");
  analyze->add_option("file", file)->required();
  analyze->add_option("x", x)->required();
  analyze->add_option("y", y)->required();
  analyze->add_flag("--exhaustive", exhaustive, "count and pack W_v-paths (vertex cutoff WVMAPS_CUTOFF)");
  analyze->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("gen", "write a generated map");
  gen->require_subcommand(1);
  bool orientable = false, nonorientable = false;
  int genus = 0;
  auto* gen_gamma = gen->add_subcommand("gamma", "counterexample construction");
  auto* o_flag = gen_gamma->add_flag("--orientable", orientable);
  gen_gamma->add_flag("--nonorientable,-n", nonorientable)->excludes(o_flag);
  gen_gamma->add_option("-g,--genus", genus)->required();
  gen_gamma->add_option("-o,--output", out)->required();
  std::string fixture_name;
  auto* gen_fixture = gen->add_subcommand("fixture", "named corpus map");
  gen_fixture->add_option("--name", fixture_name)->required();
  gen_fixture->add_option("-o,--output", out)->required();

  std::string suite = "all";
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite, "all, or a comma list of criteria 1..7");
  verify->add_flag("--json", as_json);
  verify->add_option("--jobs,-j", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) {
      MapSummary s = summarize(read_smap_file(file));
      if (as_json)
        std::cout << summary_json(s).dump(2) << "\n";
      else
        print_summary(s);
      return s.polyhedral.polyhedral ? kPass : kViolation;
    }

    if (*analyze) {
      SurfaceMap map = read_smap_file(file);
      MapSummary s = summarize(map);
      PairReport r;
      try {
        r = analyze_pair(map, x, y, exhaustive);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotPolyhedral) throw;
        if (as_json) {
          json j{{"map", summary_json(s)}, {"pairs", json::array()}, {"violations", {e.what()}}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cerr << e.what() << "\n";
        }
        return kViolation;
      }
      if (as_json) {
        json j{{"map", summary_json(s)}, {"pairs", {pair_json(r)}}, {"violations", r.violations}};
        std::cout << j.dump(2) << "\n";
      } else {
        print_summary(s);
        print_pair(r);
        for (auto& v : r.violations) std::cout << "violation: " << v << "\n";
      }
      return r.ok() ? kPass : kViolation;
    }

    if (*gen_gamma || *gen_fixture) {
      SurfaceMap map;
      std::map<std::string, VertexId> labels;
      if (*gen_gamma) {
        if (!orientable && !nonorientable) throw Error(ErrorKind::BadGenus, "pick --orientable or --nonorientable");
        Gamma g = orientable ? gamma_orientable(genus)
                  : genus % 2 == 0 ? gamma_nonorientable_even(genus)
                                   : gamma_nonorientable_odd(genus);
        map = std::move(g.map);
        labels = std::move(g.spec.labels);
      } else {
        map = fixture_by_name(fixture_name).map;
      }
      write_smap_file(map, out);
      std::cout << "wrote " << out << ": " << map.vertex_count() << " vertices, " << map.edge_count() << " edges, "
                << map.face_count() << " faces, chi " << map.euler_char() << "\n";
      // Labels sorted by vertex for readability.
      std::vector<std::pair<VertexId, std::string>> by_vertex;
      for (auto& [name, v] : labels) by_vertex.emplace_back(v, name);
      std::sort(by_vertex.begin(), by_vertex.end());
      for (auto& [v, name] : by_vertex) std::cout << name << " = " << v << "\n";
      return kPass;
    }

    if (*verify) {
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.criteria = parse_suite(suite);
      VerifyReport rep = run_verification(opts);
      if (as_json) {
        std::cout << verify_json(rep).dump(2) << "\n";
      } else {
        for (auto& c : rep.criteria) {
          std::printf("criterion %d: %s  %s (%.1fs)\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.seconds);
          for (auto& [tag, n] : c.instances) std::printf("    %-24s %ld\n", tag.c_str(), n);
          for (auto& v : c.violations)
            std::printf("    violation %s %s: %s\n", v.fixture.c_str(), v.tag.c_str(), v.detail.c_str());
          for (auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
        }
      }
      return rep.pass() ? kPass : kViolation;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
