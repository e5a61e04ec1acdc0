#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wvmaps/constructions.hpp"

namespace wvmaps {

struct Violation {
  std::string fixture;
  std::string tag;
  std::string detail;
  bool operator<(const Violation& o) const {
    return std::tie(fixture, tag, detail) < std::tie(o.fixture, o.tag, o.detail);
  }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::map<std::string, long> instances;  // per tag
  std::vector<Violation> violations;      // sorted
  std::vector<std::string> notes;         // reported values, sorted
  double seconds = 0;
};

struct VerifyOptions {
  int jobs = 1;
  std::optional<std::vector<Fixture>> corpus;  // default: fixture_corpus()
  std::vector<int> criteria;                   // default: all seven
  unsigned seed = 20240613;
  int reroute_trials = 1000;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  bool pass() const;
};

VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace wvmaps
