#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvmaps {

enum class ErrorKind {
  MalformedRotation,
  BadEndpoint,
  Disconnected,
  NotSimpleCycle,
  VertexNotOnFace,
  LoopContraction,
  NotSimpleGraph,
  SurfaceNotApplicable,
  SameVertex,
  ComponentsNotDistinct,
  PreconditionViolated,
  BoundViolated,
  PathsNotDisjoint,
  NonTransitiveHomotopy,
  NoBoundingPair,
  RevisitNotContractible,
  SystemTooSmall,
  CofacialEndpoints,
  ClassTooSmall,
  InstanceTooLarge,
  RerouteFailed,
  GenusTooSmall,
  BadGenus,
  NotPolyhedral,
  ParseError,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures also carry the 1-based line number (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace wvmaps
