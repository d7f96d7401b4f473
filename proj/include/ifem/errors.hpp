#pragma once

#include <stdexcept>
#include <string>

namespace ifem {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameterError : Error { using Error::Error; };
struct InvalidMeshError : Error { using Error::Error; };

// The interface violates the single-crossing-per-edge assumption on some
// element; refine the mesh.
struct MeshTooCoarseError : Error { using Error::Error; };

struct DomainError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  int line;
};

struct DefinitenessError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct RangeExhaustedError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

}  // namespace ifem
