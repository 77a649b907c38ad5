#pragma once

#include <stdexcept>
#include <string>

namespace plgeom {

// An iterative solver ran out of its iteration budget.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read, parsed, or written.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plgeom
