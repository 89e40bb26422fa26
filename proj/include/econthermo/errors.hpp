#pragma once

#include <stdexcept>
#include <string>

namespace econthermo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the admissible domain (non-positive coordinate, bad bounds, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input inconsistent with the model it is used with, e.g. a point off the EOS surface.
class ModelError : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to converge or lost its bracket.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace econthermo
