#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twsparse {

using VertexId = int;
using EdgeId = int;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant that the algorithm relies on does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Cut-matching game protocol violation (bad partition or matching).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// A vertex-set pair cannot be routed. Carries a Menger cut witness.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::vector<VertexId> cut)
      : Error(what), cut_(std::move(cut)) {}

  const std::vector<VertexId>& cut() const noexcept { return cut_; }

 private:
  std::vector<VertexId> cut_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class VersionError : public Error {
 public:
  using Error::Error;
};

}  // namespace twsparse
