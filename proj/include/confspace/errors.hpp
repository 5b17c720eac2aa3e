#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace confspace {

// Base for every error raised by the library. Callers that only care about
// "did the pipeline fail" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph files, configuration JSON). `line` is 1-based,
// 0 when the problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

// Enumeration would exceed the configured cell cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A configuration has no combinatorics: a token sits on S_delta or two
// tokens share a vertex component. `token` names the offending token.
class NoCombinatorics : public Error {
 public:
  NoCombinatorics(std::size_t token, const std::string& what) : Error(what), token_(token) {}
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

// The graph is not subdivided finely enough for the requested operation.
class NotSufficientlySubdivided : public Error {
 public:
  using Error::Error;
};

// A generator or standard move could not be constructed from its inputs.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace confspace
