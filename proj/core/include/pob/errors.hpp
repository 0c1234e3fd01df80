#pragma once

#include <stdexcept>
#include <string>

namespace pob {

// Base error for everything raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Handle attachment refers to an unknown or already consumed mark.
struct BadSlot : Error {
  explicit BadSlot(const std::string& msg) : Error(msg) {}
};

// Gluing signs cannot be oriented coherently.
struct NonOrientable : Error {
  explicit NonOrientable(const std::string& msg) : Error(msg) {}
};

// Word letters are not incident (a chord does not end where the next
// crossing enters).
struct NotIncident : Error {
  explicit NotIncident(const std::string& msg) : Error(msg) {}
};

// A curve required to be embedded has positive self-intersection.
struct NotEmbedded : Error {
  explicit NotEmbedded(const std::string& msg) : Error(msg) {}
};

// Monodromy images are not pairwise disjoint.
struct ImagesCollide : Error {
  explicit ImagesCollide(const std::string& msg) : Error(msg) {}
};

// The free part of the partial-handle boundary is degenerate.
struct DegeneratePartition : Error {
  explicit DegeneratePartition(const std::string& msg) : Error(msg) {}
};

// A stabilization arc is not properly embedded.
struct NotProperArc : Error {
  explicit NotProperArc(const std::string& msg) : Error(msg) {}
};

// Document text failed to parse.
struct SyntaxError : Error {
  SyntaxError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// Document parsed but the described object is invalid.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace pob
