#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pob/openbook.hpp"

namespace pob {

// Fixture assertion carried by a document: a key, integer values (or a
// yes/no flag), and an optional note describing how the expected value
// was obtained.
struct Expectation {
  std::string key;
  std::vector<long long> values;
  std::optional<bool> flag;
  std::string note;
};

struct PobDocument {
  PartialOpenBook book;
  std::vector<Expectation> expectations;
};

// Parses a .pob document.  Throws SyntaxError with a line number for
// malformed text and, when strict, ValidationError if the described book
// fails any defining condition.  Lenient parsing still requires the
// complexes and words to build, so the book can be inspected and its
// failures reported.
PobDocument parse_document(const std::string& text, bool strict = true);

// Canonical text: parse(print(x)) reproduces x exactly.
std::string print_document(const PobDocument& doc);
std::string print_book(const PartialOpenBook& book);

// Word syntax helpers shared by the CLI (words are written against the
// assembled surface of a book).
std::string print_word(const PartialOpenBook& book, const EdgeWord& w);
EdgeWord parse_word(const PartialOpenBook& book, const std::string& text);

}  // namespace pob
