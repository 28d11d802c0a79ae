#pragma once

#include <string>
#include <vector>

#include "owlkit/rdf_mapping.hpp"

namespace owlkit {

struct TurtleOptions {
  // Fail on unmappable axioms instead of skipping them with a warning.
  bool strict = false;
};

// Prefix header followed by one triple statement per line, grouped by
// subject in order of first appearance. Warnings for skipped axioms are
// appended to `warnings` when given.
std::string serialize_turtle(const Ontology& onto, TurtleOptions options = {},
                             std::vector<std::string>* warnings = nullptr);

std::string write_turtle(const std::vector<Triple>& triples,
                         const PrefixMap& prefixes = PrefixMap());

// Turtle escaping for the body of a "..." string.
std::string escape_turtle_string(std::string_view text);

}  // namespace owlkit
