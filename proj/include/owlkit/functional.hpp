#pragma once

#include <string>
#include <string_view>

#include "owlkit/ontology.hpp"

// OWL 2 Functional-Style Syntax, restricted to the constructs of the data
// model. Anything else is rejected with an "unsupported construct" error.
namespace owlkit {

// Throws ParseError (with line/column) on lexical, syntax and unknown-prefix
// errors.
Ontology parse_functional(std::string_view text);

// Prefixes first, then one axiom per line in insertion order.
std::string serialize_functional(const Ontology& onto);

// Single-value forms. IRIs are abbreviated through `prefixes` when possible.
std::string to_functional(const ClassExpression& ce,
                          const PrefixMap& prefixes = PrefixMap());
std::string to_functional(const DataRange& range,
                          const PrefixMap& prefixes = PrefixMap());
std::string to_functional(const Axiom& axiom,
                          const PrefixMap& prefixes = PrefixMap());
std::string to_functional(const Literal& literal,
                          const PrefixMap& prefixes = PrefixMap());

ClassExpression parse_functional_expression(
    std::string_view text, const PrefixMap& prefixes = PrefixMap());
Axiom parse_functional_axiom(std::string_view text,
                             const PrefixMap& prefixes = PrefixMap());

}  // namespace owlkit
