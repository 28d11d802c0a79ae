#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "owlkit/errors.hpp"
#include "owlkit/ontology.hpp"

namespace owlkit {

struct BlankNode {
  std::uint64_t id;
  std::string label() const { return "_:b" + std::to_string(id); }
  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
};

// Subjects are IRIs or blank nodes; objects may also be literals.
using RdfNode = std::variant<IRI, BlankNode, Literal>;

struct Triple {
  RdfNode subject;
  IRI predicate;
  RdfNode object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

class Unmappable : public Error {
 public:
  explicit Unmappable(const Axiom& axiom);
};

// Standard OWL 2 → RDF mapping. Complex class expressions and data ranges
// become fresh blank nodes. One mapper instance is one blank-node scope:
// labels count up from _:b0 across every call on the same instance.
class TripleMapper {
 public:
  // Throws Unmappable for SWRL rules.
  std::vector<Triple> map(const Axiom& axiom);

 private:
  std::uint64_t next_blank_ = 0;
};

std::vector<Triple> map_axiom_to_triples(const Axiom& axiom);

// Maps every axiom in insertion order within one blank-node scope. SWRL rules
// are skipped and counted in `skipped` unless `strict`, in which case
// Unmappable propagates.
std::vector<Triple> map_ontology_to_triples(const Ontology& onto,
                                            bool strict = false,
                                            std::size_t* skipped = nullptr);

}  // namespace owlkit
