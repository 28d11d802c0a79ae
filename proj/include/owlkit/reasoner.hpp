#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "owlkit/errors.hpp"
#include "owlkit/ontology.hpp"

namespace owlkit {

class UnknownIndividual : public Error {
 public:
  explicit UnknownIndividual(const Individual& ind);
};

struct ReasonerConfig {
  // Propagate instances up the told class hierarchy and saturate property
  // successors by sub-properties and InverseObjectProperties. When false
  // no TBox axiom is consulted.
  bool infer_hierarchy = true;
  // Individuals without successors satisfy ∀r.C and DataAllValuesFrom.
  bool universal_vacuous = true;
};

struct DisjointnessViolation {
  Individual individual;
  ClassExpression first;
  ClassExpression second;

  friend bool operator==(const DisjointnessViolation&,
                         const DisjointnessViolation&) = default;
};

// Closed-world structural reasoner over an immutable copy of an ontology.
//
// Semantics: the universe is the set of individuals in the ontology
// signature. A named class C holds for x iff x has an asserted named type
// D with D ⊑* C. Complex class assertions, domain/range axioms, functional
// properties and SWRL rules contribute nothing. Distinct IRIs denote
// distinct individuals.
//
// All queries are const and may run concurrently.
class Snapshot {
 public:
  using Bits = boost::dynamic_bitset<>;

  Snapshot(const Ontology& onto, ReasonerConfig config = {});

  const ReasonerConfig& config() const { return config_; }
  // In order of first occurrence in the ontology.
  const std::vector<Individual>& universe() const { return universe_; }
  std::optional<std::size_t> index_of(const Individual& ind) const;

  // Result in universe order.
  std::vector<Individual> instances(const ClassExpression& ce) const;
  // Characteristic vector over universe().
  Bits instance_bits(const ClassExpression& ce) const;

  // Named types of an individual, owl:Nothing excluded. direct keeps only
  // the ⊑*-minimal ones. Sorted by IRI.
  std::vector<OWLClass> types(const Individual& ind, bool direct) const;

  // Strict sub/super classes (equivalents of c excluded); direct keeps the
  // covers relation only. owl:Nothing is never returned. Sorted by IRI.
  std::vector<OWLClass> sub_classes(const OWLClass& c, bool direct) const;
  std::vector<OWLClass> super_classes(const OWLClass& c, bool direct) const;
  std::vector<OWLClass> equivalent_classes(const OWLClass& c) const;
  // Told reflexive-transitive subsumption between named classes.
  bool subsumed_by(const OWLClass& sub, const OWLClass& sup) const;

  // Saturated successors, in universe order.
  std::vector<Individual> object_property_values(
      const Individual& ind, const ObjectPropertyExpression& p) const;
  // Asserted literals, in insertion order.
  std::vector<Literal> data_property_values(const Individual& ind,
                                            const DataProperty& p) const;

  // One entry per (individual, member pair) of every DisjointClasses axiom
  // whose two members both hold for the individual, in axiom order.
  std::vector<DisjointnessViolation> disjointness_violations() const;

 private:
  using Index = std::uint32_t;

  std::size_t class_id(const OWLClass& c) const;
  const std::vector<Index>& successors(Index x,
                                       const ObjectPropertyExpression& p) const;
  Index require(const Individual& ind) const;
  Bits named_bits(const OWLClass& c) const;
  Bits eval(const ClassExpression& ce) const;
  std::vector<OWLClass> sorted_classes(const std::vector<std::size_t>& ids)
      const;

  ReasonerConfig config_;
  std::vector<Individual> universe_;
  std::unordered_map<Individual, Index> index_;

  // Named classes: signature classes plus owl:Thing and owl:Nothing.
  std::vector<OWLClass> classes_;
  std::unordered_map<OWLClass, std::size_t> class_index_;
  std::size_t thing_id_ = 0;
  std::size_t nothing_id_ = 0;
  // up_[c] has bit d set iff c ⊑* d.
  std::vector<Bits> up_;
  // asserted_[c]: individuals with an asserted type c.
  std::vector<Bits> asserted_;

  // Keyed by (property, inverse); one sorted successor list per individual.
  std::unordered_map<ObjectPropertyExpression, std::vector<std::vector<Index>>>
      succ_;
  std::unordered_map<DataProperty, std::vector<std::vector<Literal>>> data_;
  std::vector<DisjointClasses> disjoint_axioms_;
};

inline Snapshot build_snapshot(const Ontology& onto,
                               ReasonerConfig config = {}) {
  return Snapshot(onto, config);
}

}  // namespace owlkit
