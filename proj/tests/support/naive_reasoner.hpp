#pragma once

#include <set>
#include <string>
#include <utility>

#include "generators.hpp"
#include "owlkit/reasoner.hpp"

namespace owlkit::testing {

// Brute-force closed-world evaluator written from the retrieval semantics
// alone: string sets, fixpoint closures over pair sets and linear scans of
// the assertions. Shares no code with Snapshot.
class NaiveReasoner {
 public:
  NaiveReasoner(const Ontology& onto, ReasonerConfig config);

  std::set<std::string> instances(const ClassExpression& ce) const;
  bool class_subsumed(const std::string& sub, const std::string& sup) const;
  // r(x, y) after saturation.
  bool edge(const std::string& x, const ObjectPropertyExpression& r,
            const std::string& y) const;

 private:
  using Prop = std::pair<std::string, bool>;

  bool prop_subsumed(const Prop& sub, const Prop& sup) const;
  std::set<std::string> named(const std::string& c) const;
  std::set<Literal> data_values(const std::string& x,
                                const DataProperty& d) const;

  const Ontology& onto_;
  ReasonerConfig config_;
  std::set<std::string> universe_;
  std::set<std::pair<std::string, std::string>> class_le_;
  std::set<std::pair<Prop, Prop>> prop_le_;
};

// A random ontology for reasoner checks: ABox with named TBox, inverse
// assertions and occasional owl:Thing / owl:Nothing / complex types.
struct ReasonerCase {
  Vocabulary vocab;
  Ontology onto;
};
ReasonerCase random_reasoner_case(Rng& rng, std::size_t max_individuals = 30);

}  // namespace owlkit::testing
