#include "crisp_scorer.hpp"

namespace owlkit::testing {

CrispScorer::CrispScorer(const Snapshot& snapshot) : snapshot_(snapshot) {}

double CrispScorer::probability(const std::string& head,
                                const std::string& relation,
                                const std::string& tail) const {
  const Individual x(head);
  if (!snapshot_.index_of(x)) return 0.0;
  if (relation == ebr::kTypeRelation) {
    const auto bits = snapshot_.instance_bits(OWLClass(tail));
    return bits.test(*snapshot_.index_of(x)) ? 1.0 : 0.0;
  }
  for (const auto& y :
       snapshot_.object_property_values(x, OPE(ObjectProperty(relation)))) {
    if (y.iri.str() == tail) return 1.0;
  }
  return 0.0;
}

}  // namespace owlkit::testing
