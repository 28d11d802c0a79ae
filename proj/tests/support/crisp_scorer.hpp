#pragma once

#include <string>

#include "owlkit/ebr.hpp"
#include "owlkit/reasoner.hpp"

namespace owlkit::testing {

// 0/1 probabilities equal to the reasoner's characteristic functions:
// (x, type, C) holds iff x ∈ instances(C) and (x, r, y) iff y is a saturated
// r-successor of x. Knows every symbol.
class CrispScorer : public ebr::TripleScorer {
 public:
  explicit CrispScorer(const Snapshot& snapshot);

  double probability(const std::string& head, const std::string& relation,
                     const std::string& tail) const override;
  bool knows_class(const std::string&) const override { return true; }
  bool knows_relation(const std::string&) const override { return true; }

 private:
  const Snapshot& snapshot_;
};

}  // namespace owlkit::testing
