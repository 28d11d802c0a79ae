#pragma once

#include <string>
#include <variant>
#include <vector>

#include "owlkit/class_expression.hpp"

namespace owlkit {

// A rule variable, written ?name in rule text.
struct Variable {
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using IndividualArgument = std::variant<Variable, Individual>;
using DataArgument = std::variant<Variable, Literal>;

struct ClassAtom {
  ClassExpression cls;
  IndividualArgument arg;

  friend bool operator==(const ClassAtom&, const ClassAtom&) = default;
};

struct ObjectPropertyAtom {
  ObjectPropertyExpression property;
  IndividualArgument first;
  IndividualArgument second;

  friend bool operator==(const ObjectPropertyAtom&,
                         const ObjectPropertyAtom&) = default;
};

struct DataPropertyAtom {
  DataProperty property;
  IndividualArgument subject;
  DataArgument value;

  friend bool operator==(const DataPropertyAtom&,
                         const DataPropertyAtom&) = default;
};

using SWRLAtom = std::variant<ClassAtom, ObjectPropertyAtom, DataPropertyAtom>;

// body -> head. Construction enforces safety: every head variable must occur
// in the body.
class SWRLRule {
 public:
  SWRLRule(std::vector<SWRLAtom> body, std::vector<SWRLAtom> head);

  const std::vector<SWRLAtom>& body() const { return body_; }
  const std::vector<SWRLAtom>& head() const { return head_; }

  friend bool operator==(const SWRLRule&, const SWRLRule&) = default;

 private:
  std::vector<SWRLAtom> body_;
  std::vector<SWRLAtom> head_;
};

// Variables of the atoms in order of first occurrence.
std::vector<Variable> variables_of(const std::vector<SWRLAtom>& atoms);

}  // namespace owlkit
