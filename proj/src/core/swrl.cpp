#include "owlkit/swrl.hpp"

#include <algorithm>

#include "owlkit/errors.hpp"

namespace owlkit {

namespace {

void add_variable(std::vector<Variable>& out, const Variable& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

template <class Arg>
void collect(std::vector<Variable>& out, const Arg& arg) {
  if (const auto* v = std::get_if<Variable>(&arg)) add_variable(out, *v);
}

}  // namespace

std::vector<Variable> variables_of(const std::vector<SWRLAtom>& atoms) {
  std::vector<Variable> out;
  for (const auto& atom : atoms) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ClassAtom>) {
            collect(out, a.arg);
          } else if constexpr (std::is_same_v<T, ObjectPropertyAtom>) {
            collect(out, a.first);
            collect(out, a.second);
          } else {
            collect(out, a.subject);
            collect(out, a.value);
          }
        },
        atom);
  }
  return out;
}

SWRLRule::SWRLRule(std::vector<SWRLAtom> body, std::vector<SWRLAtom> head)
    : body_(std::move(body)), head_(std::move(head)) {
  const auto bound = variables_of(body_);
  for (const auto& v : variables_of(head_)) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
      throw ModelError("unsafe rule: head variable ?" + v.name +
                       " does not occur in the body");
    }
  }
}

}  // namespace owlkit
