#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "owlkit/class_expression.hpp"
#include "owlkit/swrl.hpp"

namespace owlkit {

enum class AxiomKind : std::uint8_t {
  Declaration,
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  ClassAssertion,
  ObjectPropertyAssertion,
  DataPropertyAssertion,
  SubObjectPropertyOf,
  InverseObjectProperties,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  FunctionalObjectProperty,
  DataPropertyDomain,
  DataPropertyRange,
  AnnotationAssertion,
  SWRLRule,
};

inline constexpr std::size_t kAxiomKindCount = 16;

// Functional-syntax keyword; SWRLRule maps to "DLSafeRule".
std::string_view to_string(AxiomKind kind);
const std::array<AxiomKind, kAxiomKindCount>& all_axiom_kinds();

struct Declaration {
  Entity entity;
  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct SubClassOf {
  ClassExpression sub;
  ClassExpression sup;
  friend bool operator==(const SubClassOf&, const SubClassOf&) = default;
};

// EquivalentClasses / DisjointClasses; at least two members.
template <AxiomKind K>
struct ClassSetAxiom {
  static constexpr AxiomKind kKind = K;
  std::vector<ClassExpression> members;

  explicit ClassSetAxiom(std::vector<ClassExpression> m);
  ClassSetAxiom(Unchecked, std::vector<ClassExpression> m)
      : members(std::move(m)) {}

  friend bool operator==(const ClassSetAxiom&, const ClassSetAxiom&) = default;
};

using EquivalentClasses = ClassSetAxiom<AxiomKind::EquivalentClasses>;
using DisjointClasses = ClassSetAxiom<AxiomKind::DisjointClasses>;

struct ClassAssertion {
  Individual individual;
  ClassExpression cls;
  friend bool operator==(const ClassAssertion&,
                         const ClassAssertion&) = default;
};

struct ObjectPropertyAssertion {
  ObjectPropertyExpression property;
  Individual subject;
  Individual object;
  friend bool operator==(const ObjectPropertyAssertion&,
                         const ObjectPropertyAssertion&) = default;
};

struct DataPropertyAssertion {
  DataProperty property;
  Individual subject;
  Literal value;
  friend bool operator==(const DataPropertyAssertion&,
                         const DataPropertyAssertion&) = default;
};

struct SubObjectPropertyOf {
  ObjectPropertyExpression sub;
  ObjectPropertyExpression sup;
  friend bool operator==(const SubObjectPropertyOf&,
                         const SubObjectPropertyOf&) = default;
};

struct InverseObjectProperties {
  ObjectPropertyExpression first;
  ObjectPropertyExpression second;
  friend bool operator==(const InverseObjectProperties&,
                         const InverseObjectProperties&) = default;
};

template <AxiomKind K>
struct ObjectPropertyCharacteristicCE {
  static constexpr AxiomKind kKind = K;
  ObjectPropertyExpression property;
  ClassExpression cls;
  friend bool operator==(const ObjectPropertyCharacteristicCE&,
                         const ObjectPropertyCharacteristicCE&) = default;
};

using ObjectPropertyDomain =
    ObjectPropertyCharacteristicCE<AxiomKind::ObjectPropertyDomain>;
using ObjectPropertyRange =
    ObjectPropertyCharacteristicCE<AxiomKind::ObjectPropertyRange>;

struct FunctionalObjectProperty {
  ObjectPropertyExpression property;
  friend bool operator==(const FunctionalObjectProperty&,
                         const FunctionalObjectProperty&) = default;
};

struct DataPropertyDomain {
  DataProperty property;
  ClassExpression domain;
  friend bool operator==(const DataPropertyDomain&,
                         const DataPropertyDomain&) = default;
};

struct DataPropertyRange {
  DataProperty property;
  DataRange range;
  friend bool operator==(const DataPropertyRange&,
                         const DataPropertyRange&) = default;
};

using AnnotationValue = std::variant<Literal, IRI>;

struct AnnotationAssertion {
  AnnotationProperty property;
  IRI subject;
  AnnotationValue value;
  friend bool operator==(const AnnotationAssertion&,
                         const AnnotationAssertion&) = default;
};

struct SWRLRuleAxiom {
  SWRLRule rule;
  friend bool operator==(const SWRLRuleAxiom&, const SWRLRuleAxiom&) = default;
};

// Alternatives are ordered as in AxiomKind.
using AxiomVariant =
    std::variant<Declaration, SubClassOf, EquivalentClasses, DisjointClasses,
                 ClassAssertion, ObjectPropertyAssertion, DataPropertyAssertion,
                 SubObjectPropertyOf, InverseObjectProperties,
                 ObjectPropertyDomain, ObjectPropertyRange,
                 FunctionalObjectProperty, DataPropertyDomain,
                 DataPropertyRange, AnnotationAssertion, SWRLRuleAxiom>;

// Immutable, structurally compared axiom value with a cached hash.
class Axiom {
 public:
  template <class T>
    requires std::is_constructible_v<AxiomVariant, T>
  Axiom(T alternative);  // NOLINT

  AxiomKind kind() const {
    return static_cast<AxiomKind>(node_->value.index());
  }
  std::size_t hash() const { return node_->hash; }
  const AxiomVariant& variant() const { return node_->value; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_->value);
  }
  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), node_->value);
  }

  friend bool operator==(const Axiom& a, const Axiom& b);

 private:
  struct Node {
    AxiomVariant value;
    std::size_t hash;
  };
  static std::size_t compute_hash(const AxiomVariant& v);

  std::shared_ptr<const Node> node_;
};

template <class T>
  requires std::is_constructible_v<AxiomVariant, T>
Axiom::Axiom(T alternative) {
  AxiomVariant v(std::move(alternative));
  const auto h = compute_hash(v);
  node_ = std::make_shared<const Node>(Node{std::move(v), h});
}

// Entities occurring syntactically in the value, deduplicated, in order of
// first occurrence. owl:Thing / owl:Nothing are included when mentioned.
std::vector<Entity> signature_of(const ClassExpression& ce);
std::vector<Entity> signature_of(const Axiom& axiom);

std::ostream& operator<<(std::ostream& os, const Axiom& axiom);

}  // namespace owlkit

template <>
struct std::hash<owlkit::Axiom> {
  std::size_t operator()(const owlkit::Axiom& a) const noexcept {
    return a.hash();
  }
};
