#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "owlkit/entity.hpp"
#include "owlkit/literal.hpp"

namespace owlkit {

// A named object property or its inverse. Inverse(Inverse(p)) is p: the
// representation is a flag, so double inversion cannot be expressed.
struct ObjectPropertyExpression {
  ObjectProperty property;
  bool inverse = false;

  ObjectPropertyExpression(ObjectProperty p, bool inv = false)  // NOLINT
      : property(std::move(p)), inverse(inv) {}

  ObjectPropertyExpression inverted() const { return {property, !inverse}; }

  friend bool operator==(const ObjectPropertyExpression&,
                         const ObjectPropertyExpression&) = default;
  friend auto operator<=>(const ObjectPropertyExpression&,
                          const ObjectPropertyExpression&) = default;
};

using OPE = ObjectPropertyExpression;

// ---------------------------------------------------------------------------
// Data ranges

enum class Facet : std::uint8_t {
  MinInclusive,
  MinExclusive,
  MaxInclusive,
  MaxExclusive,
};

// "minInclusive" etc.
std::string_view to_string(Facet facet);
IRI facet_iri(Facet facet);

struct FacetRestriction {
  Facet facet;
  Literal value;

  bool satisfied_by(const Literal& literal) const;

  friend bool operator==(const FacetRestriction&,
                         const FacetRestriction&) = default;
};

// Numeric base datatype restricted by one or more comparison facets.
struct DatatypeRestriction {
  Datatype base;
  std::vector<FacetRestriction> facets;

  DatatypeRestriction(Datatype b, std::vector<FacetRestriction> f);

  friend bool operator==(const DatatypeRestriction&,
                         const DatatypeRestriction&) = default;
};

struct DataOneOf {
  std::vector<Literal> values;

  explicit DataOneOf(std::vector<Literal> v);

  friend bool operator==(const DataOneOf&, const DataOneOf&) = default;
};

class DataRange {
 public:
  using Variant = std::variant<Datatype, DatatypeRestriction, DataOneOf>;

  DataRange(Datatype d) : v_(std::move(d)) {}                 // NOLINT
  DataRange(DatatypeRestriction r) : v_(std::move(r)) {}      // NOLINT
  DataRange(DataOneOf o) : v_(std::move(o)) {}                // NOLINT

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  // Closed-world membership test of a single literal.
  bool contains(const Literal& literal) const;

  friend bool operator==(const DataRange&, const DataRange&) = default;

 private:
  Variant v_;
};

// ---------------------------------------------------------------------------
// Class expressions

enum class CEKind : std::uint8_t {
  Class,
  ObjectIntersectionOf,
  ObjectUnionOf,
  ObjectComplementOf,
  ObjectSomeValuesFrom,
  ObjectAllValuesFrom,
  ObjectHasValue,
  ObjectOneOf,
  ObjectMinCardinality,
  ObjectMaxCardinality,
  ObjectExactCardinality,
  DataSomeValuesFrom,
  DataAllValuesFrom,
  DataHasValue,
};

// Functional-syntax constructor name, e.g. "ObjectSomeValuesFrom".
std::string_view to_string(CEKind kind);

// Tag for the unchecked factories used by deserializers; the result must be
// passed through validate_expression before use.
struct Unchecked {};
inline constexpr Unchecked kUnchecked{};

template <class T>
struct IsCEAlternative : std::false_type {};
template <>
struct IsCEAlternative<OWLClass> : std::true_type {};

// Immutable, structurally compared handle to a class expression tree.
// Copies share the underlying node.
class ClassExpression {
 public:
  struct Node;

  template <class T>
    requires IsCEAlternative<T>::value
  ClassExpression(T alternative);  // NOLINT

  CEKind kind() const;
  std::size_t hash() const;

  template <class T>
  const T* get_if() const;
  template <class T>
  bool is() const {
    return get_if<T>() != nullptr;
  }
  template <class F>
  decltype(auto) visit(F&& f) const;

  bool is_named() const { return kind() == CEKind::Class; }
  bool is_thing() const;
  bool is_nothing() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);

 private:
  std::shared_ptr<const Node> node_;
};

template <CEKind K>
struct ObjectNaryBoolean {
  static constexpr CEKind kKind = K;
  std::vector<ClassExpression> operands;

  // Requires at least two operands.
  explicit ObjectNaryBoolean(std::vector<ClassExpression> ops);
  ObjectNaryBoolean(Unchecked, std::vector<ClassExpression> ops)
      : operands(std::move(ops)) {}

  friend bool operator==(const ObjectNaryBoolean&,
                         const ObjectNaryBoolean&) = default;
};

using ObjectIntersectionOf = ObjectNaryBoolean<CEKind::ObjectIntersectionOf>;
using ObjectUnionOf = ObjectNaryBoolean<CEKind::ObjectUnionOf>;

struct ObjectComplementOf {
  static constexpr CEKind kKind = CEKind::ObjectComplementOf;
  ClassExpression operand;

  friend bool operator==(const ObjectComplementOf&,
                         const ObjectComplementOf&) = default;
};

template <CEKind K>
struct ObjectQuantifier {
  static constexpr CEKind kKind = K;
  ObjectPropertyExpression property;
  ClassExpression filler;

  friend bool operator==(const ObjectQuantifier&,
                         const ObjectQuantifier&) = default;
};

using ObjectSomeValuesFrom = ObjectQuantifier<CEKind::ObjectSomeValuesFrom>;
using ObjectAllValuesFrom = ObjectQuantifier<CEKind::ObjectAllValuesFrom>;

struct ObjectHasValue {
  static constexpr CEKind kKind = CEKind::ObjectHasValue;
  ObjectPropertyExpression property;
  Individual individual;

  friend bool operator==(const ObjectHasValue&,
                         const ObjectHasValue&) = default;
};

struct ObjectOneOf {
  static constexpr CEKind kKind = CEKind::ObjectOneOf;
  std::vector<Individual> individuals;

  // Requires at least one individual.
  explicit ObjectOneOf(std::vector<Individual> inds);
  ObjectOneOf(Unchecked, std::vector<Individual> inds)
      : individuals(std::move(inds)) {}

  friend bool operator==(const ObjectOneOf&, const ObjectOneOf&) = default;
};

template <CEKind K>
struct ObjectCardinality {
  static constexpr CEKind kKind = K;
  std::int64_t cardinality;
  ObjectPropertyExpression property;
  ClassExpression filler;

  // Requires cardinality >= 0.
  ObjectCardinality(std::int64_t n, ObjectPropertyExpression p,
                    ClassExpression f);
  ObjectCardinality(Unchecked, std::int64_t n, ObjectPropertyExpression p,
                    ClassExpression f)
      : cardinality(n), property(std::move(p)), filler(std::move(f)) {}

  friend bool operator==(const ObjectCardinality&,
                         const ObjectCardinality&) = default;
};

using ObjectMinCardinality = ObjectCardinality<CEKind::ObjectMinCardinality>;
using ObjectMaxCardinality = ObjectCardinality<CEKind::ObjectMaxCardinality>;
using ObjectExactCardinality =
    ObjectCardinality<CEKind::ObjectExactCardinality>;

template <CEKind K>
struct DataQuantifier {
  static constexpr CEKind kKind = K;
  DataProperty property;
  DataRange range;

  friend bool operator==(const DataQuantifier&,
                         const DataQuantifier&) = default;
};

using DataSomeValuesFrom = DataQuantifier<CEKind::DataSomeValuesFrom>;
using DataAllValuesFrom = DataQuantifier<CEKind::DataAllValuesFrom>;

struct DataHasValue {
  static constexpr CEKind kKind = CEKind::DataHasValue;
  DataProperty property;
  Literal value;

  friend bool operator==(const DataHasValue&, const DataHasValue&) = default;
};

// Alternatives are ordered as in CEKind, so variant::index() == kind.
using CEVariant =
    std::variant<OWLClass, ObjectIntersectionOf, ObjectUnionOf,
                 ObjectComplementOf, ObjectSomeValuesFrom, ObjectAllValuesFrom,
                 ObjectHasValue, ObjectOneOf, ObjectMinCardinality,
                 ObjectMaxCardinality, ObjectExactCardinality,
                 DataSomeValuesFrom, DataAllValuesFrom, DataHasValue>;

struct ClassExpression::Node {
  CEVariant value;
  std::size_t hash;
};

namespace detail {
std::size_t hash_ce_variant(const CEVariant& v);
}

template <CEKind K>
struct IsCEAlternative<ObjectNaryBoolean<K>> : std::true_type {};
template <CEKind K>
struct IsCEAlternative<ObjectQuantifier<K>> : std::true_type {};
template <CEKind K>
struct IsCEAlternative<ObjectCardinality<K>> : std::true_type {};
template <CEKind K>
struct IsCEAlternative<DataQuantifier<K>> : std::true_type {};
template <>
struct IsCEAlternative<ObjectComplementOf> : std::true_type {};
template <>
struct IsCEAlternative<ObjectHasValue> : std::true_type {};
template <>
struct IsCEAlternative<ObjectOneOf> : std::true_type {};
template <>
struct IsCEAlternative<DataHasValue> : std::true_type {};

template <class T>
  requires IsCEAlternative<T>::value
ClassExpression::ClassExpression(T alternative) {
  CEVariant v(std::move(alternative));
  const auto h = detail::hash_ce_variant(v);
  node_ = std::make_shared<const Node>(Node{std::move(v), h});
}

inline CEKind ClassExpression::kind() const {
  return static_cast<CEKind>(node_->value.index());
}

inline std::size_t ClassExpression::hash() const { return node_->hash; }

template <class T>
const T* ClassExpression::get_if() const {
  return std::get_if<T>(&node_->value);
}

template <class F>
decltype(auto) ClassExpression::visit(F&& f) const {
  return std::visit(std::forward<F>(f), node_->value);
}

// Convenience builders. The n-ary forms require >= 2 operands.
ClassExpression thing();
ClassExpression nothing();
ClassExpression make_and(std::vector<ClassExpression> operands);
ClassExpression make_or(std::vector<ClassExpression> operands);
ClassExpression make_not(ClassExpression operand);
ClassExpression make_some(ObjectPropertyExpression p, ClassExpression filler);
ClassExpression make_only(ObjectPropertyExpression p, ClassExpression filler);

// Flattens nested same-operator intersections/unions, e.g.
// A ⊓ (B ⊓ C) → A ⊓ B ⊓ C. Operand order is otherwise kept.
ClassExpression normalize(const ClassExpression& ce);

struct Violation {
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Structural checks for input that bypassed the checked constructors.
// Empty result means the expression is well formed.
std::vector<Violation> validate_expression(const ClassExpression& ce);

std::ostream& operator<<(std::ostream& os, const ClassExpression& ce);
std::ostream& operator<<(std::ostream& os, const DataRange& dr);

}  // namespace owlkit

template <>
struct std::hash<owlkit::ClassExpression> {
  std::size_t operator()(const owlkit::ClassExpression& ce) const noexcept {
    return ce.hash();
  }
};

template <>
struct std::hash<owlkit::ObjectPropertyExpression> {
  std::size_t operator()(
      const owlkit::ObjectPropertyExpression& p) const noexcept {
    return std::hash<owlkit::IRI>{}(p.property.iri) * 2 + (p.inverse ? 1 : 0);
  }
};
