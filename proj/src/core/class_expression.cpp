#include "owlkit/class_expression.hpp"

#include <array>

#include "owlkit/errors.hpp"
#include "owlkit/hash.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

std::string_view to_string(Facet facet) {
  switch (facet) {
    case Facet::MinInclusive: return "minInclusive";
    case Facet::MinExclusive: return "minExclusive";
    case Facet::MaxInclusive: return "maxInclusive";
    case Facet::MaxExclusive: return "maxExclusive";
  }
  return "?";
}

IRI facet_iri(Facet facet) {
  return make_iri(std::string(vocab::kXsdNs) + std::string(to_string(facet)));
}

bool FacetRestriction::satisfied_by(const Literal& literal) const {
  const auto cmp = compare_numeric(literal, value);
  switch (facet) {
    case Facet::MinInclusive: return cmp >= 0;
    case Facet::MinExclusive: return cmp > 0;
    case Facet::MaxInclusive: return cmp <= 0;
    case Facet::MaxExclusive: return cmp < 0;
  }
  return false;
}

DatatypeRestriction::DatatypeRestriction(Datatype b,
                                         std::vector<FacetRestriction> f)
    : base(std::move(b)), facets(std::move(f)) {
  if (!is_numeric_datatype(base.iri)) {
    throw ModelError("datatype restriction base must be numeric: " +
                     base.iri.str());
  }
  if (facets.empty()) {
    throw ModelError("datatype restriction needs at least one facet");
  }
  for (const auto& fr : facets) {
    if (!fr.value.is_numeric()) {
      throw ModelError("facet " + std::string(to_string(fr.facet)) +
                       " needs a numeric literal, got '" + fr.value.lexical() +
                       "'");
    }
  }
}

DataOneOf::DataOneOf(std::vector<Literal> v) : values(std::move(v)) {
  if (values.empty()) throw ModelError("DataOneOf needs at least one literal");
}

bool DataRange::contains(const Literal& literal) const {
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Datatype>) {
          return r.iri.str() == vocab::kRdfsLiteral ||
                 literal.datatype() == r.iri;
        } else if constexpr (std::is_same_v<T, DatatypeRestriction>) {
          if (!literal.is_numeric()) return false;
          for (const auto& f : r.facets) {
            if (!f.satisfied_by(literal)) return false;
          }
          return true;
        } else {
          for (const auto& v : r.values) {
            if (v == literal) return true;
          }
          return false;
        }
      },
      v_);
}

std::string_view to_string(CEKind kind) {
  static constexpr std::array<std::string_view, 14> kNames = {
      "Class",
      "ObjectIntersectionOf",
      "ObjectUnionOf",
      "ObjectComplementOf",
      "ObjectSomeValuesFrom",
      "ObjectAllValuesFrom",
      "ObjectHasValue",
      "ObjectOneOf",
      "ObjectMinCardinality",
      "ObjectMaxCardinality",
      "ObjectExactCardinality",
      "DataSomeValuesFrom",
      "DataAllValuesFrom",
      "DataHasValue",
  };
  return kNames[static_cast<std::size_t>(kind)];
}

template <CEKind K>
ObjectNaryBoolean<K>::ObjectNaryBoolean(std::vector<ClassExpression> ops)
    : operands(std::move(ops)) {
  if (operands.size() < 2) {
    throw ModelError(std::string(to_string(K)) +
                     " needs at least 2 operands, got " +
                     std::to_string(operands.size()));
  }
}

template struct ObjectNaryBoolean<CEKind::ObjectIntersectionOf>;
template struct ObjectNaryBoolean<CEKind::ObjectUnionOf>;

ObjectOneOf::ObjectOneOf(std::vector<Individual> inds)
    : individuals(std::move(inds)) {
  if (individuals.empty()) {
    throw ModelError("ObjectOneOf needs at least one individual");
  }
}

template <CEKind K>
ObjectCardinality<K>::ObjectCardinality(std::int64_t n,
                                        ObjectPropertyExpression p,
                                        ClassExpression f)
    : cardinality(n), property(std::move(p)), filler(std::move(f)) {
  if (cardinality < 0) {
    throw ModelError(std::string(to_string(K)) +
                     " cardinality must be non-negative, got " +
                     std::to_string(cardinality));
  }
}

template struct ObjectCardinality<CEKind::ObjectMinCardinality>;
template struct ObjectCardinality<CEKind::ObjectMaxCardinality>;
template struct ObjectCardinality<CEKind::ObjectExactCardinality>;

namespace detail {

namespace {

std::size_t hash_ope(const ObjectPropertyExpression& p) {
  return hash_combine(std::hash<IRI>{}(p.property.iri), p.inverse ? 1 : 0);
}

std::size_t hash_range(const DataRange& dr) {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Datatype>) {
          return std::hash<IRI>{}(r.iri);
        } else if constexpr (std::is_same_v<T, DatatypeRestriction>) {
          std::size_t h = hash_combine(std::hash<IRI>{}(r.base.iri), 0x5157);
          for (const auto& f : r.facets) {
            h = hash_combine(h, static_cast<std::size_t>(f.facet));
            h = hash_combine(h, std::hash<Literal>{}(f.value));
          }
          return h;
        } else {
          std::size_t h = 0x0e0f;
          for (const auto& v : r.values) {
            h = hash_combine(h, std::hash<Literal>{}(v));
          }
          return h;
        }
      },
      dr.variant());
}

}  // namespace

std::size_t hash_ce_variant(const CEVariant& v) {
  std::size_t h = v.index() + 0x9e37;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, OWLClass>) {
          h = hash_combine(h, std::hash<IRI>{}(n.iri));
        } else if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                             std::is_same_v<T, ObjectUnionOf>) {
          for (const auto& op : n.operands) h = hash_combine(h, op.hash());
        } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
          h = hash_combine(h, n.operand.hash());
        } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                             std::is_same_v<T, ObjectAllValuesFrom>) {
          h = hash_combine(h, hash_ope(n.property));
          h = hash_combine(h, n.filler.hash());
        } else if constexpr (std::is_same_v<T, ObjectHasValue>) {
          h = hash_combine(h, hash_ope(n.property));
          h = hash_combine(h, std::hash<IRI>{}(n.individual.iri));
        } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
          for (const auto& i : n.individuals) {
            h = hash_combine(h, std::hash<IRI>{}(i.iri));
          }
        } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                             std::is_same_v<T, ObjectMaxCardinality> ||
                             std::is_same_v<T, ObjectExactCardinality>) {
          h = hash_combine(h, static_cast<std::size_t>(n.cardinality));
          h = hash_combine(h, hash_ope(n.property));
          h = hash_combine(h, n.filler.hash());
        } else if constexpr (std::is_same_v<T, DataSomeValuesFrom> ||
                             std::is_same_v<T, DataAllValuesFrom>) {
          h = hash_combine(h, std::hash<IRI>{}(n.property.iri));
          h = hash_combine(h, hash_range(n.range));
        } else {
          static_assert(std::is_same_v<T, DataHasValue>);
          h = hash_combine(h, std::hash<IRI>{}(n.property.iri));
          h = hash_combine(h, std::hash<Literal>{}(n.value));
        }
      },
      v);
  return h;
}

}  // namespace detail

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return a.node_->value == b.node_->value;
}

bool ClassExpression::is_thing() const {
  const auto* c = get_if<OWLClass>();
  return c != nullptr && owlkit::is_thing(*c);
}

bool ClassExpression::is_nothing() const {
  const auto* c = get_if<OWLClass>();
  return c != nullptr && owlkit::is_nothing(*c);
}

ClassExpression thing() { return owl_thing(); }
ClassExpression nothing() { return owl_nothing(); }

ClassExpression make_and(std::vector<ClassExpression> operands) {
  return ObjectIntersectionOf(std::move(operands));
}
ClassExpression make_or(std::vector<ClassExpression> operands) {
  return ObjectUnionOf(std::move(operands));
}
ClassExpression make_not(ClassExpression operand) {
  return ObjectComplementOf{std::move(operand)};
}
ClassExpression make_some(ObjectPropertyExpression p, ClassExpression filler) {
  return ObjectSomeValuesFrom{std::move(p), std::move(filler)};
}
ClassExpression make_only(ObjectPropertyExpression p, ClassExpression filler) {
  return ObjectAllValuesFrom{std::move(p), std::move(filler)};
}

namespace {

template <class Nary>
void flatten_into(const ClassExpression& ce, std::vector<ClassExpression>& out);

template <class Nary>
ClassExpression normalize_nary(const Nary& n) {
  std::vector<ClassExpression> ops;
  for (const auto& op : n.operands) flatten_into<Nary>(normalize(op), ops);
  return Nary(kUnchecked, std::move(ops));
}

template <class Nary>
void flatten_into(const ClassExpression& ce,
                  std::vector<ClassExpression>& out) {
  if (const auto* inner = ce.get_if<Nary>()) {
    // Already normalized, so its operands contain no further same-op nodes.
    out.insert(out.end(), inner->operands.begin(), inner->operands.end());
  } else {
    out.push_back(ce);
  }
}

}  // namespace

ClassExpression normalize(const ClassExpression& ce) {
  return ce.visit([&](const auto& n) -> ClassExpression {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                  std::is_same_v<T, ObjectUnionOf>) {
      return normalize_nary(n);
    } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
      return ObjectComplementOf{normalize(n.operand)};
    } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                         std::is_same_v<T, ObjectAllValuesFrom>) {
      return T{n.property, normalize(n.filler)};
    } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                         std::is_same_v<T, ObjectMaxCardinality> ||
                         std::is_same_v<T, ObjectExactCardinality>) {
      return T(kUnchecked, n.cardinality, n.property, normalize(n.filler));
    } else {
      return ce;
    }
  });
}

namespace {

void validate_into(const ClassExpression& ce, std::vector<Violation>& out) {
  ce.visit([&](const auto& n) {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                  std::is_same_v<T, ObjectUnionOf>) {
      if (n.operands.size() < 2) {
        out.push_back({std::string(to_string(T::kKind)) + ": operand count " +
                       std::to_string(n.operands.size()) + " < 2"});
      }
      for (const auto& op : n.operands) validate_into(op, out);
    } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
      validate_into(n.operand, out);
    } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                         std::is_same_v<T, ObjectAllValuesFrom>) {
      validate_into(n.filler, out);
    } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
      if (n.individuals.empty()) {
        out.push_back({"ObjectOneOf: no individuals"});
      }
    } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                         std::is_same_v<T, ObjectMaxCardinality> ||
                         std::is_same_v<T, ObjectExactCardinality>) {
      if (n.cardinality < 0) {
        out.push_back({std::string(to_string(T::kKind)) +
                       ": negative cardinality " +
                       std::to_string(n.cardinality)});
      }
      validate_into(n.filler, out);
    }
  });
}

}  // namespace

std::vector<Violation> validate_expression(const ClassExpression& ce) {
  std::vector<Violation> out;
  validate_into(ce, out);
  return out;
}

}  // namespace owlkit
