#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "owlkit/iri.hpp"

namespace owlkit {

enum class EntityKind : std::uint8_t {
  Class,
  ObjectProperty,
  DataProperty,
  NamedIndividual,
  Datatype,
  AnnotationProperty,
};

// Functional-syntax keyword for the kind, e.g. "NamedIndividual".
std::string_view to_string(EntityKind kind);

// A named entity of one fixed kind. The kind is part of the type so a class
// can never be passed where an individual is expected.
template <EntityKind K>
struct NamedEntity {
  static constexpr EntityKind kKind = K;

  IRI iri;

  explicit NamedEntity(IRI i) : iri(std::move(i)) {}
  explicit NamedEntity(std::string_view text) : iri(make_iri(text)) {}

  friend bool operator==(const NamedEntity&, const NamedEntity&) = default;
  friend auto operator<=>(const NamedEntity&, const NamedEntity&) = default;
};

using OWLClass = NamedEntity<EntityKind::Class>;
using ObjectProperty = NamedEntity<EntityKind::ObjectProperty>;
using DataProperty = NamedEntity<EntityKind::DataProperty>;
using Individual = NamedEntity<EntityKind::NamedIndividual>;
using Datatype = NamedEntity<EntityKind::Datatype>;
using AnnotationProperty = NamedEntity<EntityKind::AnnotationProperty>;

// Kind-erased entity, the element type of signatures.
struct Entity {
  EntityKind kind;
  IRI iri;

  template <EntityKind K>
  Entity(const NamedEntity<K>& e) : kind(K), iri(e.iri) {}  // NOLINT
  Entity(EntityKind k, IRI i) : kind(k), iri(std::move(i)) {}

  friend bool operator==(const Entity&, const Entity&) = default;
  friend auto operator<=>(const Entity&, const Entity&) = default;
};

OWLClass owl_thing();
OWLClass owl_nothing();
bool is_thing(const OWLClass& c);
bool is_nothing(const OWLClass& c);

}  // namespace owlkit

template <owlkit::EntityKind K>
struct std::hash<owlkit::NamedEntity<K>> {
  std::size_t operator()(const owlkit::NamedEntity<K>& e) const noexcept {
    return std::hash<owlkit::IRI>{}(e.iri);
  }
};

template <>
struct std::hash<owlkit::Entity> {
  std::size_t operator()(const owlkit::Entity& e) const noexcept {
    return std::hash<owlkit::IRI>{}(e.iri) * 31 +
           static_cast<std::size_t>(e.kind);
  }
};
