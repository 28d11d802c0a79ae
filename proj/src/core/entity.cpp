#include "owlkit/entity.hpp"

#include "owlkit/vocab.hpp"

namespace owlkit {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
    case EntityKind::Datatype: return "Datatype";
    case EntityKind::AnnotationProperty: return "AnnotationProperty";
  }
  return "?";
}

OWLClass owl_thing() { return OWLClass(vocab::kOwlThing); }
OWLClass owl_nothing() { return OWLClass(vocab::kOwlNothing); }

bool is_thing(const OWLClass& c) { return c.iri.str() == vocab::kOwlThing; }
bool is_nothing(const OWLClass& c) {
  return c.iri.str() == vocab::kOwlNothing;
}

}  // namespace owlkit
