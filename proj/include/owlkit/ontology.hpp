#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "owlkit/axiom.hpp"
#include "owlkit/prefix_map.hpp"

namespace owlkit {

enum class Format : std::uint8_t { Functional, Turtle };

// Parses "functional" / "turtle"; throws Error for anything else.
Format parse_format(std::string_view name);

// In-memory ontology: a set of axioms kept in insertion order, indexed by
// axiom kind and by mentioned entity.
//
// Mutation requires exclusive access; const accessors may run concurrently
// between mutations.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::optional<IRI> iri) : iri_(std::move(iri)) {}

  // Reads an OWL 2 Functional-Style document. Only Format::Functional can
  // be loaded.
  static Ontology load(const std::filesystem::path& path,
                       Format format = Format::Functional);
  // UTF-8, LF line endings.
  void save(const std::filesystem::path& path,
            Format format = Format::Functional) const;

  const std::optional<IRI>& iri() const { return iri_; }
  void set_iri(std::optional<IRI> iri) { iri_ = std::move(iri); }
  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }
  // Import declarations are kept but never resolved.
  const std::vector<IRI>& imports() const { return imports_; }
  void add_import(IRI iri);

  // True if the axiom was not already present.
  bool add_axiom(const Axiom& axiom);
  // True if the axiom was present.
  bool remove_axiom(const Axiom& axiom);
  bool contains(const Axiom& axiom) const;

  std::size_t axiom_count() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }
  std::vector<Axiom> axioms() const;
  std::vector<Axiom> axioms_of_kind(AxiomKind kind) const;
  std::vector<Axiom> axioms_about(const Entity& entity) const;

  // Union of all axiom signatures, in order of first occurrence.
  std::vector<Entity> signature() const;
  std::vector<OWLClass> classes_in_signature() const;
  std::vector<Individual> individuals_in_signature() const;
  std::vector<ObjectProperty> object_properties_in_signature() const;
  std::vector<DataProperty> data_properties_in_signature() const;

 private:
  using Seq = std::uint64_t;

  std::vector<Axiom> collect(const std::set<Seq>& seqs) const;
  template <class T>
  std::vector<T> entities_of_kind() const;

  std::optional<IRI> iri_;
  PrefixMap prefixes_;
  std::vector<IRI> imports_;

  Seq next_seq_ = 0;
  std::map<Seq, Axiom> axioms_;
  std::unordered_map<Axiom, Seq> seq_of_;
  std::array<std::set<Seq>, kAxiomKindCount> by_kind_;
  std::unordered_map<Entity, std::set<Seq>> by_entity_;
};

// Axiom-set equality, ignoring order, prefixes and the ontology IRI.
bool same_axioms(const Ontology& a, const Ontology& b);

}  // namespace owlkit
