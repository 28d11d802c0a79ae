#include "owlkit/ontology.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "owlkit/errors.hpp"
#include "owlkit/functional.hpp"
#include "owlkit/turtle.hpp"

namespace owlkit {

Format parse_format(std::string_view name) {
  if (name == "functional") return Format::Functional;
  if (name == "turtle") return Format::Turtle;
  throw Error("unsupported format '" + std::string(name) +
              "' (supported: functional, turtle)");
}

Ontology Ontology::load(const std::filesystem::path& path, Format format) {
  if (format != Format::Functional) {
    throw Error("cannot load " + path.string() +
                ": only the functional format can be read");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return parse_functional(buf.str());
}

void Ontology::save(const std::filesystem::path& path, Format format) const {
  const std::string text = format == Format::Functional
                               ? serialize_functional(*this)
                               : serialize_turtle(*this);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

void Ontology::add_import(IRI iri) {
  for (const auto& i : imports_) {
    if (i == iri) return;
  }
  imports_.push_back(std::move(iri));
}

bool Ontology::add_axiom(const Axiom& axiom) {
  if (seq_of_.contains(axiom)) return false;
  const Seq seq = next_seq_++;
  axioms_.emplace(seq, axiom);
  seq_of_.emplace(axiom, seq);
  by_kind_[static_cast<std::size_t>(axiom.kind())].insert(seq);
  for (const auto& e : signature_of(axiom)) by_entity_[e].insert(seq);
  return true;
}

bool Ontology::remove_axiom(const Axiom& axiom) {
  auto it = seq_of_.find(axiom);
  if (it == seq_of_.end()) return false;
  const Seq seq = it->second;
  seq_of_.erase(it);
  axioms_.erase(seq);
  by_kind_[static_cast<std::size_t>(axiom.kind())].erase(seq);
  for (const auto& e : signature_of(axiom)) {
    auto idx = by_entity_.find(e);
    if (idx == by_entity_.end()) continue;
    idx->second.erase(seq);
    if (idx->second.empty()) by_entity_.erase(idx);
  }
  return true;
}

bool Ontology::contains(const Axiom& axiom) const {
  return seq_of_.contains(axiom);
}

std::vector<Axiom> Ontology::axioms() const {
  std::vector<Axiom> out;
  out.reserve(axioms_.size());
  for (const auto& [seq, ax] : axioms_) out.push_back(ax);
  return out;
}

std::vector<Axiom> Ontology::collect(const std::set<Seq>& seqs) const {
  std::vector<Axiom> out;
  out.reserve(seqs.size());
  for (Seq s : seqs) out.push_back(axioms_.at(s));
  return out;
}

std::vector<Axiom> Ontology::axioms_of_kind(AxiomKind kind) const {
  return collect(by_kind_[static_cast<std::size_t>(kind)]);
}

std::vector<Axiom> Ontology::axioms_about(const Entity& entity) const {
  auto it = by_entity_.find(entity);
  if (it == by_entity_.end()) return {};
  return collect(it->second);
}

std::vector<Entity> Ontology::signature() const {
  std::vector<Entity> out;
  std::unordered_set<Entity> seen;
  for (const auto& [seq, ax] : axioms_) {
    for (auto& e : signature_of(ax)) {
      if (seen.insert(e).second) out.push_back(std::move(e));
    }
  }
  return out;
}

template <class T>
std::vector<T> Ontology::entities_of_kind() const {
  std::vector<T> out;
  for (auto& e : signature()) {
    if (e.kind == T::kKind) out.emplace_back(std::move(e.iri));
  }
  return out;
}

std::vector<OWLClass> Ontology::classes_in_signature() const {
  return entities_of_kind<OWLClass>();
}
std::vector<Individual> Ontology::individuals_in_signature() const {
  return entities_of_kind<Individual>();
}
std::vector<ObjectProperty> Ontology::object_properties_in_signature() const {
  return entities_of_kind<ObjectProperty>();
}
std::vector<DataProperty> Ontology::data_properties_in_signature() const {
  return entities_of_kind<DataProperty>();
}

bool same_axioms(const Ontology& a, const Ontology& b) {
  if (a.axiom_count() != b.axiom_count()) return false;
  for (const auto& ax : a.axioms()) {
    if (!b.contains(ax)) return false;
  }
  return true;
}

}  // namespace owlkit
