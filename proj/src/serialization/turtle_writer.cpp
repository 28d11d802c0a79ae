#include "owlkit/turtle.hpp"

#include <map>

#include "owlkit/functional.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

std::string escape_turtle_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

std::string term(const RdfNode& node, const PrefixMap& prefixes) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IRI>) {
          if (auto ab = prefixes.abbreviate(n)) return *ab;
          return "<" + n.str() + ">";
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          return n.label();
        } else {
          std::string out = "\"" + escape_turtle_string(n.lexical()) + "\"";
          if (n.datatype().str() != vocab::kXsdString) {
            out += "^^" + term(n.datatype(), prefixes);
          }
          return out;
        }
      },
      node);
}

std::string subject_key(const RdfNode& node) {
  if (const auto* i = std::get_if<IRI>(&node)) return "I" + i->str();
  if (const auto* b = std::get_if<BlankNode>(&node)) return "B" + b->label();
  return "L" + std::get<Literal>(node).lexical();
}

}  // namespace

std::string write_turtle(const std::vector<Triple>& triples,
                         const PrefixMap& prefixes) {
  std::string out;
  for (const auto& [name, ns] : prefixes.entries()) {
    out += "@prefix " + name + ": <" + ns + "> .\n";
  }

  // Group by subject in order of first appearance.
  std::vector<std::vector<const Triple*>> groups;
  std::map<std::string, std::size_t> group_of;
  for (const auto& t : triples) {
    auto [it, inserted] = group_of.emplace(subject_key(t.subject), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(&t);
  }
  for (const auto& group : groups) {
    out += '\n';
    for (const Triple* t : group) {
      out += term(t->subject, prefixes) + " " + term(t->predicate, prefixes) +
             " " + term(t->object, prefixes) + " .\n";
    }
  }
  return out;
}

std::string serialize_turtle(const Ontology& onto, TurtleOptions options,
                             std::vector<std::string>* warnings) {
  TripleMapper mapper;
  std::vector<Triple> triples;
  for (const auto& ax : onto.axioms()) {
    if (ax.kind() == AxiomKind::SWRLRule && !options.strict) {
      if (warnings != nullptr) {
        warnings->push_back("skipped axiom without RDF mapping: " +
                            to_functional(ax, onto.prefixes()));
      }
      continue;
    }
    auto ts = mapper.map(ax);
    triples.insert(triples.end(), ts.begin(), ts.end());
  }
  // Only the standard vocabularies are abbreviated; ontology IRIs stay full.
  return write_turtle(triples, PrefixMap());
}

}  // namespace owlkit
