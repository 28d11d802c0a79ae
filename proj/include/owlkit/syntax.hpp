#pragma once

#include <string>
#include <string_view>
#include <unordered_set>

#include "owlkit/ontology.hpp"

// Text notations for class expressions (DL and Manchester) and SWRL rules.
//
// Identifiers are bare names (resolved against the default namespace),
// prefixed names (`xsd:integer`, `:male`) or full IRIs in angle brackets.
// Renderers prefer the bare form, then the prefixed form, then `<iri>`.
namespace owlkit {

struct PrefixContext {
  PrefixMap prefixes;
  // Namespace for bare identifiers; bare identifiers are unresolvable when
  // empty.
  std::string default_ns;
  // Decides SWRL atoms `p(?x, ?y)` whose second argument is a variable.
  std::unordered_set<IRI> data_properties;

  // Prefixes of `onto`; the default namespace is the ":" binding, else the
  // ontology IRI followed by '#'. Data properties from its signature.
  static PrefixContext for_ontology(const Ontology& onto);

  // Throws Error for an unbound prefix, or for a bare name when the default
  // namespace is empty.
  IRI resolve(std::string_view name) const;
};

// Unicode DL notation: ⊓ ⊔ ¬ ∃ ∀ ⊤ ⊥, `≥ n r.C`, `∃ r.{a}` for hasValue,
// `r⁻` for inverse. Non-atomic operands of ⊓/⊔ and quantifier fillers are
// parenthesized.
std::string render_dl(const ClassExpression& ce, const PrefixContext& ctx);
// Accepts the rendered form plus the escapes \sqcap \sqcup \exists \forall
// \neg \top \bot. Nested same-operator ⊓/⊔ are flattened.
ClassExpression parse_dl(std::string_view text, const PrefixContext& ctx);

std::string render_manchester(const ClassExpression& ce,
                              const PrefixContext& ctx);
ClassExpression parse_manchester(std::string_view text,
                                 const PrefixContext& ctx);

// `body -> head`, atoms joined by `^`, variables written `?x`.
std::string render_swrl(const SWRLRule& rule, const PrefixContext& ctx);
SWRLRule parse_swrl(std::string_view text, const PrefixContext& ctx);

}  // namespace owlkit
