#include "text_common.hpp"

namespace owlkit {

using namespace syntax_detail;

namespace {

std::string facet_symbol(Facet f) {
  switch (f) {
    case Facet::MinInclusive: return "≥";
    case Facet::MinExclusive: return ">";
    case Facet::MaxInclusive: return "≤";
    case Facet::MaxExclusive: return "<";
  }
  return "?";
}

class DlRenderer {
 public:
  explicit DlRenderer(const PrefixContext& ctx) : ctx_(ctx) {}

  std::string render(const ClassExpression& ce) const {
    return ce.visit([&](const auto& x) { return render_alt(x); });
  }

 private:
  // Atomic: needs no parentheses in any operand position.
  static bool atomic(const ClassExpression& ce) {
    if (ce.is<OWLClass>() || ce.is<ObjectOneOf>()) return true;
    if (auto* n = ce.get_if<ObjectComplementOf>()) return atomic(n->operand);
    return false;
  }

  std::string wrapped(const ClassExpression& ce) const {
    return atomic(ce) ? render(ce) : "(" + render(ce) + ")";
  }

  std::string name(const IRI& iri) const { return render_name(iri, ctx_); }

  std::string prop(const ObjectPropertyExpression& p) const {
    return name(p.property.iri) + (p.inverse ? "⁻" : "");
  }

  std::string individuals(const std::vector<Individual>& inds) const {
    std::string out = "{";
    for (std::size_t i = 0; i < inds.size(); ++i) {
      if (i > 0) out += ", ";
      out += name(inds[i].iri);
    }
    return out + "}";
  }

  std::string range(const DataRange& r) const {
    if (auto* d = r.get_if<Datatype>()) return name(d->iri);
    if (auto* dr = r.get_if<DatatypeRestriction>()) {
      std::string out = name(dr->base.iri) + "[";
      for (std::size_t i = 0; i < dr->facets.size(); ++i) {
        if (i > 0) out += ", ";
        out += facet_symbol(dr->facets[i].facet) + " " +
               render_literal(dr->facets[i].value, ctx_);
      }
      return out + "]";
    }
    const auto& values = r.get_if<DataOneOf>()->values;
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += ", ";
      out += render_literal(values[i], ctx_);
    }
    out += "}";
    // A bare singleton after ∃ reads as a value restriction.
    return values.size() == 1 ? "(" + out + ")" : out;
  }

  std::string render_alt(const OWLClass& c) const {
    if (is_thing(c)) return "⊤";
    if (is_nothing(c)) return "⊥";
    return name(c.iri);
  }

  template <CEKind K>
  std::string render_alt(const ObjectNaryBoolean<K>& n) const {
    const char* sep =
        K == CEKind::ObjectIntersectionOf ? " ⊓ " : " ⊔ ";
    std::string out;
    for (std::size_t i = 0; i < n.operands.size(); ++i) {
      if (i > 0) out += sep;
      out += wrapped(n.operands[i]);
    }
    return out;
  }

  std::string render_alt(const ObjectComplementOf& n) const {
    return "¬" + wrapped(n.operand);
  }

  template <CEKind K>
  std::string render_alt(const ObjectQuantifier<K>& q) const {
    const char* sym = K == CEKind::ObjectSomeValuesFrom ? "∃ " : "∀ ";
    std::string filler = wrapped(q.filler);
    if (K == CEKind::ObjectSomeValuesFrom) {
      if (auto* one = q.filler.template get_if<ObjectOneOf>();
          one != nullptr && one->individuals.size() == 1) {
        filler = "(" + filler + ")";
      }
    }
    return sym + prop(q.property) + "." + filler;
  }

  std::string render_alt(const ObjectHasValue& h) const {
    return "∃ " + prop(h.property) + ".{" + name(h.individual.iri) + "}";
  }

  std::string render_alt(const ObjectOneOf& o) const {
    return individuals(o.individuals);
  }

  template <CEKind K>
  std::string render_alt(const ObjectCardinality<K>& c) const {
    const char* sym = K == CEKind::ObjectMinCardinality   ? "≥ "
                      : K == CEKind::ObjectMaxCardinality ? "≤ "
                                                          : "= ";
    return sym + std::to_string(c.cardinality) + " " + prop(c.property) + "." +
           wrapped(c.filler);
  }

  template <CEKind K>
  std::string render_alt(const DataQuantifier<K>& q) const {
    const char* sym = K == CEKind::DataSomeValuesFrom ? "∃ " : "∀ ";
    std::string r = range(q.range);
    if (K == CEKind::DataAllValuesFrom && r.front() == '(') {
      r = r.substr(1, r.size() - 2);
    }
    return sym + name(q.property.iri) + "." + r;
  }

  std::string render_alt(const DataHasValue& h) const {
    return "∃ " + name(h.property.iri) + ".{" + render_literal(h.value, ctx_) +
           "}";
  }

  const PrefixContext& ctx_;
};

class DlParser {
 public:
  DlParser(std::string_view text, const PrefixContext& ctx)
      : cur_(tokenize(text), ctx) {}

  ClassExpression parse() {
    ClassExpression ce = expr();
    cur_.expect_end();
    return ce;
  }

 private:
  ClassExpression expr() {
    std::vector<ClassExpression> ops{conj()};
    while (cur_.accept_symbol("⊔")) ops.push_back(conj());
    return ops.size() == 1 ? ops.front() : flat_or(std::move(ops));
  }

  ClassExpression conj() {
    std::vector<ClassExpression> ops{unary()};
    while (cur_.accept_symbol("⊓")) ops.push_back(unary());
    return ops.size() == 1 ? ops.front() : flat_and(std::move(ops));
  }

  ClassExpression unary() {
    if (cur_.accept_symbol("¬")) return ObjectComplementOf{unary()};
    if (cur_.at_symbol("∃") || cur_.at_symbol("∀")) return quantifier();
    if (cur_.at_symbol("≥") || cur_.at_symbol("≤") || cur_.at_symbol("=")) {
      return cardinality();
    }
    return atom();
  }

  ClassExpression atom() {
    const Token& t = cur_.peek();
    if (cur_.accept_symbol("⊤")) return thing();
    if (cur_.accept_symbol("⊥")) return nothing();
    if (cur_.accept_symbol("(")) {
      ClassExpression inner = expr();
      cur_.expect_symbol(")");
      return inner;
    }
    if (cur_.at_symbol("{")) return ObjectOneOf(individual_set());
    if (cur_.at_identifier()) {
      const IRI iri = cur_.resolve(t);
      if (is_datatype_iri(iri)) cur_.fail(t, "datatype used as a class");
      cur_.next();
      return OWLClass(iri);
    }
    cur_.fail(t, "syntax error",
              {"class name", "⊤", "⊥", "¬", "∃", "∀", "≥", "≤", "=", "(", "{"});
  }

  std::vector<Individual> individual_set() {
    cur_.expect_symbol("{");
    std::vector<Individual> inds;
    do {
      inds.emplace_back(cur_.expect_identifier());
    } while (cur_.accept_symbol(","));
    cur_.expect_symbol("}");
    return inds;
  }

  // Property name with an optional ⁻ suffix; the IRI kind is decided by the
  // filler.
  std::pair<IRI, bool> property() {
    const IRI iri = cur_.expect_identifier();
    const bool inverse = cur_.accept_symbol("⁻");
    return {iri, inverse};
  }

  // Data-range lookahead: a datatype name, or a set whose first member is a
  // literal.
  bool at_data_range(std::size_t ahead = 0) const {
    if (cur_.at_symbol("{", ahead)) return cur_.at_literal(ahead + 1);
    if (!cur_.at_identifier(ahead)) return false;
    try {
      return is_datatype_iri(cur_.resolve(cur_.peek(ahead)));
    } catch (const ParseError&) {
      return false;
    }
  }

  DataRange data_range() {
    if (cur_.accept_symbol("{")) {
      std::vector<Literal> values;
      do {
        values.push_back(cur_.expect_literal());
      } while (cur_.accept_symbol(","));
      cur_.expect_symbol("}");
      return DataOneOf(std::move(values));
    }
    const Token& t = cur_.peek();
    const Datatype base(cur_.expect_identifier());
    if (!cur_.accept_symbol("[")) return base;
    std::vector<FacetRestriction> facets;
    do {
      const Token& ft = cur_.peek();
      Facet f;
      if (cur_.accept_symbol("≥") || cur_.accept_symbol(">=")) {
        f = Facet::MinInclusive;
      } else if (cur_.accept_symbol(">")) {
        f = Facet::MinExclusive;
      } else if (cur_.accept_symbol("≤") || cur_.accept_symbol("<=")) {
        f = Facet::MaxInclusive;
      } else if (cur_.accept_symbol("<")) {
        f = Facet::MaxExclusive;
      } else {
        cur_.fail(ft, "syntax error", {"≥", ">", "≤", "<"});
      }
      facets.push_back({f, cur_.expect_literal()});
    } while (cur_.accept_symbol(","));
    cur_.expect_symbol("]");
    try {
      return DatatypeRestriction(base, std::move(facets));
    } catch (const ModelError& e) {
      cur_.fail(t, e.what());
    }
  }

  ClassExpression quantifier() {
    const bool some = cur_.at_symbol("∃");
    cur_.next();
    const Token& pt = cur_.peek();
    const auto [piri, inverse] = property();
    cur_.expect_symbol(".");

    const bool paren_data = cur_.at_symbol("(") && at_data_range(1);
    if (paren_data || at_data_range()) {
      if (inverse) cur_.fail(pt, "data property cannot be inverted");
      const DataProperty d(piri);
      if (paren_data) {
        cur_.next();
        DataRange r = data_range();
        cur_.expect_symbol(")");
        if (some) return DataSomeValuesFrom{d, std::move(r)};
        return DataAllValuesFrom{d, std::move(r)};
      }
      DataRange r = data_range();
      if (some) {
        if (auto* one = r.get_if<DataOneOf>(); one && one->values.size() == 1) {
          return DataHasValue{d, one->values.front()};
        }
        return DataSomeValuesFrom{d, std::move(r)};
      }
      return DataAllValuesFrom{d, std::move(r)};
    }

    const ObjectPropertyExpression p(ObjectProperty(piri), inverse);
    if (some && cur_.at_symbol("{")) {
      auto inds = individual_set();
      if (inds.size() == 1) return ObjectHasValue{p, inds.front()};
      return ObjectSomeValuesFrom{p, ObjectOneOf(std::move(inds))};
    }
    ClassExpression filler = unary();
    if (some) return ObjectSomeValuesFrom{p, std::move(filler)};
    return ObjectAllValuesFrom{p, std::move(filler)};
  }

  ClassExpression cardinality() {
    const std::string sym = cur_.next().text;
    const std::int64_t n = cur_.expect_cardinality();
    const auto [piri, inverse] = property();
    const ObjectPropertyExpression p(ObjectProperty(piri), inverse);
    cur_.expect_symbol(".");
    ClassExpression filler = unary();
    if (sym == "≥") return ObjectMinCardinality(n, p, std::move(filler));
    if (sym == "≤") return ObjectMaxCardinality(n, p, std::move(filler));
    return ObjectExactCardinality(n, p, std::move(filler));
  }

  Cursor cur_;
};

}  // namespace

std::string render_dl(const ClassExpression& ce, const PrefixContext& ctx) {
  return DlRenderer(ctx).render(ce);
}

ClassExpression parse_dl(std::string_view text, const PrefixContext& ctx) {
  return DlParser(text, ctx).parse();
}

}  // namespace owlkit
