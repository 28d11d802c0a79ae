#include <algorithm>
#include <array>

#include "owlkit/vocab.hpp"
#include "text_common.hpp"

namespace owlkit {

using namespace syntax_detail;

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "and", "or",  "not", "some",    "only",
    "value", "min", "max", "exactly", "inverse"};

bool is_keyword(std::string_view w) {
  return std::find(kKeywords.begin(), kKeywords.end(), w) != kKeywords.end();
}

std::string facet_symbol(Facet f) {
  switch (f) {
    case Facet::MinInclusive: return ">=";
    case Facet::MinExclusive: return ">";
    case Facet::MaxInclusive: return "<=";
    case Facet::MaxExclusive: return "<";
  }
  return "?";
}

class ManchesterRenderer {
 public:
  explicit ManchesterRenderer(const PrefixContext& ctx) : ctx_(ctx) {}

  std::string render(const ClassExpression& ce) const {
    return ce.visit([&](const auto& x) { return render_alt(x); });
  }

 private:
  static bool atomic(const ClassExpression& ce) {
    if (ce.is<OWLClass>() || ce.is<ObjectOneOf>()) return true;
    if (auto* n = ce.get_if<ObjectComplementOf>()) return atomic(n->operand);
    return false;
  }

  std::string wrapped(const ClassExpression& ce) const {
    return atomic(ce) ? render(ce) : "(" + render(ce) + ")";
  }

  std::string name(const IRI& iri) const {
    return render_name(iri, ctx_,
                       {"and", "or", "not", "some", "only", "value", "min",
                        "max", "exactly", "inverse"});
  }

  std::string prop(const ObjectPropertyExpression& p) const {
    return (p.inverse ? "inverse " : "") + name(p.property.iri);
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
    return out + "}";
  }

  std::string render_alt(const OWLClass& c) const {
    if (is_thing(c)) return "owl:Thing";
    if (is_nothing(c)) return "owl:Nothing";
    return name(c.iri);
  }

  template <CEKind K>
  std::string render_alt(const ObjectNaryBoolean<K>& n) const {
    const char* sep = K == CEKind::ObjectIntersectionOf ? " and " : " or ";
    std::string out;
    for (std::size_t i = 0; i < n.operands.size(); ++i) {
      if (i > 0) out += sep;
      out += wrapped(n.operands[i]);
    }
    return out;
  }

  std::string render_alt(const ObjectComplementOf& n) const {
    return "not " + wrapped(n.operand);
  }

  template <CEKind K>
  std::string render_alt(const ObjectQuantifier<K>& q) const {
    const char* kw = K == CEKind::ObjectSomeValuesFrom ? " some " : " only ";
    return prop(q.property) + kw + wrapped(q.filler);
  }

  std::string render_alt(const ObjectHasValue& h) const {
    return prop(h.property) + " value " + name(h.individual.iri);
  }

  std::string render_alt(const ObjectOneOf& o) const {
    std::string out = "{";
    for (std::size_t i = 0; i < o.individuals.size(); ++i) {
      if (i > 0) out += ", ";
      out += name(o.individuals[i].iri);
    }
    return out + "}";
  }

  template <CEKind K>
  std::string render_alt(const ObjectCardinality<K>& c) const {
    const char* kw = K == CEKind::ObjectMinCardinality   ? " min "
                     : K == CEKind::ObjectMaxCardinality ? " max "
                                                         : " exactly ";
    return prop(c.property) + kw + std::to_string(c.cardinality) + " " +
           wrapped(c.filler);
  }

  template <CEKind K>
  std::string render_alt(const DataQuantifier<K>& q) const {
    const char* kw = K == CEKind::DataSomeValuesFrom ? " some " : " only ";
    return name(q.property.iri) + kw + range(q.range);
  }

  std::string render_alt(const DataHasValue& h) const {
    return name(h.property.iri) + " value " + render_literal(h.value, ctx_);
  }

  const PrefixContext& ctx_;
};

class ManchesterParser {
 public:
  ManchesterParser(std::string_view text, const PrefixContext& ctx)
      : cur_(tokenize(text), ctx) {}

  ClassExpression parse() {
    ClassExpression ce = expr();
    cur_.expect_end();
    return ce;
  }

 private:
  ClassExpression expr() {
    std::vector<ClassExpression> ops{conj()};
    while (cur_.accept_word("or")) ops.push_back(conj());
    return ops.size() == 1 ? ops.front() : flat_or(std::move(ops));
  }

  ClassExpression conj() {
    std::vector<ClassExpression> ops{unary()};
    while (cur_.accept_word("and")) ops.push_back(unary());
    return ops.size() == 1 ? ops.front() : flat_and(std::move(ops));
  }

  bool at_restriction_keyword(std::size_t ahead) const {
    for (auto kw : {"some", "only", "value", "min", "max", "exactly"}) {
      if (cur_.at_word(kw, ahead)) return true;
    }
    return false;
  }

  // Start of a filler or operand: excludes connectives and closers.
  bool at_operand_start() const {
    const Token& t = cur_.peek();
    if (t.kind == TokKind::IriRef) return true;
    if (t.kind == TokKind::Name) {
      return !is_keyword(t.text) || t.text == "not" || t.text == "inverse";
    }
    return cur_.at_symbol("(") || cur_.at_symbol("{");
  }

  ClassExpression unary() {
    if (cur_.accept_word("not")) return ObjectComplementOf{unary()};
    if (cur_.at_word("inverse")) {
      cur_.next();
      const bool paren = cur_.accept_symbol("(");
      const IRI iri = identifier();
      if (paren) cur_.expect_symbol(")");
      return restriction(iri, true);
    }
    if (cur_.at_identifier() && at_restriction_keyword(1)) {
      return restriction(identifier(), false);
    }
    return atom();
  }

  IRI identifier() {
    const Token& t = cur_.peek();
    if (t.kind == TokKind::Name && is_keyword(t.text)) {
      cur_.fail(t, "keyword used as a name", {"identifier"});
    }
    return cur_.expect_identifier();
  }

  ClassExpression atom() {
    const Token& t = cur_.peek();
    if (cur_.accept_symbol("(")) {
      ClassExpression inner = expr();
      cur_.expect_symbol(")");
      return inner;
    }
    if (cur_.accept_symbol("{")) {
      std::vector<Individual> inds;
      do {
        inds.emplace_back(identifier());
      } while (cur_.accept_symbol(","));
      cur_.expect_symbol("}");
      return ObjectOneOf(std::move(inds));
    }
    if (cur_.at_identifier() &&
        !(t.kind == TokKind::Name && is_keyword(t.text))) {
      const IRI iri = cur_.resolve(t);
      if (is_datatype_iri(iri)) cur_.fail(t, "datatype used as a class");
      cur_.next();
      return OWLClass(iri);
    }
    cur_.fail(t, "syntax error", {"class name", "not", "inverse", "(", "{"});
  }

  bool at_data_range() const {
    if (cur_.at_symbol("{")) return cur_.at_literal(1);
    if (!cur_.at_identifier()) return false;
    try {
      return is_datatype_iri(cur_.resolve(cur_.peek()));
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
      if (cur_.accept_symbol(">=")) {
        f = Facet::MinInclusive;
      } else if (cur_.accept_symbol(">")) {
        f = Facet::MinExclusive;
      } else if (cur_.accept_symbol("<=")) {
        f = Facet::MaxInclusive;
      } else if (cur_.accept_symbol("<")) {
        f = Facet::MaxExclusive;
      } else {
        cur_.fail(ft, "syntax error", {">=", ">", "<=", "<"});
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

  ClassExpression restriction(const IRI& piri, bool inverse) {
    const Token& kw = cur_.peek();
    const ObjectPropertyExpression p(ObjectProperty(piri), inverse);
    if (cur_.accept_word("some") || cur_.accept_word("only")) {
      const bool some = kw.text == "some";
      if (at_data_range()) {
        if (inverse) cur_.fail(kw, "data property cannot be inverted");
        DataRange r = data_range();
        if (some) return DataSomeValuesFrom{DataProperty(piri), std::move(r)};
        return DataAllValuesFrom{DataProperty(piri), std::move(r)};
      }
      ClassExpression filler = unary();
      if (some) return ObjectSomeValuesFrom{p, std::move(filler)};
      return ObjectAllValuesFrom{p, std::move(filler)};
    }
    if (cur_.accept_word("value")) {
      if (cur_.at_literal()) {
        if (inverse) cur_.fail(kw, "data property cannot be inverted");
        return DataHasValue{DataProperty(piri), cur_.expect_literal()};
      }
      return ObjectHasValue{p, Individual(identifier())};
    }
    if (cur_.accept_word("min") || cur_.accept_word("max") ||
        cur_.accept_word("exactly")) {
      const std::int64_t n = cur_.expect_cardinality();
      ClassExpression filler = at_operand_start() ? unary() : thing();
      if (kw.text == "min") return ObjectMinCardinality(n, p, std::move(filler));
      if (kw.text == "max") return ObjectMaxCardinality(n, p, std::move(filler));
      return ObjectExactCardinality(n, p, std::move(filler));
    }
    cur_.fail(kw, "syntax error",
              {"some", "only", "value", "min", "max", "exactly"});
  }

  Cursor cur_;
};

}  // namespace

std::string render_manchester(const ClassExpression& ce,
                              const PrefixContext& ctx) {
  return ManchesterRenderer(ctx).render(ce);
}

ClassExpression parse_manchester(std::string_view text,
                                 const PrefixContext& ctx) {
  return ManchesterParser(text, ctx).parse();
}

}  // namespace owlkit
