#include <set>

#include "text_common.hpp"

namespace owlkit {

using namespace syntax_detail;

namespace {

class SwrlRenderer {
 public:
  explicit SwrlRenderer(const PrefixContext& ctx) : ctx_(ctx) {}

  std::string render(const SWRLRule& rule) const {
    return atoms(rule.body()) + " -> " + atoms(rule.head());
  }

 private:
  std::string atoms(const std::vector<SWRLAtom>& list) const {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0) out += " ^ ";
      out += std::visit([&](const auto& a) { return atom(a); }, list[i]);
    }
    return out;
  }

  std::string name(const IRI& iri) const {
    return render_name(iri, ctx_, {"inverse"});
  }

  std::string arg(const IndividualArgument& a) const {
    if (auto* v = std::get_if<Variable>(&a)) return "?" + v->name;
    return name(std::get<Individual>(a).iri);
  }

  std::string atom(const ClassAtom& a) const {
    if (auto* c = a.cls.get_if<OWLClass>()) {
      return name(c->iri) + "(" + arg(a.arg) + ")";
    }
    return "(" + render_manchester(a.cls, ctx_) + ")(" + arg(a.arg) + ")";
  }

  std::string atom(const ObjectPropertyAtom& a) const {
    std::string pred = name(a.property.property.iri);
    if (a.property.inverse) pred = "inverse(" + pred + ")";
    return pred + "(" + arg(a.first) + ", " + arg(a.second) + ")";
  }

  std::string atom(const DataPropertyAtom& a) const {
    std::string value;
    if (auto* v = std::get_if<Variable>(&a.value)) {
      value = "?" + v->name;
    } else {
      value = render_literal(std::get<Literal>(a.value), ctx_);
    }
    return name(a.property.iri) + "(" + arg(a.subject) + ", " + value + ")";
  }

  const PrefixContext& ctx_;
};

class SwrlParser {
 public:
  SwrlParser(std::string_view text, const PrefixContext& ctx)
      : text_(text), cur_(tokenize(text), ctx) {}

  SWRLRule parse() {
    std::vector<SWRLAtom> body = atoms();
    cur_.expect_symbol("->");
    std::set<std::string> bound;
    for (const auto& v : variables_of(body)) bound.insert(v.name);
    head_vars_.clear();
    std::vector<SWRLAtom> head = atoms();
    cur_.expect_end();
    for (const auto& [name, tok] : head_vars_) {
      if (!bound.count(name)) {
        cur_.fail(tok, "unsafe rule: head variable ?" + name +
                           " does not occur in the body");
      }
    }
    return SWRLRule(std::move(body), std::move(head));
  }

 private:
  std::vector<SWRLAtom> atoms() {
    std::vector<SWRLAtom> out{atom()};
    while (cur_.accept_symbol("^")) out.push_back(atom());
    return out;
  }

  struct Arg {
    Token token;
    std::variant<Variable, IRI, Literal> value;
  };

  Arg argument() {
    const Token t = cur_.peek();
    if (t.kind == TokKind::Variable) {
      cur_.next();
      head_vars_.emplace_back(t.text, t);
      return {t, Variable{t.text}};
    }
    if (cur_.at_literal()) return {t, cur_.expect_literal()};
    return {t, cur_.expect_identifier()};
  }

  IndividualArgument individual_arg(const Arg& a) {
    if (auto* v = std::get_if<Variable>(&a.value)) return *v;
    if (auto* iri = std::get_if<IRI>(&a.value)) return Individual(*iri);
    cur_.fail(a.token, "literal where an individual was expected");
  }

  SWRLAtom atom() {
    const Token start = cur_.peek();
    std::optional<ClassExpression> complex_class;
    std::optional<IRI> predicate;
    bool inverse = false;

    if (cur_.accept_symbol("(")) {
      // Parenthesized Manchester class expression up to the matching ')'.
      const std::size_t begin = cur_.peek().offset;
      int depth = 1;
      std::size_t end = begin;
      while (true) {
        const Token& t = cur_.peek();
        if (t.kind == TokKind::End) cur_.fail(t, "syntax error", {")"});
        if (cur_.at_symbol("(")) ++depth;
        if (cur_.at_symbol(")") && --depth == 0) {
          end = t.offset;
          cur_.next();
          break;
        }
        cur_.next();
      }
      try {
        complex_class =
            parse_manchester(text_.substr(begin, end - begin), cur_.ctx());
      } catch (const ParseError& e) {
        // Re-anchor to the rule text.
        throw ParseError(e.detail(), e.line() + start.line - 1,
                         e.line() == 1 ? e.column() + (begin - start.offset)
                                       : e.column(),
                         e.offset() + begin, e.expected(), e.found());
      }
    } else if (cur_.at_word("inverse") && cur_.at_symbol("(", 1) &&
               cur_.at_identifier(2) && cur_.at_symbol(")", 3)) {
      cur_.next();
      cur_.next();
      predicate = cur_.expect_identifier();
      cur_.expect_symbol(")");
      inverse = true;
    } else {
      predicate = cur_.expect_identifier();
    }

    cur_.expect_symbol("(");
    const Arg first = argument();
    if (cur_.accept_symbol(")")) {
      if (inverse) cur_.fail(start, "inverse property needs two arguments");
      ClassExpression cls =
          complex_class ? *complex_class : ClassExpression(OWLClass(*predicate));
      return ClassAtom{std::move(cls), individual_arg(first)};
    }
    if (complex_class) cur_.fail(cur_.peek(), "syntax error", {")"});
    cur_.expect_symbol(",");
    const Arg second = argument();
    cur_.expect_symbol(")");

    const bool second_literal = std::holds_alternative<Literal>(second.value);
    const bool second_variable = std::holds_alternative<Variable>(second.value);
    const bool data =
        second_literal ||
        (second_variable && !inverse &&
         cur_.ctx().data_properties.count(*predicate) > 0);
    if (data) {
      if (inverse) cur_.fail(start, "data property cannot be inverted");
      DataArgument value = second_literal
                               ? DataArgument(std::get<Literal>(second.value))
                               : DataArgument(std::get<Variable>(second.value));
      return DataPropertyAtom{DataProperty(*predicate), individual_arg(first),
                              std::move(value)};
    }
    return ObjectPropertyAtom{
        ObjectPropertyExpression(ObjectProperty(*predicate), inverse),
        individual_arg(first), individual_arg(second)};
  }

  std::string_view text_;
  Cursor cur_;
  std::vector<std::pair<std::string, Token>> head_vars_;
};

}  // namespace

std::string render_swrl(const SWRLRule& rule, const PrefixContext& ctx) {
  return SwrlRenderer(ctx).render(rule);
}

SWRLRule parse_swrl(std::string_view text, const PrefixContext& ctx) {
  return SwrlParser(text, ctx).parse();
}

}  // namespace owlkit
