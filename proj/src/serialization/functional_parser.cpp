#include <cctype>
#include <charconv>
#include <functional>
#include <unordered_map>

#include "owlkit/errors.hpp"
#include "owlkit/functional.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

namespace {

enum class Tok {
  LParen,
  RParen,
  Equals,
  DoubleCaret,
  IriRef,
  PName,
  Word,
  String,
  LangTag,
  End,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::DoubleCaret: return "'^^'";
    case Tok::IriRef: return "full IRI";
    case Tok::PName: return "prefixed name";
    case Tok::Word: return "keyword";
    case Tok::String: return "string literal";
    case Tok::LangTag: return "language tag";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  std::size_t offset;
};

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' ||
         c == '+' || u >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, col_, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_, pos_);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    Token tok{Tok::End, "", line_, col_, pos_};
    const char c = text_[pos_];
    switch (c) {
      case '(': tok.kind = Tok::LParen; advance(); return tok;
      case ')': tok.kind = Tok::RParen; advance(); return tok;
      case '=': tok.kind = Tok::Equals; advance(); return tok;
      case '^':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '^') {
          advance();
          advance();
          tok.kind = Tok::DoubleCaret;
          return tok;
        }
        fail("unexpected '^'");
      case '<': {
        advance();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '>') {
          if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            fail("whitespace inside IRI");
          }
          advance();
        }
        if (pos_ >= text_.size()) fail("unterminated IRI");
        tok.kind = Tok::IriRef;
        tok.text = std::string(text_.substr(start, pos_ - start));
        advance();
        return tok;
      }
      case '"': {
        advance();
        tok.kind = Tok::String;
        for (;;) {
          if (pos_ >= text_.size()) fail("unterminated string literal");
          const char s = text_[pos_];
          if (s == '"') {
            advance();
            return tok;
          }
          if (s == '\\') {
            advance();
            if (pos_ >= text_.size()) fail("unterminated string literal");
            switch (text_[pos_]) {
              case '"': tok.text += '"'; break;
              case '\\': tok.text += '\\'; break;
              case 'n': tok.text += '\n'; break;
              case 't': tok.text += '\t'; break;
              default:
                fail(std::string("unsupported escape sequence '\\") +
                     text_[pos_] + "'");
            }
            advance();
            continue;
          }
          tok.text += s;
          advance();
        }
      }
      case '@': {
        advance();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '-')) {
          advance();
        }
        tok.kind = Tok::LangTag;
        tok.text = std::string(text_.substr(start, pos_ - start));
        return tok;
      }
      default: break;
    }
    if (!is_word_char(c)) fail(std::string("unexpected character '") + c + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) advance();
    tok.text = std::string(text_.substr(start, pos_ - start));
    tok.kind = tok.text.find(':') != std::string::npos ? Tok::PName : Tok::Word;
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, PrefixMap prefixes)
      : tokens_(Lexer(text).run()), prefixes_(std::move(prefixes)) {}

  Ontology document() {
    Ontology onto;
    while (peek().kind == Tok::Word && peek().text == "Prefix") {
      prefix_declaration();
    }
    if (!(peek().kind == Tok::Word && peek().text == "Ontology")) {
      fail_expected({"Prefix", "Ontology"});
    }
    next();
    expect(Tok::LParen);
    if (is_iri_token(peek())) {
      onto.set_iri(iri());
      if (is_iri_token(peek())) unsupported(peek(), "version IRI");
    }
    while (peek().kind == Tok::Word && peek().text == "Import") {
      next();
      expect(Tok::LParen);
      onto.add_import(iri());
      expect(Tok::RParen);
    }
    while (peek().kind != Tok::RParen) {
      if (peek().kind == Tok::End) {
        fail_expected({"')'", "axiom"});
      }
      onto.add_axiom(axiom());
    }
    next();
    expect(Tok::End);
    onto.prefixes() = prefixes_;
    return onto;
  }

  ClassExpression single_expression() {
    auto ce = class_expression();
    expect(Tok::End);
    return ce;
  }

  Axiom single_axiom() {
    auto ax = axiom();
    expect(Tok::End);
    return ax;
  }

 private:
  // --- token plumbing -----------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  static std::string show(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    if (t.kind == Tok::IriRef) return "<" + t.text + ">";
    if (t.kind == Tok::String) return "\"" + t.text + "\"";
    if (t.text.empty()) return describe(t.kind);
    return "'" + t.text + "'";
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& msg,
                            std::vector<std::string> expected = {}) const {
    throw ParseError(msg, t.line, t.column, t.offset, std::move(expected),
                     show(t));
  }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) const {
    const Token& t = peek();
    fail_at(t,
            t.kind == Tok::End ? "unexpected end of input"
                               : "unexpected " + show(t),
            std::move(expected));
  }

  [[noreturn]] void unsupported(const Token& t, const std::string& what) const {
    fail_at(t, "unsupported construct: " + what);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail_expected({describe(kind)});
    return next();
  }

  void expect_keyword(std::string_view word) {
    if (peek().kind != Tok::Word || peek().text != word) {
      fail_expected({std::string(word)});
    }
    next();
  }

  static bool is_iri_token(const Token& t) {
    return t.kind == Tok::IriRef || t.kind == Tok::PName;
  }

  // Runs `build`, reporting data-model violations at `at`.
  template <class F>
  auto checked(const Token& at, F&& build) {
    try {
      return build();
    } catch (const ModelError& e) {
      fail_at(at, e.what());
    }
  }

  // --- terminals ----------------------------------------------------------

  void prefix_declaration() {
    next();  // Prefix
    expect(Tok::LParen);
    const Token& name = peek();
    if (name.kind != Tok::PName || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1) {
      fail_expected({"prefix name ending in ':'"});
    }
    next();
    expect(Tok::Equals);
    const Token& ns = expect(Tok::IriRef);
    expect(Tok::RParen);
    prefixes_.set(name.text.substr(0, name.text.size() - 1), ns.text);
  }

  IRI iri() {
    const Token& t = peek();
    if (t.kind == Tok::IriRef) {
      next();
      return checked(t, [&] { return make_iri(t.text); });
    }
    if (t.kind == Tok::PName) {
      next();
      if (t.text.starts_with("_:")) unsupported(t, "anonymous individual");
      auto full = prefixes_.expand(t.text);
      if (!full) {
        fail_at(t, "unknown prefix '" +
                       t.text.substr(0, t.text.find(':')) + ":'");
      }
      return checked(t, [&] { return make_iri(*full); });
    }
    fail_expected({"IRI"});
  }

  template <class T>
  T entity() {
    return T(iri());
  }

  Literal literal() {
    const Token& t = peek();
    if (t.kind != Tok::String) fail_expected({"literal"});
    next();
    if (peek().kind == Tok::DoubleCaret) {
      next();
      IRI dt = iri();
      return checked(t, [&] { return Literal(t.text, std::move(dt)); });
    }
    if (peek().kind == Tok::LangTag) {
      unsupported(peek(), "language-tagged literal");
    }
    return Literal::string(t.text);
  }

  std::int64_t cardinality() {
    const Token& t = peek();
    if (t.kind != Tok::Word) fail_expected({"non-negative integer"});
    std::int64_t n = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, n);
    if (ec != std::errc() || ptr != e) fail_expected({"non-negative integer"});
    next();
    return n;
  }

  ObjectPropertyExpression ope() {
    if (peek().kind == Tok::Word && peek().text == "ObjectInverseOf") {
      next();
      expect(Tok::LParen);
      auto inner = ope();
      expect(Tok::RParen);
      return inner.inverted();
    }
    return entity<ObjectProperty>();
  }

  // --- data ranges and class expressions ----------------------------------

  DataRange data_range() {
    if (is_iri_token(peek())) return entity<Datatype>();
    const Token& kw = peek();
    if (kw.kind != Tok::Word) fail_expected({"data range"});
    next();
    expect(Tok::LParen);
    if (kw.text == "DatatypeRestriction") {
      auto base = entity<Datatype>();
      std::vector<FacetRestriction> facets;
      while (peek().kind != Tok::RParen) {
        const Token& ft = peek();
        IRI f = iri();
        const std::string& s = f.str();
        Facet facet;
        if (s == std::string(vocab::kXsdNs) + "minInclusive") {
          facet = Facet::MinInclusive;
        } else if (s == std::string(vocab::kXsdNs) + "minExclusive") {
          facet = Facet::MinExclusive;
        } else if (s == std::string(vocab::kXsdNs) + "maxInclusive") {
          facet = Facet::MaxInclusive;
        } else if (s == std::string(vocab::kXsdNs) + "maxExclusive") {
          facet = Facet::MaxExclusive;
        } else {
          unsupported(ft, "facet " + s);
        }
        facets.push_back({facet, literal()});
      }
      next();
      return checked(kw, [&] {
        return DataRange(DatatypeRestriction(std::move(base), std::move(facets)));
      });
    }
    if (kw.text == "DataOneOf") {
      std::vector<Literal> values;
      while (peek().kind != Tok::RParen) values.push_back(literal());
      next();
      return checked(kw,
                     [&] { return DataRange(DataOneOf(std::move(values))); });
    }
    unsupported(kw, kw.text);
  }

  template <class Nary>
  ClassExpression nary(const Token& kw) {
    std::vector<ClassExpression> ops;
    while (peek().kind != Tok::RParen) ops.push_back(class_expression());
    next();
    return checked(kw, [&] { return ClassExpression(Nary(std::move(ops))); });
  }

  template <class Card>
  ClassExpression cardinality_restriction(const Token& kw) {
    const std::int64_t n = cardinality();
    auto p = ope();
    ClassExpression filler = thing();
    if (peek().kind != Tok::RParen) filler = class_expression();
    expect(Tok::RParen);
    return checked(kw, [&] { return ClassExpression(Card(n, p, filler)); });
  }

  ClassExpression class_expression() {
    if (is_iri_token(peek())) return entity<OWLClass>();
    const Token& kw = peek();
    if (kw.kind != Tok::Word) fail_expected({"class expression"});
    using Builder = std::function<ClassExpression(Parser&, const Token&)>;
    static const std::unordered_map<std::string, Builder> kBuilders = {
        {"ObjectIntersectionOf",
         [](Parser& p, const Token& k) {
           return p.nary<ObjectIntersectionOf>(k);
         }},
        {"ObjectUnionOf",
         [](Parser& p, const Token& k) { return p.nary<ObjectUnionOf>(k); }},
        {"ObjectComplementOf",
         [](Parser& p, const Token&) {
           auto op = p.class_expression();
           p.expect(Tok::RParen);
           return ClassExpression(ObjectComplementOf{std::move(op)});
         }},
        {"ObjectSomeValuesFrom",
         [](Parser& p, const Token&) {
           auto r = p.ope();
           auto f = p.class_expression();
           p.expect(Tok::RParen);
           return ClassExpression(ObjectSomeValuesFrom{r, f});
         }},
        {"ObjectAllValuesFrom",
         [](Parser& p, const Token&) {
           auto r = p.ope();
           auto f = p.class_expression();
           p.expect(Tok::RParen);
           return ClassExpression(ObjectAllValuesFrom{r, f});
         }},
        {"ObjectHasValue",
         [](Parser& p, const Token&) {
           auto r = p.ope();
           auto i = p.entity<Individual>();
           p.expect(Tok::RParen);
           return ClassExpression(ObjectHasValue{r, i});
         }},
        {"ObjectOneOf",
         [](Parser& p, const Token& k) {
           std::vector<Individual> inds;
           while (p.peek().kind != Tok::RParen) {
             inds.push_back(p.entity<Individual>());
           }
           p.next();
           return p.checked(
               k, [&] { return ClassExpression(ObjectOneOf(std::move(inds))); });
         }},
        {"ObjectMinCardinality",
         [](Parser& p, const Token& k) {
           return p.cardinality_restriction<ObjectMinCardinality>(k);
         }},
        {"ObjectMaxCardinality",
         [](Parser& p, const Token& k) {
           return p.cardinality_restriction<ObjectMaxCardinality>(k);
         }},
        {"ObjectExactCardinality",
         [](Parser& p, const Token& k) {
           return p.cardinality_restriction<ObjectExactCardinality>(k);
         }},
        {"DataSomeValuesFrom",
         [](Parser& p, const Token&) {
           auto d = p.entity<DataProperty>();
           auto r = p.data_range();
           p.expect(Tok::RParen);
           return ClassExpression(DataSomeValuesFrom{d, r});
         }},
        {"DataAllValuesFrom",
         [](Parser& p, const Token&) {
           auto d = p.entity<DataProperty>();
           auto r = p.data_range();
           p.expect(Tok::RParen);
           return ClassExpression(DataAllValuesFrom{d, r});
         }},
        {"DataHasValue",
         [](Parser& p, const Token&) {
           auto d = p.entity<DataProperty>();
           auto v = p.literal();
           p.expect(Tok::RParen);
           return ClassExpression(DataHasValue{d, v});
         }},
    };
    auto it = kBuilders.find(kw.text);
    if (it == kBuilders.end()) unsupported(kw, kw.text);
    next();
    expect(Tok::LParen);
    return it->second(*this, kw);
  }

  // --- SWRL ---------------------------------------------------------------

  bool at_variable() const {
    return peek().kind == Tok::Word && peek().text == "Variable";
  }

  Variable variable() {
    const Token& kw = next();
    expect(Tok::LParen);
    IRI v = iri();
    expect(Tok::RParen);
    (void)kw;
    return Variable{std::string(v.remainder())};
  }

  IndividualArgument individual_arg() {
    if (at_variable()) return variable();
    return entity<Individual>();
  }

  SWRLAtom atom() {
    const Token& kw = peek();
    if (kw.kind != Tok::Word) fail_expected({"SWRL atom"});
    next();
    expect(Tok::LParen);
    if (kw.text == "ClassAtom") {
      auto ce = class_expression();
      auto arg = individual_arg();
      expect(Tok::RParen);
      return ClassAtom{std::move(ce), std::move(arg)};
    }
    if (kw.text == "ObjectPropertyAtom") {
      auto p = ope();
      auto a = individual_arg();
      auto b = individual_arg();
      expect(Tok::RParen);
      return ObjectPropertyAtom{std::move(p), std::move(a), std::move(b)};
    }
    if (kw.text == "DataPropertyAtom") {
      auto d = entity<DataProperty>();
      auto a = individual_arg();
      DataArgument v = at_variable() ? DataArgument(variable())
                                     : DataArgument(literal());
      expect(Tok::RParen);
      return DataPropertyAtom{std::move(d), std::move(a), std::move(v)};
    }
    unsupported(kw, kw.text);
  }

  std::vector<SWRLAtom> atom_list(std::string_view keyword) {
    expect_keyword(keyword);
    expect(Tok::LParen);
    std::vector<SWRLAtom> atoms;
    while (peek().kind != Tok::RParen) atoms.push_back(atom());
    next();
    return atoms;
  }

  // --- axioms -------------------------------------------------------------

  Entity declared_entity() {
    const Token& kw = peek();
    if (kw.kind != Tok::Word) fail_expected({"entity"});
    static const std::unordered_map<std::string, EntityKind> kKinds = {
        {"Class", EntityKind::Class},
        {"ObjectProperty", EntityKind::ObjectProperty},
        {"DataProperty", EntityKind::DataProperty},
        {"NamedIndividual", EntityKind::NamedIndividual},
        {"Datatype", EntityKind::Datatype},
        {"AnnotationProperty", EntityKind::AnnotationProperty},
    };
    auto it = kKinds.find(kw.text);
    if (it == kKinds.end()) {
      fail_at(kw, "unknown entity type " + show(kw),
              {"Class", "ObjectProperty", "DataProperty", "NamedIndividual",
               "Datatype", "AnnotationProperty"});
    }
    next();
    expect(Tok::LParen);
    IRI i = iri();
    expect(Tok::RParen);
    return Entity(it->second, std::move(i));
  }

  std::vector<ClassExpression> class_list() {
    std::vector<ClassExpression> out;
    while (peek().kind != Tok::RParen) out.push_back(class_expression());
    return out;
  }

  Axiom axiom() {
    const Token& kw = peek();
    if (kw.kind != Tok::Word) fail_expected({"axiom"});
    next();
    expect(Tok::LParen);
    if (peek().kind == Tok::Word && peek().text == "Annotation") {
      unsupported(peek(), "axiom annotation");
    }
    auto done = [&](Axiom ax) {
      expect(Tok::RParen);
      return ax;
    };
    const std::string& k = kw.text;
    if (k == "Declaration") return done(Declaration{declared_entity()});
    if (k == "SubClassOf") {
      auto sub = class_expression();
      auto sup = class_expression();
      return done(SubClassOf{std::move(sub), std::move(sup)});
    }
    if (k == "EquivalentClasses") {
      auto members = class_list();
      return done(checked(
          kw, [&] { return Axiom(EquivalentClasses(std::move(members))); }));
    }
    if (k == "DisjointClasses") {
      auto members = class_list();
      return done(checked(
          kw, [&] { return Axiom(DisjointClasses(std::move(members))); }));
    }
    if (k == "ClassAssertion") {
      auto ce = class_expression();
      auto ind = entity<Individual>();
      return done(ClassAssertion{std::move(ind), std::move(ce)});
    }
    if (k == "ObjectPropertyAssertion") {
      auto p = ope();
      auto s = entity<Individual>();
      auto o = entity<Individual>();
      return done(ObjectPropertyAssertion{std::move(p), std::move(s),
                                          std::move(o)});
    }
    if (k == "DataPropertyAssertion") {
      auto p = entity<DataProperty>();
      auto s = entity<Individual>();
      auto v = literal();
      return done(
          DataPropertyAssertion{std::move(p), std::move(s), std::move(v)});
    }
    if (k == "SubObjectPropertyOf") {
      if (peek().kind == Tok::Word && peek().text == "ObjectPropertyChain") {
        unsupported(peek(), "ObjectPropertyChain");
      }
      auto sub = ope();
      auto sup = ope();
      return done(SubObjectPropertyOf{std::move(sub), std::move(sup)});
    }
    if (k == "InverseObjectProperties") {
      auto a = ope();
      auto b = ope();
      return done(InverseObjectProperties{std::move(a), std::move(b)});
    }
    if (k == "ObjectPropertyDomain") {
      auto p = ope();
      auto c = class_expression();
      return done(ObjectPropertyDomain{std::move(p), std::move(c)});
    }
    if (k == "ObjectPropertyRange") {
      auto p = ope();
      auto c = class_expression();
      return done(ObjectPropertyRange{std::move(p), std::move(c)});
    }
    if (k == "FunctionalObjectProperty") {
      return done(FunctionalObjectProperty{ope()});
    }
    if (k == "DataPropertyDomain") {
      auto p = entity<DataProperty>();
      auto c = class_expression();
      return done(DataPropertyDomain{std::move(p), std::move(c)});
    }
    if (k == "DataPropertyRange") {
      auto p = entity<DataProperty>();
      auto r = data_range();
      return done(DataPropertyRange{std::move(p), std::move(r)});
    }
    if (k == "AnnotationAssertion") {
      auto p = entity<AnnotationProperty>();
      IRI subject = iri();
      if (peek().kind == Tok::String) {
        auto v = literal();
        return done(AnnotationAssertion{std::move(p), std::move(subject), v});
      }
      IRI v = iri();
      return done(
          AnnotationAssertion{std::move(p), std::move(subject), std::move(v)});
    }
    if (k == "DLSafeRule") {
      auto body = atom_list("Body");
      auto head = atom_list("Head");
      return done(checked(kw, [&] {
        return Axiom(SWRLRuleAxiom{SWRLRule(std::move(body), std::move(head))});
      }));
    }
    unsupported(kw, k);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  PrefixMap prefixes_;
};

}  // namespace

Ontology parse_functional(std::string_view text) {
  return Parser(text, PrefixMap()).document();
}

ClassExpression parse_functional_expression(std::string_view text,
                                            const PrefixMap& prefixes) {
  return Parser(text, prefixes).single_expression();
}

Axiom parse_functional_axiom(std::string_view text, const PrefixMap& prefixes) {
  return Parser(text, prefixes).single_axiom();
}

}  // namespace owlkit
