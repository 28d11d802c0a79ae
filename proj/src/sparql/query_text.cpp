#include <cctype>
#include <set>

#include "owlkit/sparql.hpp"

namespace owlkit::sparql {

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Eq: return "=";
    case CompareOp::Ge: return ">=";
    case CompareOp::Gt: return ">";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Rendering

class Renderer {
 public:
  explicit Renderer(const PrefixMap& prefixes) : prefixes_(prefixes) {}

  std::string iri(const IRI& i) {
    if (auto short_form = prefixes_.abbreviate(i)) {
      used_.insert(short_form->substr(0, short_form->find(':')));
      return *short_form;
    }
    return "<" + i.str() + ">";
  }

  std::string literal(const Literal& l) {
    std::string out = "\"";
    for (char c : l.lexical()) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    return out + "\"^^" + iri(l.datatype());
  }

  std::string term(const Term& t) {
    if (auto* v = std::get_if<Var>(&t)) return "?" + v->name;
    if (auto* i = std::get_if<IRI>(&t)) return iri(*i);
    return literal(std::get<Literal>(t));
  }

  std::string expr(const Expr& e) {
    using K = Expr::Kind;
    const std::string v = "?" + e.var;
    switch (e.kind) {
      case K::Const: return e.value ? "true" : "false";
      case K::IsLiteral: return "isLiteral(" + v + ")";
      case K::IsNumeric: return "isNumeric(" + v + ")";
      case K::DatatypeIs:
        return "DATATYPE(" + v + ") = " + iri(std::get<IRI>(e.operand));
      case K::SameTerm:
        return "sameTerm(" + v + ", " + literal(std::get<Literal>(e.operand)) +
               ")";
      case K::Compare:
        return v + " " + std::string(to_string(e.op)) + " " +
               literal(std::get<Literal>(e.operand));
      case K::Not: return "!(" + expr(e.children.front()) + ")";
      case K::And:
      case K::Or: {
        std::string out;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          if (i > 0) out += e.kind == K::And ? " && " : " || ";
          const auto& c = e.children[i];
          const bool nested = c.kind == K::And || c.kind == K::Or;
          out += nested ? "(" + expr(c) + ")" : expr(c);
        }
        return out;
      }
    }
    return {};
  }

  std::string group(const Group& g) {
    std::string out = "{";
    for (const auto& e : g.elements) out += " " + element(e);
    return out + " }";
  }

  std::string element(const Element& e) {
    return std::visit([&](const auto& x) { return element_alt(x); }, e.value);
  }

  std::string prefix_lines() const {
    std::string out;
    for (const auto& [name, ns] : prefixes_.entries()) {
      if (used_.count(name)) out += "PREFIX " + name + ": <" + ns + ">\n";
    }
    return out;
  }

 private:
  std::string element_alt(const TriplePattern& t) {
    return term(t.subject) + " " + term(t.predicate) + " " + term(t.object) +
           " .";
  }
  std::string element_alt(const NotExists& n) {
    return "FILTER NOT EXISTS " + group(n.body);
  }
  std::string element_alt(const Union& u) {
    std::string out;
    for (std::size_t i = 0; i < u.branches.size(); ++i) {
      if (i > 0) out += " UNION ";
      out += group(u.branches[i]);
    }
    return out;
  }
  std::string element_alt(const CountSelect& c) {
    return "{ SELECT ?" + c.subject + " (COUNT(DISTINCT ?" + c.counted +
           ") AS ?" + c.count + ") WHERE " + group(c.where) + " GROUP BY ?" +
           c.subject + " HAVING(?" + c.count + " " +
           std::string(to_string(c.op)) + " " + std::to_string(c.n) + ") }";
  }
  std::string element_alt(const Values& v) {
    std::string out = "VALUES ?" + v.var + " {";
    for (const auto& i : v.values) out += " " + iri(i);
    return out + " }";
  }
  std::string element_alt(const Filter& f) {
    return "FILTER(" + expr(f.expr) + ")";
  }

  const PrefixMap& prefixes_;
  std::set<std::string> used_;
};

// ---------------------------------------------------------------------------
// Parsing

enum class Tok : std::uint8_t { Iri, PName, Var, String, Int, Word, Punct, End };

struct Token {
  Tok kind;
  std::string text;  // IRI / pname / var name / unescaped string / word
  std::size_t offset;
};

[[noreturn]] void unsupported(std::size_t offset, const std::string& what) {
  throw UnsupportedConstruct("unsupported SPARQL at offset " +
                             std::to_string(offset) + ": " + what);
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    const char c = s[i];
    if (c == '<') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '>' &&
             !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '"') {
        ++j;
      }
      if (j < s.size() && s[j] == '>' && j > i + 1 && s[i + 1] != '=') {
        out.push_back({Tok::Iri, std::string(s.substr(i + 1, j - i - 1)),
                       start});
        i = j + 1;
        continue;
      }
      const bool le = i + 1 < s.size() && s[i + 1] == '=';
      out.push_back({Tok::Punct, le ? "<=" : "<", start});
      i += le ? 2 : 1;
      continue;
    }
    if (c == '?') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_')) {
        ++j;
      }
      if (j == i + 1) unsupported(start, "empty variable name");
      out.push_back({Tok::Var, std::string(s.substr(i + 1, j - i - 1)), start});
      i = j;
      continue;
    }
    if (c == '"') {
      std::string value;
      std::size_t j = i + 1;
      while (true) {
        if (j >= s.size()) unsupported(start, "unterminated string");
        if (s[j] == '"') break;
        if (s[j] == '\\') {
          if (j + 1 >= s.size()) unsupported(j, "dangling escape");
          switch (s[j + 1]) {
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            case 'n': value += '\n'; break;
            case 'r': value += '\r'; break;
            case 't': value += '\t'; break;
            default: unsupported(j, "escape sequence");
          }
          j += 2;
          continue;
        }
        value += s[j++];
      }
      out.push_back({Tok::String, value, start});
      i = j + 1;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), start});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      std::size_t j = i;
      while (j < s.size() && (name_char(s[j]) || s[j] == ':')) ++j;
      // A trailing '.' ends the triple, not the name.
      while (j > i && s[j - 1] == '.') --j;
      std::string word(s.substr(i, j - i));
      out.push_back(
          {word.find(':') == std::string::npos ? Tok::Word : Tok::PName, word,
           start});
      i = j;
      continue;
    }
    bool matched = false;
    for (std::string_view p : {"&&", "||", ">=", "^^"}) {
      if (s.substr(i, p.size()) == p) {
        out.push_back({Tok::Punct, std::string(p), start});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("{}().,=>!").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), start});
      ++i;
      continue;
    }
    unsupported(start, std::string("character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SparqlQuery parse() {
    SparqlQuery q;
    while (word("PREFIX")) {
      const Token& name = next();
      if (name.kind != Tok::PName || name.text.back() != ':') {
        unsupported(name.offset, "prefix declaration");
      }
      const Token& ns = next();
      if (ns.kind != Tok::Iri) unsupported(ns.offset, "prefix namespace");
      q.prefixes.set(name.text.substr(0, name.text.size() - 1), ns.text);
    }
    prefixes_ = &q.prefixes;
    expect_word("SELECT");
    expect_word("DISTINCT");
    q.variable = var();
    expect_word("WHERE");
    q.where = group();
    if (peek().kind != Tok::End) unsupported(peek().offset, "trailing input");
    q.text = render_query(q.prefixes, q.variable, q.where);
    return q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at(std::string_view punct, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
  }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Word && peek(ahead).text == w;
  }
  bool punct(std::string_view p) {
    if (!at(p)) return false;
    next();
    return true;
  }
  bool word(std::string_view w) {
    if (!at_word(w)) return false;
    next();
    return true;
  }
  void expect(std::string_view p) {
    if (!punct(p)) unsupported(peek().offset, "expected '" + std::string(p) + "'");
  }
  void expect_word(std::string_view w) {
    if (!word(w)) unsupported(peek().offset, "expected " + std::string(w));
  }
  std::string var() {
    const Token& t = next();
    if (t.kind != Tok::Var) unsupported(t.offset, "expected a variable");
    return t.text;
  }
  std::int64_t integer() {
    const Token& t = next();
    if (t.kind != Tok::Int) unsupported(t.offset, "expected an integer");
    return std::stoll(t.text);
  }

  IRI iri_of(const Token& t) {
    try {
      if (t.kind == Tok::Iri) return IRI(t.text);
      if (t.kind == Tok::PName) {
        if (auto full = prefixes_->expand(t.text)) return IRI(*full);
        unsupported(t.offset, "unbound prefix in " + t.text);
      }
    } catch (const ModelError& e) {
      unsupported(t.offset, e.what());
    }
    unsupported(t.offset, "expected an IRI");
  }

  IRI iri() { return iri_of(next()); }

  Literal literal() {
    const Token& t = next();
    if (t.kind != Tok::String) unsupported(t.offset, "expected a literal");
    if (!punct("^^")) unsupported(peek().offset, "untyped literal");
    const IRI dt = iri();
    try {
      return Literal(t.text, dt);
    } catch (const ModelError& e) {
      unsupported(t.offset, e.what());
    }
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::Var) return Var{var()};
    if (t.kind == Tok::String) return literal();
    return iri();
  }

  Group group() {
    expect("{");
    Group g;
    while (!punct("}")) {
      if (peek().kind == Tok::End) unsupported(peek().offset, "unclosed group");
      g.elements.push_back(element());
    }
    return g;
  }

  Element element() {
    if (at_word("FILTER") && at_word("NOT", 1)) {
      next();
      next();
      expect_word("EXISTS");
      return {NotExists{group()}};
    }
    if (word("FILTER")) {
      expect("(");
      Expr e = expr();
      expect(")");
      return {Filter{std::move(e)}};
    }
    if (word("VALUES")) {
      Values v{var(), {}};
      expect("{");
      while (!punct("}")) v.values.push_back(iri());
      return {std::move(v)};
    }
    if (at("{") && at_word("SELECT", 1)) return {count_select()};
    if (at("{")) {
      Union u;
      u.branches.push_back(group());
      while (word("UNION")) u.branches.push_back(group());
      if (u.branches.size() < 2) unsupported(peek().offset, "nested group");
      return {std::move(u)};
    }
    TriplePattern t{term(), term(), term()};
    if (std::holds_alternative<Literal>(t.subject) ||
        std::holds_alternative<Literal>(t.predicate)) {
      unsupported(peek().offset, "literal in subject or predicate position");
    }
    expect(".");
    return {std::move(t)};
  }

  CountSelect count_select() {
    expect("{");
    expect_word("SELECT");
    CountSelect c;
    c.subject = var();
    expect("(");
    expect_word("COUNT");
    expect("(");
    expect_word("DISTINCT");
    c.counted = var();
    expect(")");
    expect_word("AS");
    c.count = var();
    expect(")");
    expect_word("WHERE");
    c.where = group();
    expect_word("GROUP");
    expect_word("BY");
    const std::size_t at_group = peek().offset;
    if (var() != c.subject) unsupported(at_group, "GROUP BY variable");
    expect_word("HAVING");
    expect("(");
    const std::size_t at_having = peek().offset;
    if (var() != c.count) unsupported(at_having, "HAVING variable");
    c.op = compare_op();
    c.n = integer();
    expect(")");
    expect("}");
    return c;
  }

  CompareOp compare_op() {
    const Token& t = next();
    if (t.kind == Tok::Punct) {
      if (t.text == "<") return CompareOp::Lt;
      if (t.text == "<=") return CompareOp::Le;
      if (t.text == "=") return CompareOp::Eq;
      if (t.text == ">=") return CompareOp::Ge;
      if (t.text == ">") return CompareOp::Gt;
    }
    unsupported(t.offset, "expected a comparison operator");
  }

  Expr expr() {
    std::vector<Expr> ops{conj()};
    while (punct("||")) ops.push_back(conj());
    if (ops.size() == 1) return std::move(ops.front());
    Expr e;
    e.kind = Expr::Kind::Or;
    e.children = std::move(ops);
    return e;
  }

  Expr conj() {
    std::vector<Expr> ops{unary()};
    while (punct("&&")) ops.push_back(unary());
    if (ops.size() == 1) return std::move(ops.front());
    Expr e;
    e.kind = Expr::Kind::And;
    e.children = std::move(ops);
    return e;
  }

  Expr unary() {
    Expr e;
    if (punct("!")) {
      expect("(");
      e.kind = Expr::Kind::Not;
      e.children.push_back(expr());
      expect(")");
      return e;
    }
    if (punct("(")) {
      Expr inner = expr();
      expect(")");
      return inner;
    }
    if (word("true") || word("false")) {
      e.kind = Expr::Kind::Const;
      e.value = toks_[pos_ - 1].text == "true";
      return e;
    }
    auto call = [&](Expr::Kind kind) {
      e.kind = kind;
      expect("(");
      e.var = var();
    };
    if (word("isLiteral")) {
      call(Expr::Kind::IsLiteral);
      expect(")");
      return e;
    }
    if (word("isNumeric")) {
      call(Expr::Kind::IsNumeric);
      expect(")");
      return e;
    }
    if (word("DATATYPE")) {
      call(Expr::Kind::DatatypeIs);
      expect(")");
      expect("=");
      e.operand = iri();
      return e;
    }
    if (word("sameTerm")) {
      call(Expr::Kind::SameTerm);
      expect(",");
      e.operand = literal();
      expect(")");
      return e;
    }
    if (peek().kind == Tok::Var) {
      e.kind = Expr::Kind::Compare;
      e.var = var();
      e.op = compare_op();
      e.operand = literal();
      return e;
    }
    unsupported(peek().offset, "filter expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const PrefixMap* prefixes_ = nullptr;
};

}  // namespace

std::string render_query(const PrefixMap& prefixes, const std::string& variable,
                         const Group& where) {
  Renderer r(prefixes);
  const std::string body =
      "SELECT DISTINCT ?" + variable + " WHERE " + r.group(where);
  return r.prefix_lines() + body;
}

SparqlQuery parse_query(std::string_view text) { return Parser(text).parse(); }

}  // namespace owlkit::sparql
