#include "text_common.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstring>
#include <utility>

#include "owlkit/vocab.hpp"

namespace owlkit {

PrefixContext PrefixContext::for_ontology(const Ontology& onto) {
  PrefixContext ctx;
  ctx.prefixes = onto.prefixes();
  if (auto ns = ctx.prefixes.lookup("")) {
    ctx.default_ns = std::string(*ns);
  } else if (onto.iri()) {
    ctx.default_ns = onto.iri()->str() + "#";
  }
  for (const auto& d : onto.data_properties_in_signature()) {
    ctx.data_properties.insert(d.iri);
  }
  return ctx;
}

IRI PrefixContext::resolve(std::string_view name) const {
  if (name.find(':') != std::string_view::npos) {
    auto full = prefixes.expand(name);
    if (!full) {
      throw Error("unknown prefix '" +
                  std::string(name.substr(0, name.find(':') + 1)) + "'");
    }
    return make_iri(*full);
  }
  if (default_ns.empty()) {
    throw Error("no default namespace for bare name '" + std::string(name) +
                "'");
  }
  return make_iri(default_ns + std::string(name));
}

namespace syntax_detail {

namespace {

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c); }

constexpr std::array<std::string_view, 10> kUnicodeSymbols = {
    "⊓", "⊔", "¬", "∃", "∀", "⊤", "⊥", "≥", "≤", "⁻"};

constexpr std::array<std::pair<std::string_view, std::string_view>, 7>
    kEscapes = {{{"sqcap", "⊓"},
                 {"sqcup", "⊔"},
                 {"exists", "∃"},
                 {"forall", "∀"},
                 {"neg", "¬"},
                 {"top", "⊤"},
                 {"bot", "⊥"}}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({TokKind::End, "", pos_, line_, column_});
        return out;
      }
      out.push_back(lex_one());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t offset,
                         std::size_t line, std::size_t column) const {
    std::string found = offset < text_.size()
                            ? std::string(1, text_[offset])
                            : std::string("end of input");
    throw ParseError(message, line, column, offset, {}, found);
  }

  char at(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[pos_++]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      advance();
    }
  }

  Token lex_one() {
    Token tok{TokKind::Symbol, "", pos_, line_, column_};
    const char c = at(0);
    if (c == '"') return lex_string(tok);
    if (c == '<') {
      if (auto iri = try_iri(tok)) return *iri;
      return symbol(tok, at(1) == '=' ? 2 : 1);
    }
    if (c == '>') return symbol(tok, at(1) == '=' ? 2 : 1);
    if (c == '-' && at(1) == '>') return symbol(tok, 2);
    if ((c == '-' || c == '+') && is_digit(at(1))) return lex_number(tok);
    if (is_digit(c)) return lex_number(tok);
    if (c == '^') return symbol(tok, at(1) == '^' ? 2 : 1);
    if (c == '?') {
      advance();
      tok.kind = TokKind::Variable;
      const std::size_t start = pos_;
      while (is_name_char(at(0))) advance();
      if (pos_ == start) fail("empty variable name", tok.offset, tok.line, tok.column);
      tok.text = std::string(text_.substr(start, pos_ - start));
      return tok;
    }
    if (c == '\\') {
      std::size_t k = 1;
      while (at(k) >= 'a' && at(k) <= 'z') ++k;
      const auto word = text_.substr(pos_ + 1, k - 1);
      for (const auto& [name, sym] : kEscapes) {
        if (word == name) {
          advance(k);
          tok.text = std::string(sym);
          return tok;
        }
      }
      fail("unknown escape '\\" + std::string(word) + "'", tok.offset, tok.line,
           tok.column);
    }
    if (std::strchr("(){}[],.=", c) != nullptr) return symbol(tok, 1);
    for (const auto sym : kUnicodeSymbols) {
      if (text_.substr(pos_, sym.size()) == sym) return symbol(tok, sym.size());
    }
    if (is_name_start(c) || c == ':') return lex_name(tok);
    fail("unexpected character", tok.offset, tok.line, tok.column);
  }

  Token symbol(Token tok, std::size_t n) {
    tok.text = std::string(text_.substr(pos_, n));
    advance(n);
    return tok;
  }

  std::optional<Token> try_iri(Token tok) {
    std::size_t k = 1;
    while (pos_ + k < text_.size()) {
      const char ch = text_[pos_ + k];
      if (ch == '>') break;
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '<') {
        return std::nullopt;
      }
      ++k;
    }
    if (pos_ + k >= text_.size() || k == 1) return std::nullopt;
    tok.kind = TokKind::IriRef;
    tok.text = std::string(text_.substr(pos_ + 1, k - 1));
    advance(k + 1);
    return tok;
  }

  Token lex_number(Token tok) {
    const std::size_t start = pos_;
    if (at(0) == '-' || at(0) == '+') advance();
    while (is_digit(at(0))) advance();
    tok.kind = TokKind::Integer;
    if (at(0) == '.' && is_digit(at(1))) {
      tok.kind = TokKind::Decimal;
      advance();
      while (is_digit(at(0))) advance();
    }
    if ((at(0) == 'e' || at(0) == 'E') &&
        (is_digit(at(1)) ||
         ((at(1) == '-' || at(1) == '+') && is_digit(at(2))))) {
      tok.kind = TokKind::Decimal;
      advance(2);
      while (is_digit(at(0))) advance();
    }
    tok.text = std::string(text_.substr(start, pos_ - start));
    return tok;
  }

  Token lex_name(Token tok) {
    const std::size_t start = pos_;
    bool colon = false;
    while (true) {
      const char ch = at(0);
      if (is_name_char(ch)) {
        advance();
      } else if (ch == '-' && at(1) != '>' && pos_ > start) {
        advance();
      } else if (ch == ':' && !colon) {
        colon = true;
        advance();
      } else {
        break;
      }
    }
    tok.kind = TokKind::Name;
    tok.text = std::string(text_.substr(start, pos_ - start));
    if (tok.text == ":") fail("empty name", tok.offset, tok.line, tok.column);
    return tok;
  }

  Token lex_string(Token tok) {
    advance();
    std::string value;
    while (true) {
      if (pos_ >= text_.size()) {
        fail("unterminated string", tok.offset, tok.line, tok.column);
      }
      const char ch = at(0);
      if (ch == '"') {
        advance();
        break;
      }
      if (ch == '\\') {
        const char esc = at(1);
        switch (esc) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default:
            fail("unsupported string escape", pos_, line_, column_);
        }
        advance(2);
        continue;
      }
      value += ch;
      advance();
    }
    if (at(0) == '@') {
      fail("unsupported construct: language-tagged literal", pos_, line_,
           column_);
    }
    tok.kind = TokKind::String;
    tok.text = std::move(value);
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_bare_ident(std::string_view s) {
  if (s.empty() || !is_name_start(s.front()) || s.back() == '-') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return is_name_char(c) || c == '-'; });
}

bool is_local_part(std::string_view s) {
  if (s.empty() || s.back() == '-' || s.front() == '-') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return is_name_char(c) || c == '-'; });
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  return Lexer(text).run();
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokKind::End: return "end of input";
    case TokKind::String: return quote(tok.text);
    case TokKind::Variable: return "?" + tok.text;
    case TokKind::IriRef: return "<" + tok.text + ">";
    default: return tok.text;
  }
}

const Token& Cursor::peek(std::size_t ahead) const {
  return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
}

const Token& Cursor::next() {
  const Token& t = toks_[pos_];
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool Cursor::at_symbol(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokKind::Symbol && t.text == s;
}

bool Cursor::at_word(std::string_view w, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokKind::Name && t.text == w;
}

bool Cursor::accept_symbol(std::string_view s) {
  if (!at_symbol(s)) return false;
  next();
  return true;
}

bool Cursor::accept_word(std::string_view w) {
  if (!at_word(w)) return false;
  next();
  return true;
}

const Token& Cursor::expect_symbol(std::string_view s) {
  if (!at_symbol(s)) fail(peek(), "syntax error", {std::string(s)});
  return next();
}

const Token& Cursor::expect_word(std::string_view w) {
  if (!at_word(w)) fail(peek(), "syntax error", {std::string(w)});
  return next();
}

void Cursor::expect_end() {
  if (peek().kind != TokKind::End) {
    fail(peek(), "unexpected trailing input", {"end of input"});
  }
}

void Cursor::fail(const Token& at, std::string message,
                  std::vector<std::string> expected) const {
  throw ParseError(std::move(message), at.line, at.column, at.offset,
                   std::move(expected), describe(at));
}

IRI Cursor::resolve(const Token& tok) const {
  try {
    if (tok.kind == TokKind::IriRef) return make_iri(tok.text);
    return ctx_.resolve(tok.text);
  } catch (const ParseError& e) {
    fail(tok, "invalid IRI: " + e.detail());
  } catch (const Error& e) {
    fail(tok, std::string("unresolved identifier: ") + e.what());
  }
}

bool Cursor::at_identifier(std::size_t ahead) const {
  const auto k = peek(ahead).kind;
  return k == TokKind::Name || k == TokKind::IriRef;
}

IRI Cursor::expect_identifier() {
  if (!at_identifier()) fail(peek(), "syntax error", {"identifier"});
  return resolve(next());
}

std::int64_t Cursor::expect_cardinality() {
  const Token& t = peek();
  if (t.kind != TokKind::Integer) {
    fail(t, "syntax error", {"non-negative integer"});
  }
  std::int64_t n = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n < 0) {
    fail(t, "cardinality must be a non-negative integer");
  }
  next();
  return n;
}

bool Cursor::at_literal(std::size_t ahead) const {
  const auto k = peek(ahead).kind;
  return k == TokKind::Integer || k == TokKind::Decimal || k == TokKind::String;
}

Literal Cursor::expect_literal() {
  const Token& t = peek();
  try {
    switch (t.kind) {
      case TokKind::Integer:
        next();
        return Literal(t.text, make_iri(vocab::kXsdInteger));
      case TokKind::Decimal: {
        next();
        const bool exponent = t.text.find_first_of("eE") != std::string::npos;
        return Literal(t.text, make_iri(exponent ? vocab::kXsdDouble
                                                 : vocab::kXsdDecimal));
      }
      case TokKind::String: {
        next();
        if (accept_symbol("^^")) {
          const Token& dt = peek();
          const IRI datatype = expect_identifier();
          try {
            return Literal(t.text, datatype);
          } catch (const ModelError& e) {
            fail(dt, e.what());
          }
        }
        return Literal::string(t.text);
      }
      default: break;
    }
  } catch (const ModelError& e) {
    fail(t, e.what());
  }
  fail(t, "syntax error", {"literal"});
}

bool is_datatype_iri(const IRI& iri) {
  return iri.str().starts_with(vocab::kXsdNs) ||
         iri.str() == vocab::kRdfsLiteral;
}

std::string render_name(const IRI& iri, const PrefixContext& ctx,
                        std::initializer_list<std::string_view> reserved) {
  const std::string& s = iri.str();
  if (!ctx.default_ns.empty() && s.starts_with(ctx.default_ns)) {
    const std::string_view rest = std::string_view(s).substr(ctx.default_ns.size());
    if (is_bare_ident(rest) &&
        std::find(reserved.begin(), reserved.end(), rest) == reserved.end()) {
      return std::string(rest);
    }
  }
  const PrefixMap::Entry* best = nullptr;
  for (const auto& entry : ctx.prefixes.entries()) {
    const auto& ns = entry.second;
    if (s.size() > ns.size() && s.starts_with(ns) &&
        is_local_part(std::string_view(s).substr(ns.size())) &&
        (best == nullptr || ns.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best != nullptr) return best->first + ":" + s.substr(best->second.size());
  return "<" + s + ">";
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string render_literal(const Literal& lit, const PrefixContext& ctx) {
  const std::string& dt = lit.datatype().str();
  if (dt == vocab::kXsdInteger) {
    const std::string& lex = lit.lexical();
    const std::size_t start = (lex[0] == '-' || lex[0] == '+') ? 1 : 0;
    if (lex.size() > start &&
        std::all_of(lex.begin() + static_cast<std::ptrdiff_t>(start), lex.end(),
                    is_digit)) {
      return lex;
    }
  }
  if (dt == vocab::kXsdString) return quote(lit.lexical());
  return quote(lit.lexical()) + "^^" + render_name(lit.datatype(), ctx);
}

namespace {

template <class Nary>
ClassExpression flatten(std::vector<ClassExpression> ops) {
  std::vector<ClassExpression> flat;
  for (auto& op : ops) {
    if (auto* inner = op.get_if<Nary>()) {
      flat.insert(flat.end(), inner->operands.begin(), inner->operands.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return flat.front();
  return Nary(std::move(flat));
}

}  // namespace

ClassExpression flat_and(std::vector<ClassExpression> ops) {
  return flatten<ObjectIntersectionOf>(std::move(ops));
}

ClassExpression flat_or(std::vector<ClassExpression> ops) {
  return flatten<ObjectUnionOf>(std::move(ops));
}

}  // namespace syntax_detail
}  // namespace owlkit
