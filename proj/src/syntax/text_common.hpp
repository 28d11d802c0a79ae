#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "owlkit/errors.hpp"
#include "owlkit/syntax.hpp"

// Lexer and rendering helpers shared by the DL, Manchester and SWRL syntaxes.
namespace owlkit::syntax_detail {

enum class TokKind {
  Name,      // bare or prefixed identifier
  IriRef,    // text is the IRI without brackets
  Integer,
  Decimal,
  String,    // text is unescaped
  Variable,  // text excludes the leading '?'
  Symbol,    // punctuation and DL operators, escapes already mapped
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& tok);

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, const PrefixContext& ctx)
      : toks_(std::move(tokens)), ctx_(ctx) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const;
  bool at_word(std::string_view w, std::size_t ahead = 0) const;
  bool accept_symbol(std::string_view s);
  bool accept_word(std::string_view w);
  const Token& expect_symbol(std::string_view s);
  const Token& expect_word(std::string_view w);
  void expect_end();
  [[noreturn]] void fail(const Token& at, std::string message,
                         std::vector<std::string> expected = {}) const;

  // Name or IriRef token to an IRI, failing with the token's position.
  IRI resolve(const Token& tok) const;
  bool at_identifier(std::size_t ahead = 0) const;
  IRI expect_identifier();
  std::int64_t expect_cardinality();

  // Integer, Decimal or String with optional ^^datatype.
  bool at_literal(std::size_t ahead = 0) const;
  Literal expect_literal();

  const PrefixContext& ctx() const { return ctx_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const PrefixContext& ctx_;
};

bool is_datatype_iri(const IRI& iri);

// Bare, prefixed or bracketed form. Bare names must not collide with
// `reserved` words.
std::string render_name(const IRI& iri, const PrefixContext& ctx,
                        std::initializer_list<std::string_view> reserved = {});
// Integers bare, strings quoted, everything else "lex"^^datatype.
std::string render_literal(const Literal& lit, const PrefixContext& ctx);
std::string quote(std::string_view text);

// Flattening constructors used by both class-expression parsers.
ClassExpression flat_and(std::vector<ClassExpression> ops);
ClassExpression flat_or(std::vector<ClassExpression> ops);

}  // namespace owlkit::syntax_detail
