#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "owlkit/rdf_mapping.hpp"
#include "owlkit/syntax.hpp"

// Class expression → SPARQL SELECT translation over the standard RDF
// encoding of assertions, and an evaluator for the emitted subset.
//
// ⊤ compiles to `?v rdf:type owl:NamedIndividual .`, so only declared
// individuals are ever returned.
namespace owlkit::sparql {

class UnsupportedForSparql : public Error {
 public:
  using Error::Error;
};

// Query text or structure outside the subset produced by to_sparql.
class UnsupportedConstruct : public Error {
 public:
  using Error::Error;
};

struct Var {
  std::string name;  // without '?'
  friend bool operator==(const Var&, const Var&) = default;
};

using Term = std::variant<Var, IRI, Literal>;

enum class CompareOp : std::uint8_t { Lt, Le, Eq, Ge, Gt };

std::string_view to_string(CompareOp op);

// FILTER expression. Children are used by And, Or (>= 2) and Not (1).
struct Expr {
  enum class Kind : std::uint8_t {
    Const,       // true / false
    IsLiteral,   // isLiteral(?v)
    IsNumeric,   // isNumeric(?v)
    DatatypeIs,  // DATATYPE(?v) = iri
    SameTerm,    // sameTerm(?v, literal)
    Compare,     // ?v op literal
    And,
    Or,
    Not,
  };

  Kind kind = Kind::Const;
  bool value = false;
  std::string var;
  CompareOp op = CompareOp::Eq;
  std::variant<std::monostate, IRI, Literal> operand;
  std::vector<Expr> children;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Element;

struct Group {
  std::vector<Element> elements;
  friend bool operator==(const Group&, const Group&) = default;
};

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct NotExists {
  Group body;
  friend bool operator==(const NotExists&, const NotExists&) = default;
};

struct Union {
  std::vector<Group> branches;  // >= 2
  friend bool operator==(const Union&, const Union&) = default;
};

// { SELECT ?subject (COUNT(DISTINCT ?counted) AS ?count) WHERE { … }
//   GROUP BY ?subject HAVING(?count op n) }
struct CountSelect {
  std::string subject;
  std::string counted;
  std::string count;
  Group where;
  CompareOp op = CompareOp::Ge;
  std::int64_t n = 0;
  friend bool operator==(const CountSelect&, const CountSelect&) = default;
};

struct Values {
  std::string var;
  std::vector<IRI> values;
  friend bool operator==(const Values&, const Values&) = default;
};

struct Filter {
  Expr expr;
  friend bool operator==(const Filter&, const Filter&) = default;
};

struct Element {
  std::variant<TriplePattern, NotExists, Union, CountSelect, Values, Filter>
      value;
  friend bool operator==(const Element&, const Element&) = default;
};

// `SELECT DISTINCT ?variable WHERE where`. `text` is always
// render_query(prefixes, variable, where).
struct SparqlQuery {
  std::string variable;
  PrefixMap prefixes;
  Group where;
  std::string text;
};

// PREFIX lines for the prefixes actually used (in PrefixMap order), then the
// SELECT on one line. IRIs are abbreviated through `prefixes` when possible.
std::string render_query(const PrefixMap& prefixes, const std::string& variable,
                         const Group& where);

// Fresh variables are named ?y0, ?y1, … (successors and values) and ?n0, …
// (counts), each numbered in pre-order; `var` must not collide with them. Throws
// UnsupportedForSparql when the expression fails validate_expression.
SparqlQuery to_sparql(const ClassExpression& ce, const PrefixContext& ctx = {},
                      const std::string& var = "x");

// Parses text in the emitted subset; throws UnsupportedConstruct otherwise.
SparqlQuery parse_query(std::string_view text);

// Set of IRIs bound to the projected variable. Blank nodes and literals are
// dropped.
std::set<IRI> eval_query(const SparqlQuery& query,
                         const std::vector<Triple>& triples);

}  // namespace owlkit::sparql
