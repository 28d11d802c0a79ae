#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "owlkit/iri.hpp"

namespace owlkit {

// Parsed value of a numeric literal. xsd:integer maps to int64; xsd:double,
// xsd:float and xsd:decimal map to double (decimals lose precision beyond
// 17 significant digits).
using NumericValue = std::variant<std::int64_t, double>;

class Literal {
 public:
  // Validates the lexical form against numeric XSD datatypes; other
  // datatypes are stored opaquely. Throws ModelError on a malformed
  // numeric lexical form.
  Literal(std::string lexical, IRI datatype);

  static Literal integer(std::int64_t value);
  static Literal real(double value);  // xsd:double, shortest round-trip form
  static Literal string(std::string value);

  const std::string& lexical() const { return lexical_; }
  const IRI& datatype() const { return datatype_; }
  const std::optional<NumericValue>& numeric() const { return numeric_; }
  bool is_numeric() const { return numeric_.has_value(); }
  // Numeric value widened to double. Requires is_numeric().
  double as_double() const;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.lexical_ == b.lexical_ && a.datatype_ == b.datatype_;
  }
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.lexical_ <=> b.lexical_; c != 0) return c;
    return a.datatype_ <=> b.datatype_;
  }

 private:
  std::string lexical_;
  IRI datatype_;
  std::optional<NumericValue> numeric_;
};

bool is_numeric_datatype(const IRI& datatype);

// Parses a lexical form as the given numeric datatype; nullopt when the form
// is invalid or the datatype is not numeric.
std::optional<NumericValue> parse_numeric(std::string_view lexical,
                                          const IRI& datatype);

// Value comparison of two numeric literals; unordered when either side is
// non-numeric or NaN. Integers compare exactly, mixed pairs as doubles.
std::partial_ordering compare_numeric(const Literal& a, const Literal& b);

}  // namespace owlkit

template <>
struct std::hash<owlkit::Literal> {
  std::size_t operator()(const owlkit::Literal& l) const noexcept {
    return std::hash<std::string>{}(l.lexical()) ^
           (std::hash<owlkit::IRI>{}(l.datatype()) << 1);
  }
};
