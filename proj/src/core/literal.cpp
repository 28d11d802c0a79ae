#include "owlkit/literal.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <regex>

#include "owlkit/errors.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

namespace {

bool matches(std::string_view text, const std::regex& re) {
  return std::regex_match(text.begin(), text.end(), re);
}

const std::regex& integer_re() {
  static const std::regex re(R"([+-]?[0-9]+)");
  return re;
}
const std::regex& decimal_re() {
  static const std::regex re(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+))");
  return re;
}
const std::regex& double_re() {
  static const std::regex re(
      R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?|[+-]?INF|NaN)");
  return re;
}

std::optional<double> to_double(std::string_view text) {
  if (text == "INF" || text == "+INF") return HUGE_VAL;
  if (text == "-INF") return -HUGE_VAL;
  if (text == "NaN") return std::nan("");
  // from_chars rejects a leading '+'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

bool is_numeric_datatype(const IRI& dt) {
  const auto& s = dt.str();
  return s == vocab::kXsdInteger || s == vocab::kXsdDouble ||
         s == vocab::kXsdFloat || s == vocab::kXsdDecimal;
}

std::optional<NumericValue> parse_numeric(std::string_view lexical,
                                          const IRI& datatype) {
  const auto& dt = datatype.str();
  if (dt == vocab::kXsdInteger) {
    if (!matches(lexical, integer_re())) return std::nullopt;
    std::string_view digits = lexical;
    if (digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    return NumericValue{value};
  }
  if (dt == vocab::kXsdDecimal) {
    if (!matches(lexical, decimal_re())) return std::nullopt;
  } else if (dt == vocab::kXsdDouble || dt == vocab::kXsdFloat) {
    if (!matches(lexical, double_re())) return std::nullopt;
  } else {
    return std::nullopt;
  }
  auto value = to_double(lexical);
  if (!value) return std::nullopt;
  return NumericValue{*value};
}

Literal::Literal(std::string lexical, IRI datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (is_numeric_datatype(datatype_)) {
    numeric_ = parse_numeric(lexical_, datatype_);
    if (!numeric_) {
      throw ModelError("invalid lexical form '" + lexical_ + "' for " +
                       datatype_.str());
    }
  }
}

Literal Literal::integer(std::int64_t value) {
  return Literal(std::to_string(value), make_iri(vocab::kXsdInteger));
}

Literal Literal::real(double value) {
  std::string text;
  if (std::isnan(value)) {
    text = "NaN";
  } else if (std::isinf(value)) {
    text = value > 0 ? "INF" : "-INF";
  } else {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    text.assign(buf.data(), ptr);
  }
  return Literal(std::move(text), make_iri(vocab::kXsdDouble));
}

Literal Literal::string(std::string value) {
  return Literal(std::move(value), make_iri(vocab::kXsdString));
}

double Literal::as_double() const {
  return std::visit([](auto v) { return static_cast<double>(v); }, *numeric_);
}

std::partial_ordering compare_numeric(const Literal& a, const Literal& b) {
  if (!a.is_numeric() || !b.is_numeric()) {
    return std::partial_ordering::unordered;
  }
  const auto* ia = std::get_if<std::int64_t>(&*a.numeric());
  const auto* ib = std::get_if<std::int64_t>(&*b.numeric());
  if (ia && ib) return *ia <=> *ib;
  return a.as_double() <=> b.as_double();
}

}  // namespace owlkit
