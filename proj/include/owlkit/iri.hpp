#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace owlkit {

// An absolute IRI. Immutable; equality is exact string equality.
//
// The remainder is the suffix after the last '#' or '/'. IRIs with neither
// separator (e.g. "urn:a:b") are not split and their remainder is the whole
// string.
class IRI {
 public:
  // Throws ModelError on empty input, embedded whitespace, or an IRI that
  // ends in a separator (empty remainder).
  explicit IRI(std::string text);

  const std::string& str() const { return full_; }
  std::string_view ns() const {
    return std::string_view(full_).substr(0, split_);
  }
  std::string_view remainder() const {
    return std::string_view(full_).substr(split_);
  }
  bool has_split() const { return split_ != 0; }

  friend bool operator==(const IRI& a, const IRI& b) {
    return a.full_ == b.full_;
  }
  friend std::strong_ordering operator<=>(const IRI& a, const IRI& b) {
    return a.full_.compare(b.full_) <=> 0;
  }

 private:
  std::string full_;
  std::size_t split_ = 0;
};

IRI make_iri(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const IRI& iri) {
  return os << '<' << iri.str() << '>';
}

}  // namespace owlkit

template <>
struct std::hash<owlkit::IRI> {
  std::size_t operator()(const owlkit::IRI& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};
