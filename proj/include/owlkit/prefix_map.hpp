#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "owlkit/iri.hpp"

namespace owlkit {

// Prefix name → namespace bindings in insertion order. The empty name is the
// default prefix (written ":local"). Always binds owl, rdf, rdfs and xsd.
class PrefixMap {
 public:
  using Entry = std::pair<std::string, std::string>;

  PrefixMap();

  // Rebinding an existing name keeps its position.
  void set(std::string name, std::string ns);
  std::optional<std::string_view> lookup(std::string_view name) const;
  const std::vector<Entry>& entries() const { return entries_; }

  // "name:local" using the longest matching namespace, when the local part
  // is a plain name; nullopt otherwise.
  std::optional<std::string> abbreviate(const IRI& iri) const;
  // Expands "name:local"; nullopt for an unbound name.
  std::optional<std::string> expand(std::string_view pname) const;

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::vector<Entry> entries_;
};

// True when `local` can be written after "prefix:" without escaping.
bool is_plain_local_name(std::string_view local);

}  // namespace owlkit
