#include "owlkit/prefix_map.hpp"

#include <cctype>

#include "owlkit/vocab.hpp"

namespace owlkit {

PrefixMap::PrefixMap() {
  entries_ = {
      {"owl", std::string(vocab::kOwlNs)},
      {"rdf", std::string(vocab::kRdfNs)},
      {"rdfs", std::string(vocab::kRdfsNs)},
      {"xsd", std::string(vocab::kXsdNs)},
  };
}

void PrefixMap::set(std::string name, std::string ns) {
  for (auto& [n, v] : entries_) {
    if (n == name) {
      v = std::move(ns);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(ns));
}

std::optional<std::string_view> PrefixMap::lookup(std::string_view name) const {
  for (const auto& [n, v] : entries_) {
    if (n == name) return std::string_view(v);
  }
  return std::nullopt;
}

bool is_plain_local_name(std::string_view local) {
  if (local.empty()) return false;
  auto word = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
  if (!word(local.front()) || !word(local.back())) return false;
  for (unsigned char c : local) {
    if (!word(c) && c != '-' && c != '.') return false;
  }
  return true;
}

std::optional<std::string> PrefixMap::abbreviate(const IRI& iri) const {
  const std::string& s = iri.str();
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    if (e.second.empty() || s.size() <= e.second.size()) continue;
    if (s.compare(0, e.second.size(), e.second) != 0) continue;
    if (!is_plain_local_name(std::string_view(s).substr(e.second.size()))) {
      continue;
    }
    if (best == nullptr || e.second.size() > best->second.size()) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + s.substr(best->second.size());
}

std::optional<std::string> PrefixMap::expand(std::string_view pname) const {
  const auto colon = pname.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto ns = lookup(pname.substr(0, colon));
  if (!ns) return std::nullopt;
  return std::string(*ns) + std::string(pname.substr(colon + 1));
}

}  // namespace owlkit
