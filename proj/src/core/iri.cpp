#include "owlkit/iri.hpp"

#include <algorithm>
#include <cctype>

#include "owlkit/errors.hpp"

namespace owlkit {

IRI::IRI(std::string text) : full_(std::move(text)) {
  if (full_.empty()) throw ModelError("IRI must not be empty");
  if (std::any_of(full_.begin(), full_.end(),
                  [](unsigned char c) { return std::isspace(c) != 0; })) {
    throw ModelError("IRI must not contain whitespace: '" + full_ + "'");
  }
  const auto pos = full_.find_last_of("#/");
  if (pos == std::string::npos) return;
  if (pos + 1 == full_.size()) {
    throw ModelError("IRI has an empty remainder after its last separator: '" +
                     full_ + "'");
  }
  split_ = pos + 1;
}

IRI make_iri(std::string_view text) {
  const auto ws = std::find_if(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
  std::size_t offset = 0;
  if (ws != text.end()) {
    offset = static_cast<std::size_t>(ws - text.begin());
  } else if (!text.empty()) {
    offset = text.size() - 1;
  }
  try {
    return IRI(std::string(text));
  } catch (const ModelError& e) {
    throw ParseError(e.what(), 1, offset + 1, offset);
  }
}

}  // namespace owlkit
