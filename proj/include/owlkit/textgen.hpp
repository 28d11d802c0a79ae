#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owlkit/errors.hpp"
#include "owlkit/ontology.hpp"

// Ontology generation from natural-language text through a chat-completion
// extraction client: extract (subject | predicate | object) lines, type the
// entities, then materialize axioms.
namespace owlkit::textgen {

// Transport, HTTP status or response-shape failure, or a mock without a
// recorded completion.
class ClientError : public Error {
 public:
  using Error::Error;
};

// No extraction line parsed after all retries.
class ExtractionEmpty : public Error {
 public:
  using Error::Error;
};

class ExtractorClient {
 public:
  virtual ~ExtractorClient() = default;
  // Completion text for a single-message prompt at temperature 0.
  virtual std::string send(const std::string& prompt) = 0;
};

// Lowercase hex SHA-256 of the UTF-8 bytes.
std::string sha256_hex(std::string_view data);

// Recorded prompt → completion pairs:
//   {"format":"owlkit-transcript/1",
//    "entries":[{"prompt_sha256":"…","completion":"…"}, …]}
struct Transcript {
  std::map<std::string, std::string> completions;  // keyed by prompt hash

  static Transcript parse(std::string_view json);
  static Transcript load(const std::filesystem::path& path);
  // Entries sorted by hash, two-space indentation, trailing newline.
  std::string to_json() const;
  void save(const std::filesystem::path& path) const;
};

// Replays a transcript; throws ClientError for an unrecorded prompt.
class MockClient : public ExtractorClient {
 public:
  explicit MockClient(Transcript transcript)
      : transcript_(std::move(transcript)) {}
  std::string send(const std::string& prompt) override;

 private:
  Transcript transcript_;
};

// Forwards to another client and records every exchange.
class RecordingClient : public ExtractorClient {
 public:
  explicit RecordingClient(ExtractorClient& inner) : inner_(inner) {}
  std::string send(const std::string& prompt) override;
  const Transcript& transcript() const { return transcript_; }

 private:
  ExtractorClient& inner_;
  Transcript transcript_;
};

struct HttpSettings {
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;
  std::string model = "gpt-4o-mini";
  std::chrono::seconds timeout{30};
};

// Reads OWLKIT_LLM_API_KEY (required) and OWLKIT_LLM_BASE_URL (optional);
// throws ClientError when the key is unset.
HttpSettings http_settings_from_environment(std::string model);

// POST {base_url}/chat/completions with
// {model, temperature: 0, messages: [{role: "user", content: prompt}]} and a
// bearer token; returns choices[0].message.content.
class HttpChatClient : public ExtractorClient {
 public:
  explicit HttpChatClient(HttpSettings settings);
  std::string send(const std::string& prompt) override;

 private:
  HttpSettings settings_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // base path + "/chat/completions"
};

// Template text with {{name}} placeholders.
struct PromptTemplates {
  std::string extraction;     // {{text}}
  std::string typing_closed;  // {{entities}}, {{classes}}
  std::string typing_open;    // {{entities}}, {{classes}}

  // extraction.txt, typing_closed.txt and typing_open.txt in `dir`.
  static PromptTemplates load(const std::filesystem::path& dir);
};

// Replaces every {{key}}; throws ModelError for an unknown placeholder.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

struct GenerationConfig {
  std::string ns = "http://example.org/generated#";
  std::vector<OWLClass> predefined_classes;
  bool allow_llm_classes = true;
  std::string model = "gpt-4o-mini";
  std::size_t max_retries = 2;
  PromptTemplates prompts;
};

// Throws ModelError unless predefined_classes is non-empty or
// allow_llm_classes holds, and the namespace ends in '#' or '/'.
void validate(const GenerationConfig& config);

struct ExtractionTriple {
  std::string subject;
  std::string predicate;
  std::string object;             // trimmed surface form
  std::optional<Literal> number;  // set iff object is a decimal number

  friend bool operator==(const ExtractionTriple&,
                         const ExtractionTriple&) = default;
};

// [+-]?digits(.digits)? → xsd:integer when there is no fraction and the
// value fits 64 bits, else xsd:double. nullopt for anything else.
std::optional<Literal> parse_number(std::string_view text);

// "(s | p | o)" with surrounding whitespace. nullopt when malformed or when
// a field sanitizes to an empty name.
std::optional<ExtractionTriple> parse_extraction_line(std::string_view line);

struct Extraction {
  std::vector<ExtractionTriple> triples;
  std::size_t malformed_lines = 0;  // non-blank lines skipped, last attempt
  std::size_t attempts = 0;
};

// Throws ModelError for blank text, ExtractionEmpty when no line parses
// after 1 + max_retries attempts.
Extraction extract_triples(std::string_view text, ExtractorClient& client,
                           const GenerationConfig& config);

// IRI minting. Individuals: lowercase, whitespace runs → '_', other
// characters outside [a-z0-9_-] dropped. Properties: camelCase. Classes:
// CamelCase. Non-alphanumerics separate words and are dropped.
std::string individual_name(std::string_view surface);
std::string property_name(std::string_view surface);
std::string class_name(std::string_view surface);

// Subjects and non-numeric objects, first occurrence order, duplicates
// removed.
std::vector<std::string> entities_of(const std::vector<ExtractionTriple>& t);

// Surface form → class. Answers are "entity: Class" lines; unmatched
// entities and answers outside the allowed set map to owl:Thing.
using Typing = std::vector<std::pair<std::string, OWLClass>>;

// Throws ModelError for an empty entity list.
Typing assign_types(const std::vector<std::string>& entities,
                    ExtractorClient& client, const GenerationConfig& config);

// Declarations, then class assertions, then property assertions, each in
// first-occurrence order. Surface forms minting the same IRI merge.
std::vector<Axiom> triples_to_axioms(const std::vector<ExtractionTriple>& t,
                                     const Typing& typing,
                                     const GenerationConfig& config);

// extract → type → materialize. The ontology IRI is the namespace without
// its final separator and "" is bound to the namespace.
Ontology generate_ontology(std::string_view text, ExtractorClient& client,
                           const GenerationConfig& config);

}  // namespace owlkit::textgen
