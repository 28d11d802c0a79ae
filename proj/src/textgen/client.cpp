#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "owlkit/textgen.hpp"

namespace owlkit::textgen {

namespace {

constexpr std::string_view kTranscriptFormat = "owlkit-transcript/1";

bool is_sha256_hex(const std::string& s) {
  return s.size() == 64 &&
         std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// choices[0].message.content, or null when the response has another shape.
const nlohmann::json* completion_content(const nlohmann::json& doc) {
  if (!doc.is_object()) return nullptr;
  const auto choices = doc.find("choices");
  if (choices == doc.end() || !choices->is_array() || choices->empty()) {
    return nullptr;
  }
  const auto& first = choices->front();
  if (!first.is_object()) return nullptr;
  const auto message = first.find("message");
  if (message == first.end() || !message->is_object()) return nullptr;
  const auto content = message->find("content");
  if (content == message->end() || !content->is_string()) return nullptr;
  return &*content;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

Transcript Transcript::parse(std::string_view json) {
  const auto doc = nlohmann::json::parse(json, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ModelError("transcript is not a JSON object");
  }
  const auto format = doc.find("format");
  if (format == doc.end() || !format->is_string() ||
      format->get<std::string>() != kTranscriptFormat) {
    throw ModelError("transcript format must be \"" +
                     std::string(kTranscriptFormat) + "\"");
  }
  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array()) {
    throw ModelError("transcript lacks an \"entries\" array");
  }
  Transcript t;
  for (const auto& e : *entries) {
    if (!e.is_object() || !e.contains("prompt_sha256") ||
        !e.contains("completion") || !e["prompt_sha256"].is_string() ||
        !e["completion"].is_string()) {
      throw ModelError(
          "transcript entry needs string prompt_sha256 and completion");
    }
    const auto hash = e["prompt_sha256"].get<std::string>();
    if (!is_sha256_hex(hash)) {
      throw ModelError("malformed prompt_sha256 '" + hash + "'");
    }
    t.completions[hash] = e["completion"].get<std::string>();
  }
  return t;
}

Transcript Transcript::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::string Transcript::to_json() const {
  nlohmann::ordered_json doc;
  doc["format"] = kTranscriptFormat;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [hash, completion] : completions) {
    nlohmann::ordered_json e;
    e["prompt_sha256"] = hash;
    e["completion"] = completion;
    doc["entries"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

void Transcript::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json();
}

std::string MockClient::send(const std::string& prompt) {
  const std::string hash = sha256_hex(prompt);
  auto it = transcript_.completions.find(hash);
  if (it == transcript_.completions.end()) {
    throw ClientError("no recorded completion for prompt " + hash);
  }
  return it->second;
}

std::string RecordingClient::send(const std::string& prompt) {
  std::string completion = inner_.send(prompt);
  transcript_.completions[sha256_hex(prompt)] = completion;
  return completion;
}

HttpSettings http_settings_from_environment(std::string model) {
  HttpSettings s;
  s.model = std::move(model);
  const char* key = std::getenv("OWLKIT_LLM_API_KEY");
  if (key == nullptr || *key == '\0') {
    throw ClientError("OWLKIT_LLM_API_KEY is not set");
  }
  s.api_key = key;
  if (const char* base = std::getenv("OWLKIT_LLM_BASE_URL");
      base != nullptr && *base != '\0') {
    s.base_url = base;
  }
  return s;
}

HttpChatClient::HttpChatClient(HttpSettings settings)
    : settings_(std::move(settings)) {
  std::string url = settings_.base_url;
  while (!url.empty() && url.back() == '/') url.pop_back();
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos ||
      (url.compare(0, scheme_end, "http") != 0 &&
       url.compare(0, scheme_end, "https") != 0)) {
    throw ClientError("base URL must start with http:// or https://: " +
                      settings_.base_url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == scheme_end + 3) {
    throw ClientError("base URL lacks a host: " + settings_.base_url);
  }
  origin_ = url.substr(0, path_start);
  path_ = (path_start == std::string::npos ? "" : url.substr(path_start)) +
          "/chat/completions";
}

std::string HttpChatClient::send(const std::string& prompt) {
  httplib::Client client(origin_);
  const auto timeout = settings_.timeout;
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  client.set_bearer_token_auth(settings_.api_key);

  nlohmann::json body;
  body["model"] = settings_.model;
  body["temperature"] = 0;
  body["messages"] = nlohmann::json::array(
      {nlohmann::json{{"role", "user"}, {"content", prompt}}});

  const auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) {
    throw ClientError("request to " + origin_ + path_ + " failed: " +
                      httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw ClientError("chat completion returned HTTP " +
                      std::to_string(res->status));
  }
  const auto doc = nlohmann::json::parse(res->body, nullptr, false);
  const auto* content = completion_content(doc);
  if (content == nullptr) {
    throw ClientError(
        "chat completion response lacks choices[0].message.content");
  }
  return content->get<std::string>();
}

PromptTemplates PromptTemplates::load(const std::filesystem::path& dir) {
  return {read_file(dir / "extraction.txt"),
          read_file(dir / "typing_closed.txt"),
          read_file(dir / "typing_open.txt")};
}

}  // namespace owlkit::textgen
