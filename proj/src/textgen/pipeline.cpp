#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

#include "owlkit/textgen.hpp"

namespace owlkit::textgen {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
char lower(char c) { return c >= 'A' && c <= 'Z' ? char(c - 'A' + 'a') : c; }
char upper(char c) { return c >= 'a' && c <= 'z' ? char(c - 'a' + 'A') : c; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

// Maximal ASCII alphanumeric runs.
std::vector<std::string> words(std::string_view surface) {
  std::vector<std::string> out;
  std::string current;
  for (char c : surface) {
    if (is_alnum(c)) {
      current += c;
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](char x, char y) { return lower(x) == lower(y); });
}

// Text after the last '#' or '/'.
std::string_view short_name(const IRI& iri) {
  const std::string& s = iri.str();
  const auto cut = s.find_last_of("#/");
  return cut == std::string::npos ? std::string_view(s)
                                  : std::string_view(s).substr(cut + 1);
}

std::string join(const std::vector<std::string>& items,
                 std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

Individual mint_individual(const GenerationConfig& c, std::string_view s) {
  return Individual(IRI(c.ns + individual_name(s)));
}

}  // namespace

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const auto open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) break;
    const auto close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    const std::string key(tmpl.substr(open + 2, close - open - 2));
    auto it = values.find(key);
    if (it == values.end()) {
      throw ModelError("unknown prompt placeholder {{" + key + "}}");
    }
    out.append(tmpl.substr(pos, open - pos));
    out += it->second;
    pos = close + 2;
  }
  out.append(tmpl.substr(pos));
  return out;
}

void validate(const GenerationConfig& config) {
  if (config.predefined_classes.empty() && !config.allow_llm_classes) {
    throw ModelError(
        "generation needs predefined classes or allow_llm_classes");
  }
  if (config.ns.empty() ||
      (config.ns.back() != '#' && config.ns.back() != '/')) {
    throw ModelError("namespace must end in '#' or '/': " + config.ns);
  }
}

std::optional<Literal> parse_number(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  const std::size_t int_start = i;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == int_start) return std::nullopt;
  bool fraction = false;
  if (i < text.size() && text[i] == '.') {
    const std::size_t frac_start = ++i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == frac_start) return std::nullopt;
    fraction = true;
  }
  if (i != text.size()) return std::nullopt;

  // from_chars takes '-' but not '+'.
  const std::string_view digits =
      text.front() == '+' ? text.substr(1) : text;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  if (!fraction) {
    std::int64_t n = 0;
    const auto [end, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && end == last) return Literal::integer(n);
  }
  double d = 0;
  const auto [end, ec] = std::from_chars(first, last, d);
  if (ec != std::errc() || end != last || !std::isfinite(d)) {
    return std::nullopt;
  }
  return Literal::real(d);
}

std::string individual_name(std::string_view surface) {
  std::string out;
  bool pending_space = false;
  for (char c : trim(surface)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    const char l = lower(c);
    if (!is_alnum(l) && l != '_' && l != '-') continue;
    if (pending_space && !out.empty()) out += '_';
    pending_space = false;
    out += l;
  }
  return out;
}

std::string property_name(std::string_view surface) {
  std::string out;
  for (const auto& w : words(surface)) {
    if (out.empty()) {
      for (char c : w) out += lower(c);
    } else {
      out += upper(w.front());
      out.append(w, 1);
    }
  }
  return out;
}

std::string class_name(std::string_view surface) {
  std::string out;
  for (const auto& w : words(surface)) {
    out += upper(w.front());
    out.append(w, 1);
  }
  return out;
}

std::optional<ExtractionTriple> parse_extraction_line(std::string_view line) {
  line = trim(line);
  if (line.size() < 2 || line.front() != '(' || line.back() != ')') {
    return std::nullopt;
  }
  line = line.substr(1, line.size() - 2);
  std::vector<std::string_view> fields;
  while (true) {
    const auto bar = line.find('|');
    fields.push_back(trim(line.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    line.remove_prefix(bar + 1);
  }
  if (fields.size() != 3) return std::nullopt;
  ExtractionTriple t{std::string(fields[0]), std::string(fields[1]),
                     std::string(fields[2]), parse_number(fields[2])};
  if (individual_name(t.subject).empty() ||
      property_name(t.predicate).empty()) {
    return std::nullopt;
  }
  if (!t.number && individual_name(t.object).empty()) return std::nullopt;
  return t;
}

Extraction extract_triples(std::string_view text, ExtractorClient& client,
                           const GenerationConfig& config) {
  if (trim(text).empty()) throw ModelError("input text is empty");
  const std::string prompt = render_template(
      config.prompts.extraction, {{"text", std::string(text)}});
  Extraction out;
  while (out.attempts <= config.max_retries) {
    ++out.attempts;
    out.triples.clear();
    out.malformed_lines = 0;
    const std::string completion = client.send(prompt);
    for (const auto line : split_lines(completion)) {
      if (trim(line).empty()) continue;
      if (auto t = parse_extraction_line(line)) {
        out.triples.push_back(std::move(*t));
      } else {
        ++out.malformed_lines;
      }
    }
    if (!out.triples.empty()) return out;
  }
  throw ExtractionEmpty("no extraction line parsed after " +
                        std::to_string(out.attempts) + " attempts");
}

std::vector<std::string> entities_of(const std::vector<ExtractionTriple>& t) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  const auto add = [&](const std::string& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  for (const auto& x : t) {
    add(x.subject);
    if (!x.number) add(x.object);
  }
  return out;
}

Typing assign_types(const std::vector<std::string>& entities,
                    ExtractorClient& client, const GenerationConfig& config) {
  validate(config);
  if (entities.empty()) throw ModelError("no entities to type");

  std::vector<std::string> allowed;
  for (const auto& c : config.predefined_classes) {
    allowed.emplace_back(short_name(c.iri));
  }
  std::string entity_list;
  for (const auto& e : entities) entity_list += e + "\n";
  const bool closed = !config.allow_llm_classes;
  const std::string prompt = render_template(
      closed ? config.prompts.typing_closed : config.prompts.typing_open,
      {{"entities", entity_list},
       {"classes", allowed.empty() ? "(none)" : join(allowed, ", ")}});

  const auto resolve = [&](std::string_view answer) -> OWLClass {
    const std::string name = class_name(answer);
    for (const auto& c : config.predefined_classes) {
      if (name == class_name(short_name(c.iri))) return c;
    }
    if (closed || name.empty() || name == "Thing" || name == "OwlThing") {
      return owl_thing();
    }
    return OWLClass(IRI(config.ns + name));
  };

  std::vector<std::optional<OWLClass>> chosen(entities.size());
  const std::string completion = client.send(prompt);
  for (auto line : split_lines(completion)) {
    line = trim(line);
    if (line.substr(0, 2) == "- ") line = trim(line.substr(2));
    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) continue;
    const auto entity = trim(line.substr(0, colon));
    const auto answer = trim(line.substr(colon + 1));
    auto match = std::find(entities.begin(), entities.end(), entity);
    if (match == entities.end()) {
      match = std::find_if(entities.begin(), entities.end(),
                           [&](const auto& e) { return iequals(e, entity); });
    }
    if (match == entities.end()) continue;
    auto& slot = chosen[match - entities.begin()];
    if (!slot) slot = resolve(answer);
  }

  Typing out;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    out.emplace_back(entities[i], chosen[i].value_or(owl_thing()));
  }
  return out;
}

std::vector<Axiom> triples_to_axioms(const std::vector<ExtractionTriple>& t,
                                     const Typing& typing,
                                     const GenerationConfig& config) {
  std::vector<Axiom> declarations;
  std::vector<Axiom> types;
  std::vector<Axiom> facts;
  std::unordered_set<Axiom> seen;
  const auto emit = [&](std::vector<Axiom>& into, Axiom ax) {
    if (seen.insert(ax).second) into.push_back(std::move(ax));
  };

  std::set<IRI> typed;
  for (const auto& [surface, cls] : typing) {
    const Individual ind = mint_individual(config, surface);
    if (!is_thing(cls)) emit(declarations, Declaration{cls});
    emit(types, ClassAssertion{ind, cls});
    typed.insert(ind.iri);
  }
  std::vector<Individual> individuals;
  for (const auto& surface : entities_of(t)) {
    individuals.push_back(mint_individual(config, surface));
  }
  for (const auto& [surface, cls] : typing) {
    individuals.push_back(mint_individual(config, surface));
  }
  for (const auto& ind : individuals) {
    if (!typed.contains(ind.iri)) emit(types, ClassAssertion{ind, owl_thing()});
  }

  for (const auto& x : t) {
    const Individual s = mint_individual(config, x.subject);
    const IRI p(config.ns + property_name(x.predicate));
    if (x.number) {
      const DataProperty dp(p);
      emit(declarations, Declaration{dp});
      emit(facts, DataPropertyAssertion{dp, s, *x.number});
    } else {
      const ObjectProperty op(p);
      emit(declarations, Declaration{op});
      emit(facts, ObjectPropertyAssertion{op, s,
                                          mint_individual(config, x.object)});
    }
  }
  for (const auto& ind : individuals) emit(declarations, Declaration{ind});

  std::vector<Axiom> out = std::move(declarations);
  out.insert(out.end(), types.begin(), types.end());
  out.insert(out.end(), facts.begin(), facts.end());
  return out;
}

Ontology generate_ontology(std::string_view text, ExtractorClient& client,
                           const GenerationConfig& config) {
  validate(config);
  const Extraction extraction = extract_triples(text, client, config);
  const Typing typing =
      assign_types(entities_of(extraction.triples), client, config);
  const auto axioms = triples_to_axioms(extraction.triples, typing, config);

  Ontology onto(IRI(config.ns.substr(0, config.ns.size() - 1)));
  onto.prefixes().set("", config.ns);
  for (const auto& ax : axioms) onto.add_axiom(ax);
  return onto;
}

}  // namespace owlkit::textgen
