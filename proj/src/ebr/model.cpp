#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "owlkit/ebr.hpp"

namespace owlkit::ebr {

namespace {

double sigmoid(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

// log(1 + e^s) without overflow.
double softplus(double s) {
  return std::max(s, 0.0) + std::log1p(std::exp(-std::abs(s)));
}

std::unordered_map<std::string, std::size_t> index_names(
    const std::vector<std::string>& names, const char* what) {
  std::unordered_map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!ids.emplace(names[i], i).second) {
      throw ModelError(std::string("duplicate ") + what + ": " + names[i]);
    }
  }
  return ids;
}

void write_row(std::string& out, const std::string& name, const double* row,
               std::size_t dim) {
  out += name;
  char buf[32];
  for (std::size_t i = 0; i < dim; ++i) {
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row[i]);
    out += '\t';
    out.append(buf, end);
  }
  out += '\n';
}

class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  std::string line() {
    std::string l;
    if (!std::getline(in_, l)) fail("unexpected end of model");
    ++line_no_;
    return l;
  }

  std::size_t header_count(const std::string& keyword) {
    const std::string l = line();
    const std::string prefix = keyword + " ";
    if (l.rfind(prefix, 0) != 0) fail("expected '" + prefix + "<count>'");
    return parse_size(l.substr(prefix.size()));
  }

  std::size_t parse_size(const std::string& s) {
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || end != s.data() + s.size()) {
      fail("malformed count '" + s + "'");
    }
    return n;
  }

  // name TAB v1 … vd
  std::string row(std::size_t dim, std::vector<double>& table) {
    const std::string l = line();
    std::size_t tab = l.find('\t');
    if (tab == std::string::npos || tab == 0) fail("malformed row");
    std::string name = l.substr(0, tab);
    const char* p = l.data() + tab;
    const char* end = l.data() + l.size();
    for (std::size_t i = 0; i < dim; ++i) {
      if (p == end || *p != '\t') fail("expected " + std::to_string(dim) +
                                       " values");
      double v = 0;
      const auto [next, ec] = std::from_chars(p + 1, end, v);
      if (ec != std::errc() || !std::isfinite(v)) fail("malformed value");
      table.push_back(v);
      p = next;
    }
    if (p != end) fail("trailing data in row");
    return name;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ModelError("model line " + std::to_string(line_no_) + ": " +
                     message);
  }

 private:
  std::istringstream in_;
  std::size_t line_no_ = 0;
};

}  // namespace

void validate(const TrainingConfig& config) {
  if (config.dim == 0) throw ModelError("embedding dimension must be >= 1");
  if (!(config.learning_rate > 0)) {
    throw ModelError("learning rate must be > 0");
  }
  if (config.negatives == 0) {
    throw ModelError("negatives per positive must be >= 1");
  }
}

EmbeddingModel::EmbeddingModel(std::size_t dim,
                               std::vector<std::string> entities,
                               std::vector<std::string> relations)
    : dim_(dim),
      entities_(std::move(entities)),
      relations_(std::move(relations)),
      entity_ids_(index_names(entities_, "entity")),
      relation_ids_(index_names(relations_, "relation")),
      entity_table_(entities_.size() * dim, 0.0),
      relation_table_(relations_.size() * dim, 0.0) {
  if (dim == 0) throw ModelError("embedding dimension must be >= 1");
}

std::optional<std::size_t> EmbeddingModel::entity_index(
    const std::string& iri) const {
  auto it = entity_ids_.find(iri);
  if (it == entity_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EmbeddingModel::relation_index(
    const std::string& iri) const {
  auto it = relation_ids_.find(iri);
  if (it == relation_ids_.end()) return std::nullopt;
  return it->second;
}

double EmbeddingModel::score(std::size_t h, std::size_t r,
                             std::size_t t) const {
  const double* hv = entity(h);
  const double* rv = relation(r);
  const double* tv = entity(t);
  double s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += hv[i] * rv[i] * tv[i];
  return s;
}

double EmbeddingModel::loss(std::size_t h, std::size_t r, std::size_t t,
                            double label) const {
  const double s = score(h, r, t);
  return softplus(s) - label * s;
}

Gradient EmbeddingModel::loss_gradient(std::size_t h, std::size_t r,
                                       std::size_t t, double label) const {
  const double g = sigmoid(score(h, r, t)) - label;
  const double* hv = entity(h);
  const double* rv = relation(r);
  const double* tv = entity(t);
  Gradient out{std::vector<double>(dim_), std::vector<double>(dim_),
               std::vector<double>(dim_)};
  for (std::size_t i = 0; i < dim_; ++i) {
    out.head[i] = g * rv[i] * tv[i];
    out.relation[i] = g * hv[i] * tv[i];
    out.tail[i] = g * hv[i] * rv[i];
  }
  return out;
}

double EmbeddingModel::probability(const std::string& head,
                                   const std::string& relation,
                                   const std::string& tail) const {
  const auto r = relation_index(relation);
  if (!r) throw UnknownSymbol(relation);
  const auto h = entity_index(head);
  const auto t = entity_index(tail);
  if (!h || !t) return 0.0;
  return sigmoid(score(*h, *r, *t));
}

bool EmbeddingModel::knows_class(const std::string& iri) const {
  return entity_ids_.contains(iri);
}

bool EmbeddingModel::knows_relation(const std::string& iri) const {
  return relation_ids_.contains(iri);
}

bool EmbeddingModel::all_finite() const {
  const auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
  };
  return finite(entity_table_) && finite(relation_table_);
}

std::string EmbeddingModel::to_text() const {
  std::string out = "EBR1 d=" + std::to_string(dim_) + "\n";
  out += "entities " + std::to_string(entities_.size()) + "\n";
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    write_row(out, entities_[i], entity(i), dim_);
  }
  out += "relations " + std::to_string(relations_.size()) + "\n";
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    write_row(out, relations_[i], relation(i), dim_);
  }
  return out;
}

EmbeddingModel EmbeddingModel::from_text(const std::string& text) {
  Reader in(text);
  const std::string header = in.line();
  if (header.rfind("EBR1 d=", 0) != 0) {
    in.fail("expected header 'EBR1 d=<dim>'");
  }
  const std::size_t dim = in.parse_size(header.substr(7));
  if (dim == 0) in.fail("dimension must be >= 1");

  std::vector<double> entity_table;
  std::vector<std::string> entities;
  for (std::size_t n = in.header_count("entities"); n > 0; --n) {
    entities.push_back(in.row(dim, entity_table));
  }
  std::vector<double> relation_table;
  std::vector<std::string> relations;
  for (std::size_t n = in.header_count("relations"); n > 0; --n) {
    relations.push_back(in.row(dim, relation_table));
  }

  EmbeddingModel model(dim, std::move(entities), std::move(relations));
  model.entity_table_ = std::move(entity_table);
  model.relation_table_ = std::move(relation_table);
  return model;
}

void EmbeddingModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_text();
  if (!out) throw IoError("failed writing " + path.string());
}

EmbeddingModel EmbeddingModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

bool operator==(const EmbeddingModel& a, const EmbeddingModel& b) {
  return a.dim_ == b.dim_ && a.entities_ == b.entities_ &&
         a.relations_ == b.relations_ && a.entity_table_ == b.entity_table_ &&
         a.relation_table_ == b.relation_table_;
}

}  // namespace owlkit::ebr
