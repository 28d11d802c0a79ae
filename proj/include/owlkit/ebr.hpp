#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "owlkit/errors.hpp"
#include "owlkit/ontology.hpp"

// Embedding-based approximate reasoner: a bilinear-diagonal link predictor
// trained on assertion triples, queried through Gödel (min/max) fuzzy
// semantics over the instance universe.
namespace owlkit::ebr {

class EmptyTripleSet : public Error {
 public:
  EmptyTripleSet() : Error("cannot train on an empty triple set") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& iri)
      : Error("symbol not seen in training: " + iri), iri_(iri) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

// Relation name used for class membership. Never a valid absolute IRI.
inline constexpr std::string_view kTypeRelation = "type";

struct EbrTriple {
  std::string head;
  std::string relation;
  std::string tail;
  friend bool operator==(const EbrTriple&, const EbrTriple&) = default;
};

struct TripleSet {
  std::vector<EbrTriple> triples;
  // Class assertions with a complex class.
  std::size_t skipped = 0;
};

// Named class assertions become (x, type, C); object property assertions
// (s, p, o), with inverse assertions flipped. Axiom insertion order.
TripleSet extract_triples(const Ontology& onto);

struct TrainingConfig {
  std::size_t dim = 32;
  double learning_rate = 0.05;
  std::size_t epochs = 200;
  std::size_t negatives = 5;
  std::uint64_t seed = 0;
};

// Validated by train(); throws ModelError for d = 0, η <= 0 or k = 0.
void validate(const TrainingConfig& config);

// Probability σ(score(h, r, t)) of a triple. Implementations must return a
// value in [0, 1] and answer knows_* for every named symbol they cover.
class TripleScorer {
 public:
  virtual ~TripleScorer() = default;
  virtual double probability(const std::string& head,
                             const std::string& relation,
                             const std::string& tail) const = 0;
  virtual bool knows_class(const std::string& iri) const = 0;
  virtual bool knows_relation(const std::string& iri) const = 0;
};

struct Gradient {
  std::vector<double> head;
  std::vector<double> relation;
  std::vector<double> tail;
};

// Entity and relation tables, row-major with `dim` columns. Rows are
// allocated in first-occurrence order over the training triples (head
// before tail); the "type" relation is an ordinary row.
class EmbeddingModel : public TripleScorer {
 public:
  EmbeddingModel() = default;
  EmbeddingModel(std::size_t dim, std::vector<std::string> entities,
                 std::vector<std::string> relations);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& entities() const { return entities_; }
  const std::vector<std::string>& relations() const { return relations_; }

  std::optional<std::size_t> entity_index(const std::string& iri) const;
  std::optional<std::size_t> relation_index(const std::string& iri) const;

  double* entity(std::size_t i) { return &entity_table_[i * dim_]; }
  const double* entity(std::size_t i) const { return &entity_table_[i * dim_]; }
  double* relation(std::size_t i) { return &relation_table_[i * dim_]; }
  const double* relation(std::size_t i) const {
    return &relation_table_[i * dim_];
  }
  const std::vector<double>& entity_table() const { return entity_table_; }
  const std::vector<double>& relation_table() const { return relation_table_; }

  // Σ_i h_i r_i t_i over row indices.
  double score(std::size_t h, std::size_t r, std::size_t t) const;
  // Binary cross-entropy of σ(score) against label ∈ {0, 1}.
  double loss(std::size_t h, std::size_t r, std::size_t t, double label) const;
  // ∂loss/∂(h, r, t). When h == t the head and tail parts must be summed.
  Gradient loss_gradient(std::size_t h, std::size_t r, std::size_t t,
                         double label) const;

  // 0 when either entity is unknown. Throws UnknownSymbol for an unknown
  // relation.
  double probability(const std::string& head, const std::string& relation,
                     const std::string& tail) const override;
  bool knows_class(const std::string& iri) const override;
  bool knows_relation(const std::string& iri) const override;

  bool all_finite() const;

  // Text format:
  //   EBR1 d=<dim>
  //   entities <n>
  //   <iri>\t<v1>\t…\t<vd>     (n lines)
  //   relations <m>
  //   <name>\t<v1>\t…\t<vd>    (m lines)
  // Values use shortest round-trip decimal form, so load(save(m)) == m.
  void save(const std::filesystem::path& path) const;
  static EmbeddingModel load(const std::filesystem::path& path);
  std::string to_text() const;
  static EmbeddingModel from_text(const std::string& text);

  friend bool operator==(const EmbeddingModel&, const EmbeddingModel&);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> entities_;
  std::vector<std::string> relations_;
  std::unordered_map<std::string, std::size_t> entity_ids_;
  std::unordered_map<std::string, std::size_t> relation_ids_;
  std::vector<double> entity_table_;
  std::vector<double> relation_table_;
};

struct TrainingResult {
  EmbeddingModel model;
  // Mean loss of each epoch, taken before each sample's update.
  std::vector<double> epoch_loss;
};

// Plain SGD. Parameters start uniform in [-0.1, 0.1]; each epoch visits the
// triples in order, and each positive is followed by `negatives` samples
// that replace the head or the tail (chosen by coin) with a uniformly drawn
// entity. Deterministic in config.seed. Throws EmptyTripleSet.
TrainingResult train(const std::vector<EbrTriple>& triples,
                     const TrainingConfig& config);

// Maximum relative error between loss_gradient and central differences of
// loss with step eps, over every coordinate of h, r and t. Coordinates
// where both derivatives are below 1e-6 in magnitude compare absolutely.
double gradient_check(const EmbeddingModel& model, std::size_t h,
                      std::size_t r, std::size_t t, double label = 1.0,
                      double eps = 1e-5);

// Individuals and asserted data values that queries range over.
struct Universe {
  std::vector<Individual> individuals;
  std::unordered_map<DataProperty, std::unordered_map<Individual,
                                                      std::vector<Literal>>>
      data;
};

// Individuals in signature order and every DataPropertyAssertion.
Universe universe_of(const Ontology& onto);

// μ per individual, in universe order; every value lies in [0, 1].
using MembershipMap = std::vector<std::pair<Individual, double>>;

// Gödel semantics. Cardinalities count successors y with
// min(p(x, r, y), μ_C(y)) >= 0.5 and are crisp; oneOf and data restrictions
// are crisp over the asserted values (∀ over no values holds). Throws
// UnknownSymbol for a named class or object property the scorer lacks.
MembershipMap membership(const TripleScorer& scorer, const ClassExpression& ce,
                         const Universe& universe);

// {x : μ(x) >= gamma}, in universe order.
std::vector<Individual> retrieve(const TripleScorer& scorer,
                                 const ClassExpression& ce,
                                 const Universe& universe, double gamma = 0.5);

}  // namespace owlkit::ebr
