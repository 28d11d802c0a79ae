#include <cmath>
#include <random>

#include "owlkit/ebr.hpp"

namespace owlkit::ebr {

namespace {

// <random> distributions are implementation-defined; these are not.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

void sgd_step(EmbeddingModel& m, std::size_t h, std::size_t r, std::size_t t,
              double label, double eta) {
  const Gradient g = m.loss_gradient(h, r, t, label);
  double* hv = m.entity(h);
  double* rv = m.relation(r);
  double* tv = m.entity(t);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    hv[i] -= eta * g.head[i];
    rv[i] -= eta * g.relation[i];
    tv[i] -= eta * g.tail[i];
  }
}

}  // namespace

TripleSet extract_triples(const Ontology& onto) {
  TripleSet out;
  for (const auto& ax : onto.axioms()) {
    if (const auto* ca = ax.get_if<ClassAssertion>()) {
      const auto* c = ca->cls.get_if<OWLClass>();
      if (c == nullptr) {
        ++out.skipped;
        continue;
      }
      out.triples.push_back({ca->individual.iri.str(),
                             std::string(kTypeRelation), c->iri.str()});
    } else if (const auto* pa = ax.get_if<ObjectPropertyAssertion>()) {
      EbrTriple t{pa->subject.iri.str(), pa->property.property.iri.str(),
                  pa->object.iri.str()};
      if (pa->property.inverse) std::swap(t.head, t.tail);
      out.triples.push_back(std::move(t));
    }
  }
  return out;
}

TrainingResult train(const std::vector<EbrTriple>& triples,
                     const TrainingConfig& config) {
  validate(config);
  if (triples.empty()) throw EmptyTripleSet();

  std::vector<std::string> entities;
  std::vector<std::string> relations;
  std::unordered_map<std::string, std::size_t> entity_ids;
  std::unordered_map<std::string, std::size_t> relation_ids;
  const auto intern = [](auto& ids, auto& names, const std::string& name) {
    auto [it, inserted] = ids.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  struct Ids {
    std::size_t h, r, t;
  };
  std::vector<Ids> ids;
  ids.reserve(triples.size());
  for (const auto& t : triples) {
    const std::size_t h = intern(entity_ids, entities, t.head);
    const std::size_t r = intern(relation_ids, relations, t.relation);
    ids.push_back({h, r, intern(entity_ids, entities, t.tail)});
  }

  TrainingResult result;
  EmbeddingModel& m = result.model;
  m = EmbeddingModel(config.dim, std::move(entities), std::move(relations));
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < m.entities().size(); ++i) {
    for (std::size_t j = 0; j < config.dim; ++j) {
      m.entity(i)[j] = uniform(rng, -0.1, 0.1);
    }
  }
  for (std::size_t i = 0; i < m.relations().size(); ++i) {
    for (std::size_t j = 0; j < config.dim; ++j) {
      m.relation(i)[j] = uniform(rng, -0.1, 0.1);
    }
  }

  const std::size_t n_entities = m.entities().size();
  const double eta = config.learning_rate;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    double total = 0;
    std::size_t samples = 0;
    for (const auto& [h, r, t] : ids) {
      total += m.loss(h, r, t, 1.0);
      ++samples;
      sgd_step(m, h, r, t, 1.0, eta);
      for (std::size_t k = 0; k < config.negatives; ++k) {
        const bool corrupt_head = (rng() & 1U) != 0;
        const std::size_t e = uniform_index(rng, n_entities);
        const std::size_t nh = corrupt_head ? e : h;
        const std::size_t nt = corrupt_head ? t : e;
        total += m.loss(nh, r, nt, 0.0);
        ++samples;
        sgd_step(m, nh, r, nt, 0.0, eta);
      }
    }
    if (!m.all_finite()) {
      throw ModelError("training diverged in epoch " + std::to_string(epoch));
    }
    result.epoch_loss.push_back(total / static_cast<double>(samples));
  }
  return result;
}

double gradient_check(const EmbeddingModel& model, std::size_t h,
                      std::size_t r, std::size_t t, double label, double eps) {
  const Gradient g = model.loss_gradient(h, r, t, label);
  EmbeddingModel probe = model;
  double worst = 0;
  const auto compare = [&](double analytic, double numeric) {
    const double scale = std::max(std::abs(analytic), std::abs(numeric));
    const double diff = std::abs(analytic - numeric);
    worst = std::max(worst, scale < 1e-6 ? diff : diff / scale);
  };
  // Central difference of the loss in one coordinate of `row`.
  const auto numeric = [&](double* row, std::size_t i) {
    const double saved = row[i];
    row[i] = saved + eps;
    const double up = probe.loss(h, r, t, label);
    row[i] = saved - eps;
    const double down = probe.loss(h, r, t, label);
    row[i] = saved;
    return (up - down) / (2 * eps);
  };
  for (std::size_t i = 0; i < model.dim(); ++i) {
    // With h == t one coordinate feeds both positions.
    const double head = h == t ? g.head[i] + g.tail[i] : g.head[i];
    compare(head, numeric(probe.entity(h), i));
    compare(g.relation[i], numeric(probe.relation(r), i));
    if (h != t) compare(g.tail[i], numeric(probe.entity(t), i));
  }
  return worst;
}

}  // namespace owlkit::ebr
