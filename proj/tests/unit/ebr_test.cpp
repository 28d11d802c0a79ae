#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "crisp_scorer.hpp"
#include "generators.hpp"
#include "naive_reasoner.hpp"
#include "owlkit/ebr.hpp"

namespace owlkit {
namespace {

using namespace ebr;
using testing::Rng;

const std::string kNs = "http://example.com/father#";

Ontology family() {
  return Ontology::load(std::string(OWLKIT_TEST_DATA_DIR) + "/family.ofn");
}

OWLClass cls(const std::string& name) { return OWLClass(kNs + name); }
ObjectProperty prop(const std::string& name) {
  return ObjectProperty(kNs + name);
}

TrainingConfig quick(std::uint64_t seed, std::size_t epochs = 20) {
  TrainingConfig c;
  c.dim = 8;
  c.epochs = epochs;
  c.seed = seed;
  return c;
}

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random model with entities e0.. and relations r0.., values in [-1, 1].
EmbeddingModel random_model(Rng& rng, std::size_t dim) {
  std::vector<std::string> entities;
  for (int i = 0; i < 5; ++i) entities.push_back("http://e.org/e" + std::to_string(i));
  EmbeddingModel m(dim, entities, {"http://e.org/r0", "http://e.org/r1"});
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m.entity(i)[j] = uniform(rng, -1, 1);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m.relation(i)[j] = uniform(rng, -1, 1);
    }
  }
  return m;
}

// Cross-entropy of the logistic score, straight from the definition.
double oracle_loss(const EmbeddingModel& m, std::size_t h, std::size_t r,
                   std::size_t t, double label) {
  double s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s += m.entity(h)[i] * m.relation(r)[i] * m.entity(t)[i];
  }
  const double p = 1.0 / (1.0 + std::exp(-s));
  return label == 1.0 ? -std::log(p) : -std::log(1.0 - p);
}

TEST(ExtractTriples, FixtureCounts) {
  const Ontology o = family();
  std::size_t named = 0;
  for (const auto& ax : o.axioms_of_kind(AxiomKind::ClassAssertion)) {
    named += ax.get_if<ClassAssertion>()->cls.is<OWLClass>() ? 1 : 0;
  }
  const std::size_t edges =
      o.axioms_of_kind(AxiomKind::ObjectPropertyAssertion).size();
  const auto ts = extract_triples(o);
  EXPECT_EQ(ts.skipped, 0u);
  EXPECT_EQ(ts.triples.size(), named + edges);
  EXPECT_EQ(named, 6u);
  EXPECT_EQ(edges, 5u);
  std::size_t types = 0;
  for (const auto& t : ts.triples) types += t.relation == kTypeRelation;
  EXPECT_EQ(types, named);
}

TEST(ExtractTriples, EmptyAndComplexAndInverse) {
  EXPECT_TRUE(extract_triples(Ontology()).triples.empty());

  Ontology o;
  const Individual x(kNs + "x");
  const Individual y(kNs + "y");
  o.add_axiom(ClassAssertion{x, make_and({cls("C"), cls("D")})});
  o.add_axiom(ObjectPropertyAssertion{OPE(prop("r"), true), x, y});
  const auto ts = extract_triples(o);
  EXPECT_EQ(ts.skipped, 1u);
  ASSERT_EQ(ts.triples.size(), 1u);
  EXPECT_EQ(ts.triples[0], (EbrTriple{kNs + "y", kNs + "r", kNs + "x"}));
}

TEST(Train, RejectsBadInput) {
  EXPECT_THROW(train({}, TrainingConfig{}), EmptyTripleSet);
  const std::vector<EbrTriple> one{{"http://e.org/a", "type", "http://e.org/C"}};
  TrainingConfig c;
  c.dim = 0;
  EXPECT_THROW(train(one, c), ModelError);
  c = {};
  c.learning_rate = 0;
  EXPECT_THROW(train(one, c), ModelError);
  c = {};
  c.negatives = 0;
  EXPECT_THROW(train(one, c), ModelError);
}

TEST(Train, ZeroEpochsIsInitialization) {
  const auto triples = extract_triples(family()).triples;
  const auto r = train(triples, quick(3, 0));
  EXPECT_TRUE(r.epoch_loss.empty());
  EXPECT_EQ(r.model.entities().front(), kNs + "markus");
  EXPECT_EQ(r.model.relations().front(), kTypeRelation);
  for (double v : r.model.entity_table()) {
    EXPECT_GE(v, -0.1);
    EXPECT_LE(v, 0.1);
  }
  EXPECT_EQ(r.model, train(triples, quick(3, 0)).model);
  EXPECT_NE(r.model, train(triples, quick(3, 1)).model);
  EXPECT_NE(r.model, train(triples, quick(4, 0)).model);
}

TEST(Train, SameSeedIsBitwiseIdentical) {
  const auto triples = extract_triples(family()).triples;
  const auto a = train(triples, quick(11));
  const auto b = train(triples, quick(11));
  EXPECT_EQ(a.model, b.model);
  EXPECT_EQ(a.epoch_loss, b.epoch_loss);
}

TEST(Train, FixtureLossDecreases) {
  TrainingConfig c;
  c.seed = 7;
  const auto r = train(extract_triples(family()).triples, c);
  ASSERT_EQ(r.epoch_loss.size(), c.epochs);
  EXPECT_LT(r.epoch_loss.back(), r.epoch_loss.front());
  EXPECT_TRUE(r.model.all_finite());
}

TEST(Gradient, AnalyticMatchesIndependentDifferences) {
  Rng rng(31);
  for (int probe = 0; probe < 100; ++probe) {
    const std::size_t dim = 1 + testing::pick_index(rng, 16);
    EmbeddingModel m = random_model(rng, dim);
    const std::size_t h = testing::pick_index(rng, 5);
    const std::size_t r = testing::pick_index(rng, 2);
    const std::size_t t = testing::pick_index(rng, 5);
    const double label = testing::coin(rng) ? 1.0 : 0.0;
    const Gradient g = m.loss_gradient(h, r, t, label);
    const double eps = 1e-5;
    const auto diff = [&](double* cell) {
      const double saved = *cell;
      *cell = saved + eps;
      const double up = oracle_loss(m, h, r, t, label);
      *cell = saved - eps;
      const double down = oracle_loss(m, h, r, t, label);
      *cell = saved;
      return (up - down) / (2 * eps);
    };
    for (std::size_t i = 0; i < dim; ++i) {
      const double head = h == t ? g.head[i] + g.tail[i] : g.head[i];
      EXPECT_NEAR(head, diff(&m.entity(h)[i]), 1e-6);
      EXPECT_NEAR(g.relation[i], diff(&m.relation(r)[i]), 1e-6);
      if (h != t) {
        EXPECT_NEAR(g.tail[i], diff(&m.entity(t)[i]), 1e-6);
      }
    }
    EXPECT_LE(gradient_check(m, h, r, t, label), 1e-4);
  }
}

TEST(Gradient, ZeroVectorsPassTrivially) {
  EmbeddingModel m(4, {"http://e.org/a", "http://e.org/b"}, {"http://e.org/r"});
  const Gradient g = m.loss_gradient(0, 0, 1, 1.0);
  for (double v : g.head) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(gradient_check(m, 0, 0, 1), 0.0);
}

TEST(ModelIo, RoundTripIsExact) {
  const auto m = train(extract_triples(family()).triples, quick(5)).model;
  const std::string text = m.to_text();
  const std::string header =
      "EBR1 d=8\nentities " + std::to_string(m.entities().size()) + "\n";
  EXPECT_EQ(text.rfind(header, 0), 0u) << text.substr(0, 40);
  EXPECT_EQ(EmbeddingModel::from_text(text), m);
  const auto path =
      std::filesystem::temp_directory_path() / "owlkit_ebr_test.model";
  m.save(path);
  EXPECT_EQ(EmbeddingModel::load(path), m);
  std::filesystem::remove(path);
}

TEST(ModelIo, MalformedInputRejected) {
  EXPECT_THROW(EmbeddingModel::from_text(""), ModelError);
  EXPECT_THROW(EmbeddingModel::from_text("EBR2 d=1\n"), ModelError);
  EXPECT_THROW(EmbeddingModel::from_text("EBR1 d=2\nentities 1\na\t1\n"),
               ModelError);
  EXPECT_THROW(
      EmbeddingModel::from_text("EBR1 d=1\nentities 1\na\tnan\nrelations 0\n"),
      ModelError);
  EXPECT_NO_THROW(
      EmbeddingModel::from_text("EBR1 d=1\nentities 1\na\t1\nrelations 0\n"));
  EXPECT_THROW(EmbeddingModel::load("/nonexistent/owlkit.model"), IoError);
}

class Trained : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    onto_ = new Ontology(family());
    model_ = new EmbeddingModel(
        train(extract_triples(*onto_).triples, quick(7, 50)).model);
  }
  static void TearDownTestSuite() {
    delete onto_;
    delete model_;
  }
  static Ontology* onto_;
  static EmbeddingModel* model_;
};

Ontology* Trained::onto_ = nullptr;
EmbeddingModel* Trained::model_ = nullptr;

TEST_F(Trained, TrivialRetrievals) {
  const Universe u = universe_of(*onto_);
  for (const auto& [ind, mu] : membership(*model_, thing(), u)) {
    EXPECT_EQ(mu, 1.0);
  }
  for (double gamma : {0.01, 0.5, 1.0}) {
    EXPECT_TRUE(retrieve(*model_, nothing(), u, gamma).empty());
  }
  EXPECT_EQ(retrieve(*model_, cls("male"), u, 0.0), u.individuals);
}

TEST_F(Trained, UnknownSymbolsRejected) {
  const Universe u = universe_of(*onto_);
  EXPECT_THROW(membership(*model_, cls("unicorn"), u), UnknownSymbol);
  EXPECT_THROW(membership(*model_, make_some(prop("likes"), thing()), u),
               UnknownSymbol);
  // Unseen individuals score 0 instead of failing.
  Universe extra = u;
  extra.individuals.push_back(Individual(kNs + "stranger"));
  const auto mu = membership(*model_, cls("male"), extra);
  EXPECT_EQ(mu.back().second, 0.0);
}

TEST_F(Trained, FuzzyAlgebraLaws) {
  const Universe u = universe_of(*onto_);
  testing::Vocabulary v;
  v.ns = kNs;
  for (const auto& c : onto_->classes_in_signature()) v.classes.push_back(c);
  for (const auto& p : onto_->object_properties_in_signature()) {
    v.object_properties.push_back(p);
  }
  for (const auto& p : onto_->data_properties_in_signature()) {
    v.data_properties.push_back(p);
  }
  v.individuals = u.individuals;
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_ce(rng, v);
    const auto b = testing::random_ce(rng, v);
    const auto ma = membership(*model_, a, u);
    const auto mb = membership(*model_, b, u);
    const auto not_a = membership(*model_, make_not(a), u);
    const auto self = membership(*model_, make_and({a, a}), u);
    const auto lhs = membership(*model_, make_not(make_or({a, b})), u);
    const auto rhs =
        membership(*model_, make_and({make_not(a), make_not(b)}), u);
    for (std::size_t x = 0; x < u.individuals.size(); ++x) {
      EXPECT_GE(ma[x].second, 0.0);
      EXPECT_LE(ma[x].second, 1.0);
      EXPECT_DOUBLE_EQ(ma[x].second + not_a[x].second, 1.0);
      EXPECT_EQ(self[x].second, ma[x].second);
      EXPECT_DOUBLE_EQ(lhs[x].second, rhs[x].second);
    }
  }
}

TEST(CrispReduction, MatchesReasonerIncludingDataRestrictions) {
  Rng rng(33);
  int nonempty = 0;
  for (int i = 0; i < 120; ++i) {
    const auto c = testing::random_reasoner_case(rng, 12);
    const Snapshot s(c.onto);
    const testing::CrispScorer scorer(s);
    const Universe u = universe_of(c.onto);
    ASSERT_EQ(u.individuals, s.universe());
    for (int k = 0; k < 3; ++k) {
      const auto ce = testing::random_ce(rng, c.vocab);
      const auto expected = s.instances(ce);
      nonempty += expected.empty() ? 0 : 1;
      ASSERT_EQ(retrieve(scorer, ce, u, 0.5), expected) << ce;
    }
  }
  EXPECT_GT(nonempty, 100);
}

TEST(CrispReduction, DeterministicRetrieval) {
  const Ontology o = family();
  const auto triples = extract_triples(o).triples;
  const Universe u = universe_of(o);
  const auto ce = make_some(prop("hasChild"), cls("female"));
  EXPECT_EQ(retrieve(train(triples, quick(9)).model, ce, u),
            retrieve(train(triples, quick(9)).model, ce, u));
}

}  // namespace
}  // namespace owlkit
