#include <gtest/gtest.h>

#include <filesystem>
#include <unordered_set>

#include "generators.hpp"
#include "owlkit/errors.hpp"
#include "owlkit/functional.hpp"
#include "owlkit/ontology.hpp"

namespace owlkit {
namespace {

const std::string kNs = "http://example.com/father#";
const std::filesystem::path kFixture =
    std::filesystem::path(OWLKIT_TEST_DATA_DIR) / "family.ofn";

std::vector<std::string> names(const auto& entities) {
  std::vector<std::string> out;
  for (const auto& e : entities) out.push_back(std::string(e.iri.remainder()));
  return out;
}

TEST(Load, FixtureSignatureCounts) {
  const Ontology onto = Ontology::load(kFixture);
  EXPECT_EQ(names(onto.classes_in_signature()),
            (std::vector<std::string>{"person", "male", "female", "child"}));
  EXPECT_EQ(names(onto.object_properties_in_signature()),
            (std::vector<std::string>{"hasChild", "hasSon", "hasParent"}));
  EXPECT_EQ(names(onto.data_properties_in_signature()),
            (std::vector<std::string>{"hasAge"}));
  EXPECT_EQ(onto.individuals_in_signature().size(), 6u);
  EXPECT_EQ(onto.axioms_of_kind(AxiomKind::ClassAssertion).size(), 6u);
  ASSERT_TRUE(onto.iri().has_value());
  EXPECT_EQ(onto.iri()->str(), "http://example.com/father");
}

TEST(Load, EmptyWrapper) {
  const Ontology onto = parse_functional("Ontology(<http://x>)");
  EXPECT_TRUE(onto.empty());
}

TEST(Load, MissingFileIsIoError) {
  EXPECT_THROW(Ontology::load("/nonexistent/nowhere.ofn"), IoError);
}

TEST(Load, TurtleIsNotLoadable) {
  EXPECT_THROW(Ontology::load(kFixture, Format::Turtle), Error);
}

TEST(Load, UnknownPrefixesArePreserved) {
  const Ontology onto = parse_functional(
      "Prefix(zz:=<http://zz.example/#>)\nOntology(<http://x>)");
  ASSERT_TRUE(onto.prefixes().lookup("zz").has_value());
  EXPECT_EQ(*onto.prefixes().lookup("zz"), "http://zz.example/#");
  EXPECT_TRUE(onto.prefixes().lookup("owl").has_value());
  EXPECT_TRUE(onto.prefixes().lookup("xsd").has_value());
}

TEST(Save, RoundTripFixture) {
  const Ontology onto = Ontology::load(kFixture);
  const auto path =
      std::filesystem::temp_directory_path() / "owlkit_store_roundtrip.ofn";
  onto.save(path);
  const Ontology back = Ontology::load(path);
  std::filesystem::remove(path);
  EXPECT_TRUE(same_axioms(onto, back));
  EXPECT_EQ(onto.axioms(), back.axioms());
}

TEST(Save, UnwritablePathIsIoError) {
  const Ontology onto;
  EXPECT_THROW(onto.save("/nonexistent/dir/out.ofn"), IoError);
}

TEST(AddAxiom, Idempotent) {
  Ontology onto = Ontology::load(kFixture);
  const Axiom ax = ClassAssertion{Individual(kNs + "alkid"), OWLClass(kNs + "male")};
  EXPECT_TRUE(onto.add_axiom(ax));
  EXPECT_FALSE(onto.add_axiom(ax));
  const auto inds = names(onto.individuals_in_signature());
  EXPECT_NE(std::find(inds.begin(), inds.end(), "alkid"), inds.end());
}

TEST(AddAxiom, AddThenRemoveRestores) {
  Ontology onto = Ontology::load(kFixture);
  const auto before = onto.axioms();
  const Axiom ax = ClassAssertion{Individual(kNs + "alkid"), OWLClass(kNs + "male")};
  onto.add_axiom(ax);
  EXPECT_TRUE(onto.remove_axiom(ax));
  EXPECT_FALSE(onto.contains(ax));
  EXPECT_EQ(onto.axioms(), before);
  EXPECT_TRUE(onto.axioms_about(Individual(kNs + "alkid")).empty());
}

TEST(AddAxiom, DedupCountMatchesNaiveSet) {
  testing::Rng rng(3);
  const auto v = testing::make_vocabulary(kNs, 3, 2, 1, 3);
  Ontology onto;
  std::vector<Axiom> naive;
  testing::CEOptions opts;
  opts.max_depth = 1;
  for (int i = 0; i < 1000; ++i) {
    const auto kind =
        all_axiom_kinds()[testing::pick_index(rng, kAxiomKindCount)];
    const Axiom ax = testing::random_axiom(rng, v, kind, opts);
    const bool fresh = std::find(naive.begin(), naive.end(), ax) == naive.end();
    if (fresh) naive.push_back(ax);
    EXPECT_EQ(onto.add_axiom(ax), fresh);
  }
  EXPECT_EQ(onto.axiom_count(), naive.size());
  EXPECT_EQ(onto.axioms(), naive);
}

TEST(RemoveAxiom, AbsentIsFalse) {
  Ontology onto;
  EXPECT_FALSE(onto.remove_axiom(Declaration{OWLClass(kNs + "x")}));
}

TEST(RemoveAxiom, DrainFixture) {
  Ontology onto = Ontology::load(kFixture);
  for (const auto& ax : onto.axioms()) {
    EXPECT_TRUE(onto.remove_axiom(ax));
    for (const auto& e : signature_of(ax)) {
      for (const auto& other : onto.axioms_about(e)) EXPECT_NE(other, ax);
    }
  }
  EXPECT_TRUE(onto.empty());
  EXPECT_TRUE(onto.signature().empty());
  for (AxiomKind k : all_axiom_kinds()) {
    EXPECT_TRUE(onto.axioms_of_kind(k).empty());
  }
}

TEST(Accessors, EmptyOntology) {
  const Ontology onto;
  EXPECT_TRUE(onto.classes_in_signature().empty());
  EXPECT_TRUE(onto.individuals_in_signature().empty());
  EXPECT_TRUE(onto.object_properties_in_signature().empty());
  EXPECT_TRUE(onto.data_properties_in_signature().empty());
  EXPECT_TRUE(onto.axioms_about(OWLClass(kNs + "nobody")).empty());
}

TEST(Indexes, ConsistentWithMasterList) {
  testing::Rng rng(41);
  const auto v = testing::make_vocabulary(kNs, 4, 2, 2, 5);
  for (int round = 0; round < 20; ++round) {
    Ontology onto = testing::random_ontology(rng, v, 40);
    // Remove a random third.
    for (const auto& ax : onto.axioms()) {
      if (testing::pick_index(rng, 3) == 0) onto.remove_axiom(ax);
    }
    const auto all = onto.axioms();
    std::size_t by_kind_total = 0;
    for (AxiomKind k : all_axiom_kinds()) {
      for (const auto& ax : onto.axioms_of_kind(k)) {
        EXPECT_EQ(ax.kind(), k);
        EXPECT_NE(std::find(all.begin(), all.end(), ax), all.end());
        ++by_kind_total;
      }
    }
    EXPECT_EQ(by_kind_total, all.size());
    for (const auto& ax : all) {
      for (const auto& e : signature_of(ax)) {
        const auto about = onto.axioms_about(e);
        EXPECT_NE(std::find(about.begin(), about.end(), ax), about.end());
      }
    }
  }
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("functional"), Format::Functional);
  EXPECT_EQ(parse_format("turtle"), Format::Turtle);
  EXPECT_THROW(parse_format("rdfxml"), Error);
}

}  // namespace
}  // namespace owlkit
