#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "owlkit/errors.hpp"
#include "owlkit/functional.hpp"
#include "owlkit/rdf_mapping.hpp"
#include "owlkit/turtle.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {
namespace {

const std::string kNs = "http://example.com/father#";
const std::filesystem::path kFixture =
    std::filesystem::path(OWLKIT_TEST_DATA_DIR) / "family.ofn";

PrefixMap father_prefixes() {
  PrefixMap p;
  p.set("f", kNs);
  return p;
}

OWLClass cls(const std::string& n) { return OWLClass(kNs + n); }
ObjectProperty prop(const std::string& n) { return ObjectProperty(kNs + n); }
Individual ind(const std::string& n) { return Individual(kNs + n); }

TEST(ParseFunctional, MinimalAxiom) {
  const Axiom ax =
      parse_functional_axiom("SubClassOf(f:male f:person)", father_prefixes());
  EXPECT_EQ(ax, Axiom(SubClassOf{cls("male"), cls("person")}));
}

TEST(ParseFunctional, NestedEquivalentClasses) {
  const Axiom ax = parse_functional_axiom(
      "EquivalentClasses(f:father ObjectIntersectionOf(f:male "
      "ObjectSomeValuesFrom(f:hasChild f:person)))",
      father_prefixes());
  const Axiom expected = EquivalentClasses(
      {cls("father"),
       make_and({cls("male"), make_some(prop("hasChild"), cls("person"))})});
  EXPECT_EQ(ax, expected);
}

TEST(ParseFunctional, ClassAssertionPutsClassFirst) {
  const Axiom ax =
      parse_functional_axiom("ClassAssertion(f:male f:alkid)", father_prefixes());
  EXPECT_EQ(ax, Axiom(ClassAssertion{ind("alkid"), cls("male")}));
}

TEST(ParseFunctional, FullIrisAndComments) {
  const Ontology onto = parse_functional(
      "# leading comment\n"
      "Ontology(<http://x> # trailing\n"
      "  SubClassOf(<http://x#a> <http://x#b>)\n"
      ")\n");
  ASSERT_EQ(onto.axiom_count(), 1u);
  EXPECT_EQ(onto.axioms()[0],
            Axiom(SubClassOf{OWLClass("http://x#a"), OWLClass("http://x#b")}));
}

TEST(ParseFunctional, UnbalancedAtEof) {
  try {
    parse_functional("Ontology(");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 10u);
    EXPECT_EQ(e.found(), "end of input");
  }
}

TEST(ParseFunctional, UnknownPrefix) {
  try {
    parse_functional("Ontology(<http://x>\nSubClassOf(q:a q:b))");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("unknown prefix 'q:'"),
              std::string::npos);
  }
}

TEST(ParseFunctional, UnsupportedConstructIsLoud) {
  for (const char* text : {
           "Ontology(<http://x> SubObjectPropertyOf(ObjectPropertyChain(<http://x#a> <http://x#b>) <http://x#c>))",
           "Ontology(<http://x> HasKey(<http://x#a> () ()))",
           "Ontology(<http://x> TransitiveObjectProperty(<http://x#a>))",
       }) {
    try {
      parse_functional(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("unsupported construct"),
                std::string::npos)
          << e.what();
    }
  }
}

TEST(ParseFunctional, RejectsUnbalancedStreams) {
  testing::Rng rng(8);
  const Ontology fixture = Ontology::load(kFixture);
  const std::string text = serialize_functional(fixture);
  for (int i = 0; i < 50; ++i) {
    std::string mutated = text;
    // Drop one random parenthesis.
    std::vector<std::size_t> parens;
    for (std::size_t k = 0; k < mutated.size(); ++k) {
      if (mutated[k] == '(' || mutated[k] == ')') parens.push_back(k);
    }
    mutated.erase(testing::pick(rng, parens), 1);
    EXPECT_THROW(parse_functional(mutated), ParseError);
  }
}

TEST(SerializeFunctional, EmptyOntology) {
  const Ontology onto(make_iri("http://x"));
  EXPECT_EQ(serialize_functional(onto),
            "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
            "Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)\n"
            "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
            "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
            "\n"
            "Ontology(<http://x>\n"
            ")\n");
}

TEST(SerializeFunctional, DeclarationsKeepInsertionOrder) {
  Ontology onto(make_iri("http://x"));
  onto.prefixes().set("f", kNs);
  onto.add_axiom(Declaration{cls("zeta")});
  onto.add_axiom(Declaration{cls("alpha")});
  onto.add_axiom(Declaration{ind("mid")});
  const std::string out = serialize_functional(onto);
  const auto z = out.find("Declaration(Class(f:zeta))");
  const auto a = out.find("Declaration(Class(f:alpha))");
  const auto m = out.find("Declaration(NamedIndividual(f:mid))");
  ASSERT_NE(z, std::string::npos);
  EXPECT_LT(z, a);
  EXPECT_LT(a, m);
}

TEST(SerializeFunctional, ThreeOperandIntersectionKeepsOrder) {
  const ClassExpression ce = make_and({cls("c"), cls("a"), cls("b")});
  const std::string text = to_functional(ce, father_prefixes());
  EXPECT_EQ(text, "ObjectIntersectionOf(f:c f:a f:b)");
  EXPECT_EQ(parse_functional_expression(text, father_prefixes()), ce);
}

TEST(SerializeFunctional, LiteralEscapes) {
  const Literal lit = Literal::string("a \"q\" \\ \n\t end");
  const std::string text = to_functional(lit);
  EXPECT_EQ(text, "\"a \\\"q\\\" \\\\ \\n\\t end\"");
}

TEST(SerializeFunctional, FixtureRoundTrip) {
  const Ontology onto = Ontology::load(kFixture);
  const Ontology back = parse_functional(serialize_functional(onto));
  EXPECT_EQ(onto.axioms(), back.axioms());
  // Canonical output is a fixpoint.
  EXPECT_EQ(serialize_functional(onto), serialize_functional(back));
}

TEST(SerializeFunctional, RandomOntologiesRoundTrip) {
  testing::Rng rng(99);
  const auto v = testing::make_vocabulary(kNs, 5, 3, 2, 6);
  for (int i = 0; i < 40; ++i) {
    const Ontology onto = testing::random_ontology(rng, v, 50);
    const std::string text = serialize_functional(onto);
    const Ontology back = parse_functional(text);
    ASSERT_TRUE(same_axioms(onto, back)) << text;
  }
}

TEST(TripleMapping, ClassAssertion) {
  const auto triples =
      map_axiom_to_triples(ClassAssertion{ind("alkid"), cls("male")});
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0], (Triple{ind("alkid").iri, make_iri(vocab::kRdfType),
                                cls("male").iri}));
}

TEST(TripleMapping, TypedLiteral) {
  const auto triples = map_axiom_to_triples(DataPropertyAssertion{
      DataProperty(kNs + "hasAge"), ind("anna"), Literal::integer(42)});
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(std::get<Literal>(triples[0].object), Literal::integer(42));
}

TEST(TripleMapping, SomeValuesFromRestriction) {
  const auto triples = map_axiom_to_triples(
      SubClassOf{cls("father"), make_some(prop("hasChild"), cls("person"))});
  // (_:b0 type Restriction), (_:b0 onProperty hasChild),
  // (_:b0 someValuesFrom person), (father subClassOf _:b0).
  const auto owl = [](const char* local) {
    return make_iri(std::string(vocab::kOwlNs) + local);
  };
  const RdfNode b0 = BlankNode{0};
  const std::vector<Triple> expected = {
      {b0, make_iri(vocab::kRdfType), owl("Restriction")},
      {b0, owl("onProperty"), prop("hasChild").iri},
      {b0, owl("someValuesFrom"), cls("person").iri},
      {cls("father").iri,
       make_iri(std::string(vocab::kRdfsNs) + "subClassOf"), b0},
  };
  EXPECT_EQ(triples, expected);
}

TEST(TripleMapping, SwrlIsUnmappable) {
  const ClassAtom atom{cls("person"), Variable{"x"}};
  EXPECT_THROW(map_axiom_to_triples(SWRLRuleAxiom{SWRLRule({atom}, {atom})}),
               Unmappable);
}

TEST(TripleMapping, BlankNodesUniquePerInvocation) {
  testing::Rng rng(4);
  const auto v = testing::make_vocabulary(kNs, 4, 2, 2, 4);
  const Ontology onto = testing::random_ontology(rng, v, 50);
  TripleMapper mapper;
  std::set<std::uint64_t> used;
  for (const auto& ax : onto.axioms()) {
    if (ax.kind() == AxiomKind::SWRLRule) continue;
    std::set<std::uint64_t> mine;
    for (const auto& t : mapper.map(ax)) {
      for (const RdfNode* n : {&t.subject, &t.object}) {
        if (auto* b = std::get_if<BlankNode>(n)) mine.insert(b->id);
      }
    }
    for (auto id : mine) EXPECT_FALSE(used.count(id)) << "reused _:b" << id;
    used.insert(mine.begin(), mine.end());
  }
}

TEST(TripleMapping, AboxOnlyHasOneTriplePerAxiom) {
  testing::Rng rng(6);
  const auto v = testing::make_vocabulary(kNs, 4, 3, 2, 8);
  for (int i = 0; i < 20; ++i) {
    testing::ABoxOptions opts;
    const Ontology abox = testing::random_abox(rng, v, opts);
    EXPECT_EQ(map_ontology_to_triples(abox).size(), abox.axiom_count());
  }
}

TEST(Turtle, ClassAssertionLine) {
  Ontology onto = Ontology::load(kFixture);
  onto.add_axiom(ClassAssertion{ind("alkid"), cls("male")});
  const std::string ttl = serialize_turtle(onto);
  EXPECT_NE(ttl.find("<http://example.com/father#alkid> rdf:type "
                     "<http://example.com/father#male> .\n"),
            std::string::npos);
}

TEST(Turtle, EmptyOntologyIsPrefixHeaderOnly) {
  const std::string ttl = serialize_turtle(Ontology());
  EXPECT_EQ(ttl,
            "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
            "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
            "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Turtle, FixtureAssertionsAppearOnce) {
  const Ontology onto = Ontology::load(kFixture);
  const auto ttl_lines = lines_of(serialize_turtle(onto));
  std::size_t assertions = 0;
  for (const auto& ax : onto.axioms()) {
    const auto kind = ax.kind();
    if (kind != AxiomKind::ClassAssertion &&
        kind != AxiomKind::ObjectPropertyAssertion &&
        kind != AxiomKind::DataPropertyAssertion) {
      continue;
    }
    ++assertions;
    const auto triples = map_axiom_to_triples(ax);
    ASSERT_EQ(triples.size(), 1u);
    const std::string line = lines_of(write_turtle(triples)).back();
    EXPECT_EQ(std::count(ttl_lines.begin(), ttl_lines.end(), line), 1) << line;
  }
  EXPECT_EQ(assertions, 17u);
}

TEST(Turtle, EscapesQuotes) {
  EXPECT_EQ(escape_turtle_string("say \"hi\"\\\n"), "say \\\"hi\\\"\\\\\\n");
}

TEST(Turtle, StrictModeRejectsSwrl) {
  Ontology onto;
  const ClassAtom atom{cls("person"), Variable{"x"}};
  onto.add_axiom(SWRLRuleAxiom{SWRLRule({atom}, {atom})});
  std::vector<std::string> warnings;
  EXPECT_NO_THROW(serialize_turtle(onto, {}, &warnings));
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_THROW(serialize_turtle(onto, TurtleOptions{true}), Unmappable);
}

}  // namespace
}  // namespace owlkit
