#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "owlkit/errors.hpp"
#include "owlkit/syntax.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {
namespace {

const std::string kNs = "http://example.com/father#";

PrefixContext father_ctx() {
  PrefixContext ctx;
  ctx.default_ns = kNs;
  ctx.data_properties.insert(make_iri(kNs + "hasAge"));
  return ctx;
}

OWLClass cls(const std::string& n) { return OWLClass(kNs + n); }
ObjectProperty prop(const std::string& n) { return ObjectProperty(kNs + n); }
Individual ind(const std::string& n) { return Individual(kNs + n); }
DataProperty dprop(const std::string& n) { return DataProperty(kNs + n); }

TEST(RenderDl, Examples) {
  const auto ctx = father_ctx();
  EXPECT_EQ(render_dl(cls("male"), ctx), "male");
  EXPECT_EQ(render_dl(make_and({cls("male"), make_some(prop("hasChild"), thing())}),
                      ctx),
            "male ⊓ (∃ hasChild.⊤)");
  EXPECT_EQ(render_dl(make_not(make_or({cls("C"), cls("D")})), ctx),
            "¬(C ⊔ D)");
  EXPECT_EQ(render_dl(ObjectMinCardinality(2, prop("hasChild"), cls("female")),
                      ctx),
            "≥ 2 hasChild.female");
  EXPECT_EQ(render_dl(ObjectHasValue{prop("hasChild"), ind("anna")}, ctx),
            "∃ hasChild.{anna}");
  EXPECT_EQ(render_dl(ObjectOneOf({ind("a"), ind("b")}), ctx), "{a, b}");
  EXPECT_EQ(render_dl(make_only(OPE(prop("hasChild"), true), nothing()), ctx),
            "∀ hasChild⁻.⊥");
  EXPECT_EQ(render_dl(DataSomeValuesFrom{dprop("hasAge"),
                                         DatatypeRestriction(
                                             Datatype(vocab::kXsdInteger),
                                             {{Facet::MinInclusive,
                                               Literal::integer(18)}})},
                      ctx),
            "∃ hasAge.xsd:integer[≥ 18]");
}

TEST(ParseDl, Examples) {
  const auto ctx = father_ctx();
  EXPECT_EQ(parse_dl("male ⊓ (∃ hasChild.⊤)", ctx),
            make_and({cls("male"), make_some(prop("hasChild"), thing())}));
  EXPECT_EQ(parse_dl("⊤", ctx), thing());
  EXPECT_EQ(parse_dl("≥ 2 hasChild.female", ctx),
            ClassExpression(
                ObjectMinCardinality(2, prop("hasChild"), cls("female"))));
}

TEST(ParseDl, AsciiEscapes) {
  const auto ctx = father_ctx();
  EXPECT_EQ(parse_dl("\\neg male \\sqcap \\exists hasChild.\\top", ctx),
            parse_dl("¬male ⊓ ∃ hasChild.⊤", ctx));
  EXPECT_EQ(parse_dl("\\forall r.\\bot \\sqcup C", ctx),
            parse_dl("∀ r.⊥ ⊔ C", ctx));
  // Keyword connectives are not DL.
  EXPECT_THROW(parse_dl("male and person", ctx), ParseError);
}

TEST(ParseDl, PrecedenceAndFlattening) {
  const auto ctx = father_ctx();
  EXPECT_EQ(parse_dl("A ⊓ B ⊔ C", ctx),
            make_or({make_and({cls("A"), cls("B")}), cls("C")}));
  EXPECT_EQ(parse_dl("A ⊓ (B ⊓ C)", ctx),
            make_and({cls("A"), cls("B"), cls("C")}));
  EXPECT_EQ(parse_dl("¬A ⊓ B", ctx), make_and({make_not(cls("A")), cls("B")}));
  EXPECT_EQ(parse_dl("∃ r.A ⊓ B", ctx),
            make_and({make_some(prop("r"), cls("A")), cls("B")}));
}

TEST(ParseDl, ErrorsCarryPosition) {
  const auto ctx = father_ctx();
  try {
    parse_dl("male ⊓ ", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 8u);
    EXPECT_EQ(e.found(), "end of input");
  }
  EXPECT_THROW(parse_dl("zz:male", ctx), ParseError);
  PrefixContext no_default;
  EXPECT_THROW(parse_dl("male", no_default), ParseError);
  EXPECT_EQ(parse_dl("<http://x#a>", no_default),
            ClassExpression(OWLClass("http://x#a")));
}

TEST(RenderManchester, Examples) {
  const auto ctx = father_ctx();
  EXPECT_EQ(render_manchester(
                make_and({cls("male"), make_some(prop("hasChild"), cls("person"))}),
                ctx),
            "male and (hasChild some person)");
  EXPECT_EQ(render_manchester(nothing(), ctx), "owl:Nothing");
  EXPECT_EQ(render_manchester(
                DataSomeValuesFrom{dprop("hasAge"),
                                   DatatypeRestriction(
                                       Datatype(vocab::kXsdInteger),
                                       {{Facet::MinInclusive,
                                         Literal::integer(18)}})},
                ctx),
            "hasAge some xsd:integer[>= 18]");
  EXPECT_EQ(render_manchester(make_not(cls("child")), ctx), "not child");
  EXPECT_EQ(render_manchester(
                ObjectHasValue{OPE(prop("hasChild"), true), ind("a")}, ctx),
            "inverse hasChild value a");
}

TEST(ParseManchester, Examples) {
  const auto ctx = father_ctx();
  EXPECT_EQ(parse_manchester("male and (hasChild some person)", ctx),
            make_and({cls("male"), make_some(prop("hasChild"), cls("person"))}));
  EXPECT_EQ(parse_manchester("not child", ctx), make_not(cls("child")));
  EXPECT_EQ(parse_manchester("hasChild max 0 person", ctx),
            ClassExpression(
                ObjectMaxCardinality(0, prop("hasChild"), cls("person"))));
  EXPECT_EQ(parse_manchester("hasChild min 1", ctx),
            ClassExpression(ObjectMinCardinality(1, prop("hasChild"), thing())));
  EXPECT_EQ(parse_manchester("hasAge value 42", ctx),
            ClassExpression(DataHasValue{dprop("hasAge"), Literal::integer(42)}));
}

TEST(ParseManchester, KeywordsAreCaseSensitive) {
  const auto ctx = father_ctx();
  EXPECT_THROW(parse_manchester("male AND person", ctx), ParseError);
  EXPECT_THROW(parse_manchester("hasChild SOME person", ctx), ParseError);
}

TEST(ParseManchester, Precedence) {
  const auto ctx = father_ctx();
  EXPECT_EQ(parse_manchester("A or B and C", ctx),
            make_or({cls("A"), make_and({cls("B"), cls("C")})}));
  EXPECT_EQ(parse_manchester("not A and B", ctx),
            make_and({make_not(cls("A")), cls("B")}));
  EXPECT_EQ(parse_manchester("r some A and B", ctx),
            make_and({make_some(prop("r"), cls("A")), cls("B")}));
}

PrefixContext vocab_ctx(const testing::Vocabulary& v) {
  PrefixContext ctx;
  ctx.default_ns = v.ns;
  for (const auto& d : v.data_properties) ctx.data_properties.insert(d.iri);
  return ctx;
}

TEST(RoundTrip, RandomExpressions) {
  testing::Rng rng(2024);
  const auto v = testing::make_vocabulary(kNs, 5, 3, 2, 5);
  const auto ctx = vocab_ctx(v);
  for (int i = 0; i < 500; ++i) {
    const ClassExpression ce = testing::random_ce(rng, v);
    const ClassExpression expected = normalize(ce);
    const std::string dl = render_dl(ce, ctx);
    EXPECT_EQ(parse_dl(dl, ctx), expected) << dl;
    const std::string man = render_manchester(ce, ctx);
    EXPECT_EQ(parse_manchester(man, ctx), expected) << man;
  }
}

TEST(RoundTrip, PrefixedAndFullIris) {
  testing::Rng rng(7);
  // Names in a namespace bound to a prefix, and in no namespace at all.
  const auto v = testing::make_vocabulary("http://other.example/o#", 4, 2, 1, 4);
  PrefixContext prefixed;
  prefixed.default_ns = kNs;
  prefixed.prefixes.set("o", "http://other.example/o#");
  PrefixContext bare;
  bare.default_ns = kNs;
  for (int i = 0; i < 100; ++i) {
    const ClassExpression ce = testing::random_ce(rng, v);
    for (const auto* ctx : {&prefixed, &bare}) {
      EXPECT_EQ(parse_dl(render_dl(ce, *ctx), *ctx), normalize(ce));
      EXPECT_EQ(parse_manchester(render_manchester(ce, *ctx), *ctx),
                normalize(ce));
    }
  }
  EXPECT_EQ(render_dl(OWLClass("http://other.example/o#C0"), prefixed), "o:C0");
  EXPECT_EQ(render_dl(OWLClass("http://other.example/o#C0"), bare),
            "<http://other.example/o#C0>");
}

std::string strip_parens(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '(' && c != ')') out += c;
  }
  return out;
}

TEST(RoundTrip, ParenthesesAreLoadBearingOnlyWhenEmitted) {
  testing::Rng rng(31);
  const auto v = testing::make_vocabulary(kNs, 4, 2, 1, 4);
  const auto ctx = vocab_ctx(v);
  int differing = 0;
  for (int i = 0; i < 300; ++i) {
    const ClassExpression ce = testing::random_ce(rng, v);
    for (int which = 0; which < 2; ++which) {
      const std::string text =
          which == 0 ? render_dl(ce, ctx) : render_manchester(ce, ctx);
      const std::string stripped = strip_parens(text);
      if (stripped == text) {
        // Nothing to strip: reparsing must agree trivially.
        continue;
      }
      std::optional<ClassExpression> reparsed;
      try {
        reparsed = which == 0 ? parse_dl(stripped, ctx)
                              : parse_manchester(stripped, ctx);
      } catch (const ParseError&) {
      }
      if (!reparsed || !(*reparsed == normalize(ce))) ++differing;
    }
  }
  // Any AST change comes from text that had parentheses (checked above);
  // the corpus must exercise that case.
  EXPECT_GT(differing, 0);
}

TEST(RoundTrip, NeverEmitsUnparsableText) {
  testing::Rng rng(77);
  const auto v = testing::make_vocabulary(kNs, 3, 2, 2, 3);
  const auto ctx = vocab_ctx(v);
  testing::CEOptions deep;
  deep.max_depth = 6;
  for (int i = 0; i < 200; ++i) {
    const ClassExpression ce = testing::random_ce(rng, v, deep);
    EXPECT_NO_THROW(parse_dl(render_dl(ce, ctx), ctx));
    EXPECT_NO_THROW(parse_manchester(render_manchester(ce, ctx), ctx));
  }
}

TEST(Literals, RenderForms) {
  const auto ctx = father_ctx();
  const auto dp = dprop("d");
  EXPECT_EQ(render_manchester(DataHasValue{dp, Literal::integer(-3)}, ctx),
            "d value -3");
  EXPECT_EQ(render_manchester(DataHasValue{dp, Literal::string("a \"b\"")}, ctx),
            "d value \"a \\\"b\\\"\"");
  EXPECT_EQ(render_manchester(DataHasValue{dp, Literal::real(2.5)}, ctx),
            "d value \"2.5\"^^xsd:double");
  EXPECT_EQ(render_dl(DataSomeValuesFrom{dp, DataOneOf({Literal::integer(1)})},
                      ctx),
            "∃ d.({1})");
  EXPECT_EQ(parse_dl("∃ d.({1})", ctx),
            ClassExpression(
                DataSomeValuesFrom{dp, DataOneOf({Literal::integer(1)})}));
  EXPECT_EQ(parse_dl("∃ d.{1}", ctx),
            ClassExpression(DataHasValue{dp, Literal::integer(1)}));
}

TEST(ParseSwrl, Examples) {
  const auto ctx = father_ctx();
  const SWRLRule rule =
      parse_swrl("male(?x) ^ hasChild(?x, ?y) -> parentOf(?x, ?y)", ctx);
  EXPECT_EQ(rule.body().size(), 2u);
  EXPECT_EQ(rule.head().size(), 1u);
  EXPECT_EQ(std::get<ClassAtom>(rule.body()[0]).cls,
            ClassExpression(cls("male")));
  EXPECT_TRUE(std::holds_alternative<ObjectPropertyAtom>(rule.head()[0]));

  EXPECT_NO_THROW(parse_swrl("person(?x) -> person(?x)", ctx));
}

TEST(ParseSwrl, SafetyViolation) {
  const auto ctx = father_ctx();
  try {
    parse_swrl("p(?x, ?y) -> q(?z, ?y)", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("?z"), std::string::npos);
    EXPECT_EQ(e.column(), 16u);
  }
}

TEST(ParseSwrl, DataAtoms) {
  const auto ctx = father_ctx();
  const SWRLRule rule =
      parse_swrl("hasAge(?x, ?a) ^ person(?x) -> adult(?x) ^ d(?x, 42)", ctx);
  EXPECT_TRUE(std::holds_alternative<DataPropertyAtom>(rule.body()[0]));
  EXPECT_TRUE(std::holds_alternative<DataPropertyAtom>(rule.head()[1]));
}

TEST(ParseSwrl, ComplexClassAtom) {
  const auto ctx = father_ctx();
  const SWRLRule rule =
      parse_swrl("(male and (hasChild some person))(?x) -> father(?x)", ctx);
  EXPECT_EQ(std::get<ClassAtom>(rule.body()[0]).cls,
            make_and({cls("male"), make_some(prop("hasChild"), cls("person"))}));
}

TEST(ParseSwrl, RoundTripRandomRules) {
  testing::Rng rng(13);
  const auto v = testing::make_vocabulary(kNs, 4, 2, 2, 4);
  const auto ctx = vocab_ctx(v);
  for (int i = 0; i < 200; ++i) {
    const Axiom ax = testing::random_axiom(rng, v, AxiomKind::SWRLRule);
    const SWRLRule& rule = ax.get_if<SWRLRuleAxiom>()->rule;
    const std::string text = render_swrl(rule, ctx);
    const SWRLRule back = parse_swrl(text, ctx);
    // Class atoms are compared modulo flattening.
    auto norm = [](const std::vector<SWRLAtom>& atoms) {
      std::vector<SWRLAtom> out;
      for (const auto& a : atoms) {
        if (auto* c = std::get_if<ClassAtom>(&a)) {
          out.push_back(ClassAtom{normalize(c->cls), c->arg});
        } else {
          out.push_back(a);
        }
      }
      return out;
    };
    EXPECT_EQ(norm(back.body()), norm(rule.body())) << text;
    EXPECT_EQ(norm(back.head()), norm(rule.head())) << text;
  }
}

}  // namespace
}  // namespace owlkit
