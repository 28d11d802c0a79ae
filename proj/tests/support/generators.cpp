#include "generators.hpp"

#include "owlkit/vocab.hpp"

namespace owlkit::testing {

std::size_t pick_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

std::int64_t pick_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double p_true) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p_true;
}

Vocabulary make_vocabulary(std::string ns, std::size_t classes,
                           std::size_t object_properties,
                           std::size_t data_properties,
                           std::size_t individuals) {
  Vocabulary v;
  v.ns = ns;
  for (std::size_t i = 0; i < classes; ++i) {
    v.classes.emplace_back(ns + "C" + std::to_string(i));
  }
  for (std::size_t i = 0; i < object_properties; ++i) {
    v.object_properties.emplace_back(ns + "r" + std::to_string(i));
  }
  for (std::size_t i = 0; i < data_properties; ++i) {
    v.data_properties.emplace_back(ns + "d" + std::to_string(i));
  }
  for (std::size_t i = 0; i < individuals; ++i) {
    v.individuals.emplace_back(ns + "i" + std::to_string(i));
  }
  return v;
}

Literal random_literal(Rng& rng) {
  switch (pick_index(rng, 4)) {
    case 0:
    case 1: return Literal::integer(pick_int(rng, 0, 20));
    case 2: return Literal::real(static_cast<double>(pick_int(rng, 0, 40)) / 2);
    default: return Literal::string("s" + std::to_string(pick_int(rng, 0, 3)));
  }
}

namespace {

Literal numeric_literal(Rng& rng) {
  if (coin(rng, 0.7)) return Literal::integer(pick_int(rng, 0, 20));
  return Literal::real(static_cast<double>(pick_int(rng, 0, 40)) / 2);
}

ObjectPropertyExpression random_ope(Rng& rng, const Vocabulary& v,
                                    const CEOptions& opts) {
  return {pick(rng, v.object_properties),
          opts.inverse_properties && coin(rng, 0.2)};
}

}  // namespace

DataRange random_data_range(Rng& rng) {
  switch (pick_index(rng, 4)) {
    case 0: {
      static const std::vector<std::string_view> kTypes = {
          vocab::kXsdInteger, vocab::kXsdDouble, vocab::kXsdString};
      return Datatype(pick(rng, kTypes));
    }
    case 1:
    case 2: {
      std::vector<FacetRestriction> facets;
      const auto n = 1 + pick_index(rng, 2);
      for (std::size_t i = 0; i < n; ++i) {
        facets.push_back({static_cast<Facet>(pick_index(rng, 4)),
                          numeric_literal(rng)});
      }
      return DatatypeRestriction(
          Datatype(coin(rng) ? vocab::kXsdInteger : vocab::kXsdDouble),
          std::move(facets));
    }
    default: {
      std::vector<Literal> values;
      const auto n = 1 + pick_index(rng, 3);
      for (std::size_t i = 0; i < n; ++i) values.push_back(random_literal(rng));
      return DataOneOf(std::move(values));
    }
  }
}

ClassExpression random_ce_of_depth(Rng& rng, const Vocabulary& v,
                                   const CEOptions& opts, int depth) {
  // Leaves.
  if (depth <= 0) {
    const int roll = static_cast<int>(pick_index(rng, 20));
    if (opts.thing_and_nothing && roll == 0) return thing();
    if (opts.thing_and_nothing && roll == 1) return nothing();
    if (roll == 2) {
      std::vector<Individual> inds;
      const auto n = 1 + pick_index(rng, 3);
      for (std::size_t i = 0; i < n; ++i) inds.push_back(pick(rng, v.individuals));
      return ObjectOneOf(std::move(inds));
    }
    if (roll == 3) {
      return ObjectHasValue{random_ope(rng, v, opts), pick(rng, v.individuals)};
    }
    if (opts.data_restrictions && !v.data_properties.empty() && roll == 4) {
      const auto& d = pick(rng, v.data_properties);
      switch (pick_index(rng, 3)) {
        case 0: return DataSomeValuesFrom{d, random_data_range(rng)};
        case 1: return DataAllValuesFrom{d, random_data_range(rng)};
        default: return DataHasValue{d, random_literal(rng)};
      }
    }
    return pick(rng, v.classes);
  }
  auto sub = [&] {
    return random_ce_of_depth(rng, v, opts,
                              static_cast<int>(pick_index(rng, depth)));
  };
  switch (pick_index(rng, 8)) {
    case 0:
    case 1: {
      std::vector<ClassExpression> ops;
      const auto n = 2 + pick_index(rng, 2);
      for (std::size_t i = 0; i < n; ++i) ops.push_back(sub());
      // At least one operand carries the full remaining depth.
      ops[pick_index(rng, n)] = random_ce_of_depth(rng, v, opts, depth - 1);
      if (pick_index(rng, 2) == 0) return ObjectIntersectionOf(std::move(ops));
      return ObjectUnionOf(std::move(ops));
    }
    case 2:
      return ObjectComplementOf{random_ce_of_depth(rng, v, opts, depth - 1)};
    case 3:
      return ObjectSomeValuesFrom{random_ope(rng, v, opts),
                                  random_ce_of_depth(rng, v, opts, depth - 1)};
    case 4:
      return ObjectAllValuesFrom{random_ope(rng, v, opts),
                                 random_ce_of_depth(rng, v, opts, depth - 1)};
    case 5:
      return ObjectMinCardinality(pick_int(rng, 0, opts.max_cardinality),
                                  random_ope(rng, v, opts),
                                  random_ce_of_depth(rng, v, opts, depth - 1));
    case 6:
      return ObjectMaxCardinality(pick_int(rng, 0, opts.max_cardinality),
                                  random_ope(rng, v, opts),
                                  random_ce_of_depth(rng, v, opts, depth - 1));
    default:
      return ObjectExactCardinality(pick_int(rng, 0, opts.max_cardinality),
                                    random_ope(rng, v, opts),
                                    random_ce_of_depth(rng, v, opts, depth - 1));
  }
}

ClassExpression random_ce(Rng& rng, const Vocabulary& v,
                          const CEOptions& opts) {
  return random_ce_of_depth(
      rng, v, opts, static_cast<int>(pick_index(rng, opts.max_depth + 1)));
}

namespace {

Individual random_individual(Rng& rng, const Vocabulary& v) {
  return pick(rng, v.individuals);
}

IndividualArgument random_iarg(Rng& rng, const Vocabulary& v,
                               const std::vector<Variable>& vars) {
  if (coin(rng, 0.8)) return pick(rng, vars);
  return random_individual(rng, v);
}

SWRLRule random_rule(Rng& rng, const Vocabulary& v, const CEOptions& opts) {
  const std::vector<Variable> vars = {{"x"}, {"y"}, {"z"}};
  auto atom = [&]() -> SWRLAtom {
    switch (pick_index(rng, 3)) {
      case 0: {
        CEOptions shallow = opts;
        shallow.max_depth = std::min(opts.max_depth, 2);
        return ClassAtom{random_ce(rng, v, shallow), random_iarg(rng, v, vars)};
      }
      case 1:
        return ObjectPropertyAtom{random_ope(rng, v, opts),
                                  random_iarg(rng, v, vars),
                                  random_iarg(rng, v, vars)};
      default: {
        DataArgument value = coin(rng) ? DataArgument(pick(rng, vars))
                                       : DataArgument(random_literal(rng));
        return DataPropertyAtom{pick(rng, v.data_properties),
                                random_iarg(rng, v, vars), std::move(value)};
      }
    }
  };
  std::vector<SWRLAtom> body;
  const auto nb = 1 + pick_index(rng, 3);
  for (std::size_t i = 0; i < nb; ++i) body.push_back(atom());
  // Safe head: rebind head variables to ones the body uses.
  const auto bound = variables_of(body);
  std::vector<SWRLAtom> head;
  const auto nh = 1 + pick_index(rng, 2);
  for (std::size_t i = 0; i < nh; ++i) {
    SWRLAtom a = atom();
    auto fix = [&](IndividualArgument& arg) {
      if (std::holds_alternative<Variable>(arg)) {
        if (bound.empty()) {
          arg = random_individual(rng, v);
        } else {
          arg = pick(rng, bound);
        }
      }
    };
    std::visit(
        [&](auto& at) {
          using T = std::decay_t<decltype(at)>;
          if constexpr (std::is_same_v<T, ClassAtom>) {
            fix(at.arg);
          } else if constexpr (std::is_same_v<T, ObjectPropertyAtom>) {
            fix(at.first);
            fix(at.second);
          } else {
            fix(at.subject);
            if (std::holds_alternative<Variable>(at.value)) {
              if (bound.empty()) {
                at.value = random_literal(rng);
              } else {
                at.value = pick(rng, bound);
              }
            }
          }
        },
        a);
    head.push_back(std::move(a));
  }
  return SWRLRule(std::move(body), std::move(head));
}

}  // namespace

Axiom random_axiom(Rng& rng, const Vocabulary& v, AxiomKind kind,
                   const CEOptions& opts) {
  auto ce = [&] { return random_ce(rng, v, opts); };
  auto ope = [&] { return random_ope(rng, v, opts); };
  auto ind = [&] { return random_individual(rng, v); };
  switch (kind) {
    case AxiomKind::Declaration:
      switch (pick_index(rng, 6)) {
        case 0: return Declaration{pick(rng, v.classes)};
        case 1: return Declaration{pick(rng, v.object_properties)};
        case 2: return Declaration{pick(rng, v.data_properties)};
        case 3: return Declaration{ind()};
        case 4: return Declaration{Datatype(vocab::kXsdInteger)};
        default:
          return Declaration{AnnotationProperty(vocab::kRdfsNs.data() +
                                                std::string("comment"))};
      }
    case AxiomKind::SubClassOf: return SubClassOf{ce(), ce()};
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses: {
      std::vector<ClassExpression> members;
      const auto n = 2 + pick_index(rng, 2);
      for (std::size_t i = 0; i < n; ++i) members.push_back(ce());
      if (kind == AxiomKind::EquivalentClasses) {
        return EquivalentClasses(std::move(members));
      }
      return DisjointClasses(std::move(members));
    }
    case AxiomKind::ClassAssertion: return ClassAssertion{ind(), ce()};
    case AxiomKind::ObjectPropertyAssertion:
      return ObjectPropertyAssertion{ope(), ind(), ind()};
    case AxiomKind::DataPropertyAssertion:
      return DataPropertyAssertion{pick(rng, v.data_properties), ind(),
                                   random_literal(rng)};
    case AxiomKind::SubObjectPropertyOf:
      return SubObjectPropertyOf{ope(), ope()};
    case AxiomKind::InverseObjectProperties:
      return InverseObjectProperties{ope(), ope()};
    case AxiomKind::ObjectPropertyDomain:
      return ObjectPropertyDomain{ope(), ce()};
    case AxiomKind::ObjectPropertyRange:
      return ObjectPropertyRange{ope(), ce()};
    case AxiomKind::FunctionalObjectProperty:
      return FunctionalObjectProperty{ope()};
    case AxiomKind::DataPropertyDomain:
      return DataPropertyDomain{pick(rng, v.data_properties), ce()};
    case AxiomKind::DataPropertyRange:
      return DataPropertyRange{pick(rng, v.data_properties),
                               random_data_range(rng)};
    case AxiomKind::AnnotationAssertion: {
      AnnotationProperty label(std::string(vocab::kRdfsNs) + "label");
      IRI subject = pick(rng, v.classes).iri;
      if (coin(rng)) {
        return AnnotationAssertion{
            label, subject,
            Literal::string("label \"" + std::to_string(pick_int(rng, 0, 9)) +
                            "\"\n\tend\\")};
      }
      return AnnotationAssertion{label, subject, ind().iri};
    }
    case AxiomKind::SWRLRule: return SWRLRuleAxiom{random_rule(rng, v, opts)};
  }
  return Declaration{pick(rng, v.classes)};
}

Ontology random_ontology(Rng& rng, const Vocabulary& v, std::size_t max_axioms,
                         const CEOptions& opts) {
  Ontology onto(make_iri(v.ns.substr(0, v.ns.size() - 1)));
  onto.prefixes().set("", v.ns);
  const auto n = 1 + pick_index(rng, max_axioms);
  const auto& kinds = all_axiom_kinds();
  // First pass covers every kind; the rest are uniform.
  for (std::size_t i = 0; i < n; ++i) {
    const AxiomKind kind =
        i < kinds.size() ? kinds[i] : kinds[pick_index(rng, kinds.size())];
    onto.add_axiom(random_axiom(rng, v, kind, opts));
  }
  return onto;
}

Ontology random_abox(Rng& rng, const Vocabulary& v, const ABoxOptions& opts) {
  Ontology onto(make_iri(v.ns.substr(0, v.ns.size() - 1)));
  onto.prefixes().set("", v.ns);
  for (const auto& i : v.individuals) onto.add_axiom(Declaration{i});
  if (opts.with_tbox) {
    for (std::size_t i = 0; i + 1 < v.classes.size(); ++i) {
      if (coin(rng, 0.4)) {
        onto.add_axiom(SubClassOf{pick(rng, v.classes), pick(rng, v.classes)});
      }
    }
    if (coin(rng, 0.5) && v.classes.size() >= 2) {
      onto.add_axiom(EquivalentClasses(
          {pick(rng, v.classes), pick(rng, v.classes)}));
    }
    for (std::size_t i = 0; i < v.object_properties.size(); ++i) {
      if (coin(rng, 0.3)) {
        onto.add_axiom(SubObjectPropertyOf{
            ObjectPropertyExpression(pick(rng, v.object_properties),
                                     coin(rng, 0.2)),
            pick(rng, v.object_properties)});
      }
      if (coin(rng, 0.2)) {
        onto.add_axiom(InverseObjectProperties{
            pick(rng, v.object_properties), pick(rng, v.object_properties)});
      }
    }
  }
  for (std::size_t i = 0; i < opts.class_assertions; ++i) {
    onto.add_axiom(ClassAssertion{pick(rng, v.individuals),
                                  pick(rng, v.classes)});
  }
  for (std::size_t i = 0; i < opts.object_assertions; ++i) {
    onto.add_axiom(ObjectPropertyAssertion{
        ObjectPropertyExpression(pick(rng, v.object_properties),
                                 opts.inverse_assertions && coin(rng, 0.2)),
        pick(rng, v.individuals), pick(rng, v.individuals)});
  }
  for (std::size_t i = 0; i < opts.data_assertions && !v.data_properties.empty();
       ++i) {
    onto.add_axiom(DataPropertyAssertion{pick(rng, v.data_properties),
                                         pick(rng, v.individuals),
                                         random_literal(rng)});
  }
  return onto;
}

}  // namespace owlkit::testing
