#include "owlkit/rdf_mapping.hpp"

#include "owlkit/functional.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

Unmappable::Unmappable(const Axiom& axiom)
    : Error("axiom has no RDF mapping: " + to_functional(axiom)) {}

namespace {

IRI owl(std::string_view local) {
  return make_iri(std::string(vocab::kOwlNs) + std::string(local));
}
IRI rdf(std::string_view local) {
  return make_iri(std::string(vocab::kRdfNs) + std::string(local));
}
IRI rdfs(std::string_view local) {
  return make_iri(std::string(vocab::kRdfsNs) + std::string(local));
}

class Emitter {
 public:
  Emitter(std::vector<Triple>& out, std::uint64_t& next_blank)
      : out_(out), next_blank_(next_blank) {}

  BlankNode fresh() { return BlankNode{next_blank_++}; }

  void add(RdfNode s, IRI p, RdfNode o) {
    out_.push_back(Triple{std::move(s), std::move(p), std::move(o)});
  }

  // rdf:first / rdf:rest list; returns its head node.
  template <class Seq, class F>
  RdfNode list(const Seq& items, F&& to_node) {
    if (items.empty()) return rdf("nil");
    std::vector<BlankNode> cells;
    cells.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh());
    for (std::size_t i = 0; i < items.size(); ++i) {
      add(cells[i], rdf("first"), to_node(items[i]));
      add(cells[i], rdf("rest"),
          i + 1 < items.size() ? RdfNode(cells[i + 1]) : RdfNode(rdf("nil")));
    }
    return cells.front();
  }

  RdfNode ope(const ObjectPropertyExpression& p) {
    if (!p.inverse) return p.property.iri;
    auto b = fresh();
    add(b, owl("inverseOf"), p.property.iri);
    return b;
  }

  RdfNode range(const DataRange& dr) {
    return std::visit(
        [&](const auto& r) -> RdfNode {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, Datatype>) {
            return r.iri;
          } else if constexpr (std::is_same_v<T, DatatypeRestriction>) {
            auto b = fresh();
            add(b, rdf("type"), rdfs("Datatype"));
            add(b, owl("onDatatype"), r.base.iri);
            auto l = list(r.facets, [&](const FacetRestriction& f) -> RdfNode {
              auto fb = fresh();
              add(fb, facet_iri(f.facet), f.value);
              return fb;
            });
            add(b, owl("withRestrictions"), l);
            return b;
          } else {
            auto b = fresh();
            add(b, rdf("type"), rdfs("Datatype"));
            add(b, owl("oneOf"),
                list(r.values, [](const Literal& v) -> RdfNode { return v; }));
            return b;
          }
        },
        dr.variant());
  }

  RdfNode ce(const ClassExpression& c) {
    return c.visit([&](const auto& n) -> RdfNode {
      using T = std::decay_t<decltype(n)>;
      if constexpr (std::is_same_v<T, OWLClass>) {
        return n.iri;
      } else if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                           std::is_same_v<T, ObjectUnionOf>) {
        auto b = fresh();
        add(b, rdf("type"), owl("Class"));
        auto l = list(n.operands,
                      [&](const ClassExpression& op) { return ce(op); });
        add(b,
            owl(std::is_same_v<T, ObjectIntersectionOf> ? "intersectionOf"
                                                        : "unionOf"),
            l);
        return b;
      } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
        auto b = fresh();
        add(b, rdf("type"), owl("Class"));
        add(b, owl("complementOf"), ce(n.operand));
        return b;
      } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
        auto b = fresh();
        add(b, rdf("type"), owl("Class"));
        add(b, owl("oneOf"), list(n.individuals, [](const Individual& i) {
              return RdfNode(i.iri);
            }));
        return b;
      } else {
        auto b = fresh();
        add(b, rdf("type"), owl("Restriction"));
        restriction(b, n);
        return b;
      }
    });
  }

  void axiom(const Axiom& ax) {
    ax.visit([&](const auto& a) {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, Declaration>) {
        static constexpr std::string_view kTypes[] = {
            "Class",           "ObjectProperty", "DatatypeProperty",
            "NamedIndividual", "",               "AnnotationProperty"};
        if (a.entity.kind == EntityKind::Datatype) {
          add(a.entity.iri, rdf("type"), rdfs("Datatype"));
        } else {
          add(a.entity.iri, rdf("type"),
              owl(kTypes[static_cast<std::size_t>(a.entity.kind)]));
        }
      } else if constexpr (std::is_same_v<T, SubClassOf>) {
        auto s = ce(a.sub);
        add(s, rdfs("subClassOf"), ce(a.sup));
      } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
        std::vector<RdfNode> nodes;
        for (const auto& m : a.members) nodes.push_back(ce(m));
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
          add(nodes[i], owl("equivalentClass"), nodes[i + 1]);
        }
      } else if constexpr (std::is_same_v<T, DisjointClasses>) {
        if (a.members.size() == 2) {
          auto x = ce(a.members[0]);
          add(x, owl("disjointWith"), ce(a.members[1]));
        } else {
          auto b = fresh();
          add(b, rdf("type"), owl("AllDisjointClasses"));
          add(b, owl("members"),
              list(a.members, [&](const ClassExpression& m) { return ce(m); }));
        }
      } else if constexpr (std::is_same_v<T, ClassAssertion>) {
        add(a.individual.iri, rdf("type"), ce(a.cls));
      } else if constexpr (std::is_same_v<T, ObjectPropertyAssertion>) {
        if (a.property.inverse) {
          add(a.object.iri, a.property.property.iri, a.subject.iri);
        } else {
          add(a.subject.iri, a.property.property.iri, a.object.iri);
        }
      } else if constexpr (std::is_same_v<T, DataPropertyAssertion>) {
        add(a.subject.iri, a.property.iri, a.value);
      } else if constexpr (std::is_same_v<T, SubObjectPropertyOf>) {
        auto s = ope(a.sub);
        add(s, rdfs("subPropertyOf"), ope(a.sup));
      } else if constexpr (std::is_same_v<T, InverseObjectProperties>) {
        auto s = ope(a.first);
        add(s, owl("inverseOf"), ope(a.second));
      } else if constexpr (std::is_same_v<T, ObjectPropertyDomain> ||
                           std::is_same_v<T, ObjectPropertyRange>) {
        auto s = ope(a.property);
        add(s, rdfs(std::is_same_v<T, ObjectPropertyDomain> ? "domain" : "range"),
            ce(a.cls));
      } else if constexpr (std::is_same_v<T, FunctionalObjectProperty>) {
        add(ope(a.property), rdf("type"), owl("FunctionalProperty"));
      } else if constexpr (std::is_same_v<T, DataPropertyDomain>) {
        add(a.property.iri, rdfs("domain"), ce(a.domain));
      } else if constexpr (std::is_same_v<T, DataPropertyRange>) {
        add(a.property.iri, rdfs("range"), range(a.range));
      } else if constexpr (std::is_same_v<T, AnnotationAssertion>) {
        if (const auto* l = std::get_if<Literal>(&a.value)) {
          add(a.subject, a.property.iri, *l);
        } else {
          add(a.subject, a.property.iri, std::get<IRI>(a.value));
        }
      } else {
        throw Unmappable(ax);
      }
    });
  }

 private:
  template <class T>
  void restriction(const BlankNode& b, const T& n) {
    const auto nonneg = [](std::int64_t v) {
      return Literal(std::to_string(v),
                     make_iri(std::string(vocab::kXsdNs) +
                              "nonNegativeInteger"));
    };
    if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                  std::is_same_v<T, ObjectAllValuesFrom>) {
      add(b, owl("onProperty"), ope(n.property));
      add(b,
          owl(std::is_same_v<T, ObjectSomeValuesFrom> ? "someValuesFrom"
                                                      : "allValuesFrom"),
          ce(n.filler));
    } else if constexpr (std::is_same_v<T, ObjectHasValue>) {
      add(b, owl("onProperty"), ope(n.property));
      add(b, owl("hasValue"), n.individual.iri);
    } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                         std::is_same_v<T, ObjectMaxCardinality> ||
                         std::is_same_v<T, ObjectExactCardinality>) {
      const bool qualified = !n.filler.is_thing();
      std::string pred = std::is_same_v<T, ObjectMinCardinality>   ? "min"
                         : std::is_same_v<T, ObjectMaxCardinality> ? "max"
                                                                   : "";
      pred += qualified ? (pred.empty() ? "qualifiedCardinality"
                                        : "QualifiedCardinality")
                        : (pred.empty() ? "cardinality" : "Cardinality");
      add(b, owl("onProperty"), ope(n.property));
      add(b, owl(pred), nonneg(n.cardinality));
      if (qualified) add(b, owl("onClass"), ce(n.filler));
    } else if constexpr (std::is_same_v<T, DataSomeValuesFrom> ||
                         std::is_same_v<T, DataAllValuesFrom>) {
      add(b, owl("onProperty"), n.property.iri);
      add(b,
          owl(std::is_same_v<T, DataSomeValuesFrom> ? "someValuesFrom"
                                                    : "allValuesFrom"),
          range(n.range));
    } else {
      static_assert(std::is_same_v<T, DataHasValue>);
      add(b, owl("onProperty"), n.property.iri);
      add(b, owl("hasValue"), n.value);
    }
  }

  std::vector<Triple>& out_;
  std::uint64_t& next_blank_;
};

}  // namespace

std::vector<Triple> TripleMapper::map(const Axiom& axiom) {
  std::vector<Triple> out;
  // Map into a scratch counter so a failed mapping consumes no labels.
  std::uint64_t counter = next_blank_;
  Emitter(out, counter).axiom(axiom);
  next_blank_ = counter;
  return out;
}

std::vector<Triple> map_axiom_to_triples(const Axiom& axiom) {
  return TripleMapper().map(axiom);
}

std::vector<Triple> map_ontology_to_triples(const Ontology& onto, bool strict,
                                            std::size_t* skipped) {
  TripleMapper mapper;
  std::vector<Triple> out;
  std::size_t skip_count = 0;
  for (const auto& ax : onto.axioms()) {
    if (ax.kind() == AxiomKind::SWRLRule && !strict) {
      ++skip_count;
      continue;
    }
    auto ts = mapper.map(ax);
    out.insert(out.end(), std::make_move_iterator(ts.begin()),
               std::make_move_iterator(ts.end()));
  }
  if (skipped != nullptr) *skipped = skip_count;
  return out;
}

}  // namespace owlkit
