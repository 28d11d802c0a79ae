#include "naive_reasoner.hpp"

#include <algorithm>

namespace owlkit::testing {

namespace {

template <class T>
void transitive_fixpoint(std::set<std::pair<T, T>>& rel) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = rel;
    for (const auto& [a, b] : snapshot) {
      for (const auto& [c, d] : snapshot) {
        if (b == c && rel.insert({a, d}).second) changed = true;
      }
    }
  }
}

std::set<std::string> intersect(const std::set<std::string>& a,
                                const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace

NaiveReasoner::NaiveReasoner(const Ontology& onto, ReasonerConfig config)
    : onto_(onto), config_(config) {
  for (const auto& i : onto.individuals_in_signature()) {
    universe_.insert(i.iri.str());
  }

  const std::string thing = owl_thing().iri.str();
  const std::string nothing = owl_nothing().iri.str();
  std::set<std::string> classes{thing, nothing};
  for (const auto& c : onto.classes_in_signature()) classes.insert(c.iri.str());
  for (const auto& c : classes) {
    class_le_.insert({c, c});
    class_le_.insert({c, thing});
    class_le_.insert({nothing, c});
  }
  for (const auto& ax : onto.axioms()) {
    if (const auto* s = ax.get_if<SubClassOf>()) {
      if (s->sub.is_named() && s->sup.is_named()) {
        class_le_.insert({s->sub.get_if<OWLClass>()->iri.str(),
                          s->sup.get_if<OWLClass>()->iri.str()});
      }
    } else if (const auto* e = ax.get_if<EquivalentClasses>()) {
      for (const auto& a : e->members) {
        for (const auto& b : e->members) {
          if (a.is_named() && b.is_named()) {
            class_le_.insert({a.get_if<OWLClass>()->iri.str(),
                              b.get_if<OWLClass>()->iri.str()});
          }
        }
      }
    }
  }
  transitive_fixpoint(class_le_);

  if (config_.infer_hierarchy) {
    auto told = [&](const ObjectPropertyExpression& r,
                    const ObjectPropertyExpression& s) {
      prop_le_.insert({{r.property.iri.str(), r.inverse},
                       {s.property.iri.str(), s.inverse}});
      prop_le_.insert({{r.property.iri.str(), !r.inverse},
                       {s.property.iri.str(), !s.inverse}});
    };
    for (const auto& ax : onto.axioms()) {
      if (const auto* s = ax.get_if<SubObjectPropertyOf>()) {
        told(s->sub, s->sup);
      } else if (const auto* inv = ax.get_if<InverseObjectProperties>()) {
        told(inv->first, inv->second.inverted());
        told(inv->second.inverted(), inv->first);
      }
    }
    transitive_fixpoint(prop_le_);
  }
}

bool NaiveReasoner::class_subsumed(const std::string& sub,
                                   const std::string& sup) const {
  return class_le_.count({sub, sup}) > 0;
}

bool NaiveReasoner::prop_subsumed(const Prop& sub, const Prop& sup) const {
  return sub == sup || prop_le_.count({sub, sup}) > 0;
}

bool NaiveReasoner::edge(const std::string& x,
                         const ObjectPropertyExpression& r,
                         const std::string& y) const {
  const Prop target{r.property.iri.str(), r.inverse};
  for (const auto& ax : onto_.axioms()) {
    const auto* a = ax.get_if<ObjectPropertyAssertion>();
    if (a == nullptr) continue;
    const Prop q{a->property.property.iri.str(), a->property.inverse};
    const Prop q_inv{q.first, !q.second};
    const std::string& s = a->subject.iri.str();
    const std::string& o = a->object.iri.str();
    if (s == x && o == y && prop_subsumed(q, target)) return true;
    if (o == x && s == y && prop_subsumed(q_inv, target)) return true;
  }
  return false;
}

std::set<std::string> NaiveReasoner::named(const std::string& c) const {
  if (c == owl_thing().iri.str()) return universe_;
  if (c == owl_nothing().iri.str()) return {};
  std::set<std::string> out;
  for (const auto& ax : onto_.axioms()) {
    const auto* a = ax.get_if<ClassAssertion>();
    if (a == nullptr || !a->cls.is_named()) continue;
    const std::string& d = a->cls.get_if<OWLClass>()->iri.str();
    const bool ok = config_.infer_hierarchy ? class_subsumed(d, c) : d == c;
    if (ok) out.insert(a->individual.iri.str());
  }
  return out;
}

std::set<Literal> NaiveReasoner::data_values(const std::string& x,
                                             const DataProperty& d) const {
  std::set<Literal> out;
  for (const auto& ax : onto_.axioms()) {
    const auto* a = ax.get_if<DataPropertyAssertion>();
    if (a && a->property == d && a->subject.iri.str() == x) {
      out.insert(a->value);
    }
  }
  return out;
}

std::set<std::string> NaiveReasoner::instances(
    const ClassExpression& ce) const {
  auto filter = [&](auto&& pred) {
    std::set<std::string> out;
    for (const auto& x : universe_) {
      if (pred(x)) out.insert(x);
    }
    return out;
  };
  auto count = [&](const std::string& x, const ObjectPropertyExpression& r,
                   const std::set<std::string>& fill) {
    std::int64_t n = 0;
    for (const auto& y : fill) n += edge(x, r, y) ? 1 : 0;
    return n;
  };
  auto successor_count = [&](const std::string& x,
                             const ObjectPropertyExpression& r) {
    return count(x, r, universe_);
  };

  if (const auto* c = ce.get_if<OWLClass>()) return named(c->iri.str());
  if (const auto* a = ce.get_if<ObjectIntersectionOf>()) {
    std::set<std::string> out = instances(a->operands[0]);
    for (std::size_t i = 1; i < a->operands.size(); ++i) {
      out = intersect(out, instances(a->operands[i]));
    }
    return out;
  }
  if (const auto* o = ce.get_if<ObjectUnionOf>()) {
    std::set<std::string> out;
    for (const auto& op : o->operands) {
      for (const auto& x : instances(op)) out.insert(x);
    }
    return out;
  }
  if (const auto* n = ce.get_if<ObjectComplementOf>()) {
    const auto inner = instances(n->operand);
    return filter([&](const auto& x) { return inner.count(x) == 0; });
  }
  if (const auto* s = ce.get_if<ObjectSomeValuesFrom>()) {
    const auto fill = instances(s->filler);
    return filter([&](const auto& x) { return count(x, s->property, fill) > 0; });
  }
  if (const auto* s = ce.get_if<ObjectAllValuesFrom>()) {
    const auto fill = instances(s->filler);
    return filter([&](const auto& x) {
      if (successor_count(x, s->property) == 0) return config_.universal_vacuous;
      for (const auto& y : universe_) {
        if (edge(x, s->property, y) && fill.count(y) == 0) return false;
      }
      return true;
    });
  }
  if (const auto* h = ce.get_if<ObjectHasValue>()) {
    return filter([&](const auto& x) {
      return universe_.count(h->individual.iri.str()) > 0 &&
             edge(x, h->property, h->individual.iri.str());
    });
  }
  if (const auto* o = ce.get_if<ObjectOneOf>()) {
    std::set<std::string> listed;
    for (const auto& i : o->individuals) listed.insert(i.iri.str());
    return intersect(listed, universe_);
  }
  if (const auto* m = ce.get_if<ObjectMinCardinality>()) {
    const auto fill = instances(m->filler);
    return filter([&](const auto& x) {
      return count(x, m->property, fill) >= m->cardinality;
    });
  }
  if (const auto* m = ce.get_if<ObjectMaxCardinality>()) {
    const auto fill = instances(m->filler);
    return filter([&](const auto& x) {
      return count(x, m->property, fill) <= m->cardinality;
    });
  }
  if (const auto* m = ce.get_if<ObjectExactCardinality>()) {
    const auto fill = instances(m->filler);
    return filter([&](const auto& x) {
      return count(x, m->property, fill) == m->cardinality;
    });
  }
  if (const auto* d = ce.get_if<DataSomeValuesFrom>()) {
    return filter([&](const auto& x) {
      for (const auto& l : data_values(x, d->property)) {
        if (d->range.contains(l)) return true;
      }
      return false;
    });
  }
  if (const auto* d = ce.get_if<DataAllValuesFrom>()) {
    return filter([&](const auto& x) {
      const auto values = data_values(x, d->property);
      if (values.empty()) return config_.universal_vacuous;
      for (const auto& l : values) {
        if (!d->range.contains(l)) return false;
      }
      return true;
    });
  }
  const auto* h = ce.get_if<DataHasValue>();
  return filter([&](const auto& x) {
    return data_values(x, h->property).count(h->value) > 0;
  });
}

ReasonerCase random_reasoner_case(Rng& rng, std::size_t max_individuals) {
  const std::size_t inds =
      static_cast<std::size_t>(pick_int(rng, 1, static_cast<std::int64_t>(
                                                    max_individuals)));
  ReasonerCase out{make_vocabulary("http://example.org/r#",
                                   static_cast<std::size_t>(pick_int(rng, 2, 6)),
                                   static_cast<std::size_t>(pick_int(rng, 1, 3)),
                                   static_cast<std::size_t>(pick_int(rng, 0, 2)),
                                   inds),
                   Ontology()};
  ABoxOptions opts;
  opts.with_tbox = true;
  opts.inverse_assertions = true;
  opts.class_assertions = static_cast<std::size_t>(pick_int(rng, 0, 2 * inds));
  opts.object_assertions = static_cast<std::size_t>(pick_int(rng, 0, 3 * inds));
  opts.data_assertions = static_cast<std::size_t>(pick_int(rng, 0, inds));
  out.onto = random_abox(rng, out.vocab, opts);

  CEOptions small;
  small.max_depth = 2;
  if (coin(rng, 0.2)) {
    out.onto.add_axiom(ClassAssertion{pick(rng, out.vocab.individuals),
                                      coin(rng) ? thing() : nothing()});
  }
  if (coin(rng, 0.2)) {
    out.onto.add_axiom(ClassAssertion{pick(rng, out.vocab.individuals),
                                      random_ce(rng, out.vocab, small)});
  }
  if (coin(rng, 0.1)) {
    out.onto.add_axiom(SubClassOf{thing(), pick(rng, out.vocab.classes)});
  }
  if (coin(rng, 0.2)) {
    out.onto.add_axiom(SubClassOf{random_ce(rng, out.vocab, small),
                                  pick(rng, out.vocab.classes)});
  }
  return out;
}

}  // namespace owlkit::testing
