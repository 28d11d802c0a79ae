#include <algorithm>
#include <deque>

#include "owlkit/reasoner.hpp"

namespace owlkit {

UnknownIndividual::UnknownIndividual(const Individual& ind)
    : Error("unknown individual " + ind.iri.str()) {}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Reflexive-transitive closure of a directed graph given as adjacency lists.
std::vector<boost::dynamic_bitset<>> reachability(
    const std::vector<std::vector<std::size_t>>& edges) {
  const std::size_t n = edges.size();
  std::vector<boost::dynamic_bitset<>> reach(n, boost::dynamic_bitset<>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    reach[s].set(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : edges[u]) {
        if (!reach[s].test(v)) {
          reach[s].set(v);
          queue.push_back(v);
        }
      }
    }
  }
  return reach;
}

}  // namespace

Snapshot::Snapshot(const Ontology& onto, ReasonerConfig config)
    : config_(config), universe_(onto.individuals_in_signature()) {
  const std::size_t n = universe_.size();
  for (std::size_t i = 0; i < n; ++i) {
    index_.emplace(universe_[i], static_cast<Index>(i));
  }

  // Class hierarchy.
  auto add_class = [&](const OWLClass& c) {
    auto [it, inserted] = class_index_.emplace(c, classes_.size());
    if (inserted) classes_.push_back(c);
    return it->second;
  };
  thing_id_ = add_class(owl_thing());
  nothing_id_ = add_class(owl_nothing());
  for (const auto& c : onto.classes_in_signature()) add_class(c);

  std::vector<std::vector<std::size_t>> class_edges(classes_.size());
  auto link = [&](const ClassExpression& a, const ClassExpression& b) {
    const auto* ca = a.get_if<OWLClass>();
    const auto* cb = b.get_if<OWLClass>();
    if (ca && cb) class_edges[class_id(*ca)].push_back(class_id(*cb));
  };
  for (const auto& ax : onto.axioms_of_kind(AxiomKind::SubClassOf)) {
    const auto& s = *ax.get_if<SubClassOf>();
    link(s.sub, s.sup);
  }
  for (const auto& ax : onto.axioms_of_kind(AxiomKind::EquivalentClasses)) {
    const auto& members = ax.get_if<EquivalentClasses>()->members;
    for (const auto& a : members) {
      for (const auto& b : members) link(a, b);
    }
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    class_edges[c].push_back(thing_id_);
    class_edges[nothing_id_].push_back(c);
  }
  up_ = reachability(class_edges);

  asserted_.assign(classes_.size(), Bits(n));
  for (const auto& ax : onto.axioms_of_kind(AxiomKind::ClassAssertion)) {
    const auto& a = *ax.get_if<ClassAssertion>();
    if (const auto* c = a.cls.get_if<OWLClass>()) {
      asserted_[class_id(*c)].set(index_.at(a.individual));
    }
  }

  // Property hierarchy over property expressions; p and p⁻ are both nodes.
  std::vector<ObjectPropertyExpression> props;
  std::unordered_map<ObjectPropertyExpression, std::size_t> prop_index;
  auto add_prop = [&](const ObjectPropertyExpression& p) {
    for (const auto& q : {p, p.inverted()}) {
      if (prop_index.emplace(q, props.size()).second) props.push_back(q);
    }
    return prop_index.at(p);
  };
  for (const auto& p : onto.object_properties_in_signature()) add_prop(p);
  std::vector<std::vector<std::size_t>> prop_edges(props.size());
  // r ⊑ s entails r⁻ ⊑ s⁻.
  auto sub_prop = [&](const ObjectPropertyExpression& r,
                      const ObjectPropertyExpression& s) {
    prop_edges[add_prop(r)].push_back(add_prop(s));
    prop_edges[add_prop(r.inverted())].push_back(add_prop(s.inverted()));
  };
  if (config_.infer_hierarchy) {
    for (const auto& ax : onto.axioms_of_kind(AxiomKind::SubObjectPropertyOf)) {
      const auto& s = *ax.get_if<SubObjectPropertyOf>();
      sub_prop(s.sub, s.sup);
    }
    for (const auto& ax :
         onto.axioms_of_kind(AxiomKind::InverseObjectProperties)) {
      const auto& inv = *ax.get_if<InverseObjectProperties>();
      sub_prop(inv.first, inv.second.inverted());
      sub_prop(inv.second.inverted(), inv.first);
    }
  }
  const auto prop_up = reachability(prop_edges);

  for (const auto& p : props) {
    succ_.emplace(p, std::vector<std::vector<Index>>(n));
  }
  for (const auto& ax :
       onto.axioms_of_kind(AxiomKind::ObjectPropertyAssertion)) {
    const auto& a = *ax.get_if<ObjectPropertyAssertion>();
    const Index x = index_.at(a.subject);
    const Index y = index_.at(a.object);
    const auto& reach = prop_up[prop_index.at(a.property)];
    for (std::size_t s = reach.find_first(); s != Bits::npos;
         s = reach.find_next(s)) {
      succ_.at(props[s])[x].push_back(y);
      succ_.at(props[s].inverted())[y].push_back(x);
    }
  }
  for (auto& [p, lists] : succ_) {
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  }

  for (const auto& ax : onto.axioms_of_kind(AxiomKind::DataPropertyAssertion)) {
    const auto& a = *ax.get_if<DataPropertyAssertion>();
    auto [it, _] =
        data_.try_emplace(a.property, std::vector<std::vector<Literal>>(n));
    auto& values = it->second[index_.at(a.subject)];
    if (std::find(values.begin(), values.end(), a.value) == values.end()) {
      values.push_back(a.value);
    }
  }

  for (const auto& ax : onto.axioms_of_kind(AxiomKind::DisjointClasses)) {
    disjoint_axioms_.push_back(*ax.get_if<DisjointClasses>());
  }
}

std::optional<std::size_t> Snapshot::index_of(const Individual& ind) const {
  auto it = index_.find(ind);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Snapshot::Index Snapshot::require(const Individual& ind) const {
  auto it = index_.find(ind);
  if (it == index_.end()) throw UnknownIndividual(ind);
  return it->second;
}

std::size_t Snapshot::class_id(const OWLClass& c) const {
  auto it = class_index_.find(c);
  return it == class_index_.end() ? kNone : it->second;
}

const std::vector<Snapshot::Index>& Snapshot::successors(
    Index x, const ObjectPropertyExpression& p) const {
  static const std::vector<Index> kEmpty;
  auto it = succ_.find(p);
  return it == succ_.end() ? kEmpty : it->second[x];
}

Snapshot::Bits Snapshot::named_bits(const OWLClass& c) const {
  const std::size_t n = universe_.size();
  if (is_thing(c)) return Bits(n).set();
  if (is_nothing(c)) return Bits(n);
  const std::size_t id = class_id(c);
  if (id == kNone) return Bits(n);
  if (!config_.infer_hierarchy) return asserted_[id];
  Bits out(n);
  for (std::size_t d = 0; d < classes_.size(); ++d) {
    if (up_[d].test(id)) out |= asserted_[d];
  }
  return out;
}

Snapshot::Bits Snapshot::eval(const ClassExpression& ce) const {
  const std::size_t n = universe_.size();
  const auto count_successors = [&](const ObjectPropertyExpression& p,
                                    const Bits& filler, Index x) {
    std::int64_t k = 0;
    for (Index y : successors(x, p)) k += filler.test(y) ? 1 : 0;
    return k;
  };
  const auto each = [&](auto&& keep) {
    Bits out(n);
    for (Index x = 0; x < n; ++x) {
      if (keep(x)) out.set(x);
    }
    return out;
  };

  return ce.visit([&](const auto& v) -> Bits {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, OWLClass>) {
      return named_bits(v);
    } else if constexpr (std::is_same_v<T, ObjectIntersectionOf>) {
      Bits out = eval(v.operands.front());
      for (std::size_t i = 1; i < v.operands.size(); ++i) {
        out &= eval(v.operands[i]);
      }
      return out;
    } else if constexpr (std::is_same_v<T, ObjectUnionOf>) {
      Bits out = eval(v.operands.front());
      for (std::size_t i = 1; i < v.operands.size(); ++i) {
        out |= eval(v.operands[i]);
      }
      return out;
    } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
      return ~eval(v.operand);
    } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom>) {
      const Bits f = eval(v.filler);
      return each([&](Index x) { return count_successors(v.property, f, x) > 0; });
    } else if constexpr (std::is_same_v<T, ObjectAllValuesFrom>) {
      const Bits f = eval(v.filler);
      return each([&](Index x) {
        const auto& s = successors(x, v.property);
        if (s.empty()) return config_.universal_vacuous;
        return std::all_of(s.begin(), s.end(),
                           [&](Index y) { return f.test(y); });
      });
    } else if constexpr (std::is_same_v<T, ObjectHasValue>) {
      const auto target = index_of(v.individual);
      if (!target) return Bits(n);
      return each([&](Index x) {
        const auto& s = successors(x, v.property);
        return std::binary_search(s.begin(), s.end(),
                                  static_cast<Index>(*target));
      });
    } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
      Bits out(n);
      for (const auto& ind : v.individuals) {
        if (auto i = index_of(ind)) out.set(*i);
      }
      return out;
    } else if constexpr (std::is_same_v<T, ObjectMinCardinality>) {
      const Bits f = eval(v.filler);
      return each([&](Index x) {
        return count_successors(v.property, f, x) >= v.cardinality;
      });
    } else if constexpr (std::is_same_v<T, ObjectMaxCardinality>) {
      const Bits f = eval(v.filler);
      return each([&](Index x) {
        return count_successors(v.property, f, x) <= v.cardinality;
      });
    } else if constexpr (std::is_same_v<T, ObjectExactCardinality>) {
      const Bits f = eval(v.filler);
      return each([&](Index x) {
        return count_successors(v.property, f, x) == v.cardinality;
      });
    } else {
      auto it = data_.find(v.property);
      const auto values_of = [&](Index x) -> const std::vector<Literal>* {
        return it == data_.end() ? nullptr : &it->second[x];
      };
      if constexpr (std::is_same_v<T, DataSomeValuesFrom>) {
        return each([&](Index x) {
          const auto* vals = values_of(x);
          return vals && std::any_of(vals->begin(), vals->end(),
                                     [&](const Literal& l) {
                                       return v.range.contains(l);
                                     });
        });
      } else if constexpr (std::is_same_v<T, DataAllValuesFrom>) {
        return each([&](Index x) {
          const auto* vals = values_of(x);
          if (!vals || vals->empty()) return config_.universal_vacuous;
          return std::all_of(vals->begin(), vals->end(), [&](const Literal& l) {
            return v.range.contains(l);
          });
        });
      } else {
        static_assert(std::is_same_v<T, DataHasValue>);
        return each([&](Index x) {
          const auto* vals = values_of(x);
          return vals &&
                 std::find(vals->begin(), vals->end(), v.value) != vals->end();
        });
      }
    }
  });
}

Snapshot::Bits Snapshot::instance_bits(const ClassExpression& ce) const {
  return eval(ce);
}

std::vector<Individual> Snapshot::instances(const ClassExpression& ce) const {
  const Bits bits = eval(ce);
  std::vector<Individual> out;
  for (std::size_t i = bits.find_first(); i != Bits::npos;
       i = bits.find_next(i)) {
    out.push_back(universe_[i]);
  }
  return out;
}

std::vector<OWLClass> Snapshot::sorted_classes(
    const std::vector<std::size_t>& ids) const {
  std::vector<OWLClass> out;
  out.reserve(ids.size());
  for (std::size_t id : ids) out.push_back(classes_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OWLClass> Snapshot::types(const Individual& ind,
                                      bool direct) const {
  const Index x = require(ind);
  std::vector<std::size_t> held;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c != nothing_id_ && named_bits(classes_[c]).test(x)) held.push_back(c);
  }
  if (!direct) return sorted_classes(held);
  std::vector<std::size_t> minimal;
  for (std::size_t c : held) {
    const bool covered = std::any_of(held.begin(), held.end(), [&](auto d) {
      return up_[d].test(c) && !up_[c].test(d);
    });
    if (!covered) minimal.push_back(c);
  }
  return sorted_classes(minimal);
}

bool Snapshot::subsumed_by(const OWLClass& sub, const OWLClass& sup) const {
  if (sub == sup || is_thing(sup) || is_nothing(sub)) return true;
  const std::size_t a = class_id(sub);
  const std::size_t b = class_id(sup);
  return a != kNone && b != kNone && up_[a].test(b);
}

std::vector<OWLClass> Snapshot::sub_classes(const OWLClass& c,
                                            bool direct) const {
  const std::size_t id = class_id(c);
  if (id == kNone) return {};
  const auto strict_below = [&](std::size_t a, std::size_t b) {
    return up_[a].test(b) && !up_[b].test(a);
  };
  std::vector<std::size_t> below;
  for (std::size_t d = 0; d < classes_.size(); ++d) {
    if (d != nothing_id_ && strict_below(d, id)) below.push_back(d);
  }
  if (!direct) return sorted_classes(below);
  std::vector<std::size_t> covers;
  for (std::size_t d : below) {
    const bool between = std::any_of(below.begin(), below.end(), [&](auto e) {
      return strict_below(d, e);
    });
    if (!between) covers.push_back(d);
  }
  return sorted_classes(covers);
}

std::vector<OWLClass> Snapshot::super_classes(const OWLClass& c,
                                              bool direct) const {
  const std::size_t id = class_id(c);
  if (id == kNone) return {owl_thing()};
  const auto strict_below = [&](std::size_t a, std::size_t b) {
    return up_[a].test(b) && !up_[b].test(a);
  };
  std::vector<std::size_t> above;
  for (std::size_t d = 0; d < classes_.size(); ++d) {
    if (d != nothing_id_ && strict_below(id, d)) above.push_back(d);
  }
  if (!direct) return sorted_classes(above);
  std::vector<std::size_t> covers;
  for (std::size_t d : above) {
    const bool between = std::any_of(above.begin(), above.end(), [&](auto e) {
      return strict_below(e, d);
    });
    if (!between) covers.push_back(d);
  }
  return sorted_classes(covers);
}

std::vector<OWLClass> Snapshot::equivalent_classes(const OWLClass& c) const {
  const std::size_t id = class_id(c);
  if (id == kNone) return {};
  std::vector<std::size_t> eq;
  for (std::size_t d = 0; d < classes_.size(); ++d) {
    if (d != id && d != nothing_id_ && up_[id].test(d) && up_[d].test(id)) {
      eq.push_back(d);
    }
  }
  return sorted_classes(eq);
}

std::vector<Individual> Snapshot::object_property_values(
    const Individual& ind, const ObjectPropertyExpression& p) const {
  const Index x = require(ind);
  std::vector<Individual> out;
  for (Index y : successors(x, p)) out.push_back(universe_[y]);
  return out;
}

std::vector<Literal> Snapshot::data_property_values(
    const Individual& ind, const DataProperty& p) const {
  const Index x = require(ind);
  auto it = data_.find(p);
  if (it == data_.end()) return {};
  return it->second[x];
}

std::vector<DisjointnessViolation> Snapshot::disjointness_violations() const {
  std::vector<DisjointnessViolation> out;
  for (const auto& ax : disjoint_axioms_) {
    std::vector<Bits> sets;
    for (const auto& m : ax.members) sets.push_back(eval(m));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const Bits both = sets[i] & sets[j];
        for (std::size_t x = both.find_first(); x != Bits::npos;
             x = both.find_next(x)) {
          out.push_back({universe_[x], ax.members[i], ax.members[j]});
        }
      }
    }
  }
  return out;
}

}  // namespace owlkit
