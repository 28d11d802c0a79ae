#include <algorithm>
#include <unordered_set>

#include "owlkit/ebr.hpp"

namespace owlkit::ebr {

namespace {

using Mu = std::vector<double>;

class Evaluator {
 public:
  Evaluator(const TripleScorer& scorer, const Universe& u)
      : scorer_(scorer), u_(u) {}

  Mu eval(const ClassExpression& ce) {
    return ce.visit([&](const auto& x) { return eval_alt(x); });
  }

 private:
  std::size_t size() const { return u_.individuals.size(); }
  const std::string& name(std::size_t i) const {
    return u_.individuals[i].iri.str();
  }

  template <class F>
  Mu each(F&& f) const {
    Mu out(size());
    for (std::size_t x = 0; x < size(); ++x) out[x] = f(x);
    return out;
  }

  const std::string& relation(const ObjectPropertyExpression& p) const {
    const std::string& r = p.property.iri.str();
    if (!scorer_.knows_relation(r)) throw UnknownSymbol(r);
    return r;
  }

  double edge(const ObjectPropertyExpression& p, const std::string& r,
              const std::string& x, const std::string& y) const {
    return p.inverse ? scorer_.probability(y, r, x)
                     : scorer_.probability(x, r, y);
  }

  // edges[x][y] = p(x, r, y).
  std::vector<Mu> edges(const ObjectPropertyExpression& p) const {
    const std::string& r = relation(p);
    std::vector<Mu> out(size(), Mu(size()));
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        out[x][y] = edge(p, r, name(x), name(y));
      }
    }
    return out;
  }

  const std::vector<Literal>* values(const DataProperty& p,
                                     std::size_t x) const {
    auto by_prop = u_.data.find(p);
    if (by_prop == u_.data.end()) return nullptr;
    auto it = by_prop->second.find(u_.individuals[x]);
    return it == by_prop->second.end() ? nullptr : &it->second;
  }

  Mu eval_alt(const OWLClass& c) {
    if (is_thing(c)) return Mu(size(), 1.0);
    if (is_nothing(c)) return Mu(size(), 0.0);
    const std::string& iri = c.iri.str();
    if (!scorer_.knows_class(iri)) throw UnknownSymbol(iri);
    const std::string type(kTypeRelation);
    return each([&](std::size_t x) {
      return scorer_.probability(name(x), type, iri);
    });
  }

  Mu eval_alt(const ObjectIntersectionOf& n) {
    Mu out = eval(n.operands.front());
    for (std::size_t i = 1; i < n.operands.size(); ++i) {
      const Mu m = eval(n.operands[i]);
      for (std::size_t x = 0; x < size(); ++x) out[x] = std::min(out[x], m[x]);
    }
    return out;
  }

  Mu eval_alt(const ObjectUnionOf& n) {
    Mu out = eval(n.operands.front());
    for (std::size_t i = 1; i < n.operands.size(); ++i) {
      const Mu m = eval(n.operands[i]);
      for (std::size_t x = 0; x < size(); ++x) out[x] = std::max(out[x], m[x]);
    }
    return out;
  }

  Mu eval_alt(const ObjectComplementOf& n) {
    Mu out = eval(n.operand);
    for (double& v : out) v = 1.0 - v;
    return out;
  }

  Mu eval_alt(const ObjectSomeValuesFrom& q) {
    const auto e = edges(q.property);
    const Mu f = eval(q.filler);
    return each([&](std::size_t x) {
      double best = 0.0;
      for (std::size_t y = 0; y < size(); ++y) {
        best = std::max(best, std::min(e[x][y], f[y]));
      }
      return best;
    });
  }

  Mu eval_alt(const ObjectAllValuesFrom& q) {
    const auto e = edges(q.property);
    const Mu f = eval(q.filler);
    return each([&](std::size_t x) {
      double worst = 1.0;
      for (std::size_t y = 0; y < size(); ++y) {
        worst = std::min(worst, std::max(1.0 - e[x][y], f[y]));
      }
      return worst;
    });
  }

  Mu eval_alt(const ObjectHasValue& h) {
    const std::string& r = relation(h.property);
    return each([&](std::size_t x) {
      return edge(h.property, r, name(x), h.individual.iri.str());
    });
  }

  Mu eval_alt(const ObjectOneOf& o) {
    std::unordered_set<Individual> listed(o.individuals.begin(),
                                          o.individuals.end());
    return each([&](std::size_t x) {
      return listed.contains(u_.individuals[x]) ? 1.0 : 0.0;
    });
  }

  template <class Card, class Holds>
  Mu count(const Card& c, Holds holds) {
    const auto e = edges(c.property);
    const Mu f = eval(c.filler);
    return each([&](std::size_t x) {
      std::int64_t k = 0;
      for (std::size_t y = 0; y < size(); ++y) {
        if (std::min(e[x][y], f[y]) >= 0.5) ++k;
      }
      return holds(k, c.cardinality) ? 1.0 : 0.0;
    });
  }

  Mu eval_alt(const ObjectMinCardinality& c) {
    return count(c, [](std::int64_t k, std::int64_t n) { return k >= n; });
  }
  Mu eval_alt(const ObjectMaxCardinality& c) {
    return count(c, [](std::int64_t k, std::int64_t n) { return k <= n; });
  }
  Mu eval_alt(const ObjectExactCardinality& c) {
    return count(c, [](std::int64_t k, std::int64_t n) { return k == n; });
  }

  Mu eval_alt(const DataSomeValuesFrom& q) {
    return each([&](std::size_t x) {
      const auto* vals = values(q.property, x);
      return vals && std::any_of(vals->begin(), vals->end(),
                                 [&](const Literal& l) {
                                   return q.range.contains(l);
                                 })
                 ? 1.0
                 : 0.0;
    });
  }

  Mu eval_alt(const DataAllValuesFrom& q) {
    return each([&](std::size_t x) {
      const auto* vals = values(q.property, x);
      if (!vals) return 1.0;
      return std::all_of(vals->begin(), vals->end(),
                         [&](const Literal& l) { return q.range.contains(l); })
                 ? 1.0
                 : 0.0;
    });
  }

  Mu eval_alt(const DataHasValue& h) {
    return each([&](std::size_t x) {
      const auto* vals = values(h.property, x);
      return vals && std::find(vals->begin(), vals->end(), h.value) !=
                         vals->end()
                 ? 1.0
                 : 0.0;
    });
  }

  const TripleScorer& scorer_;
  const Universe& u_;
};

}  // namespace

Universe universe_of(const Ontology& onto) {
  Universe u;
  u.individuals = onto.individuals_in_signature();
  for (const auto& ax : onto.axioms_of_kind(AxiomKind::DataPropertyAssertion)) {
    const auto& a = *ax.get_if<DataPropertyAssertion>();
    u.data[a.property][a.subject].push_back(a.value);
  }
  return u;
}

MembershipMap membership(const TripleScorer& scorer, const ClassExpression& ce,
                         const Universe& universe) {
  const Mu mu = Evaluator(scorer, universe).eval(ce);
  MembershipMap out;
  out.reserve(mu.size());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    out.emplace_back(universe.individuals[x], std::clamp(mu[x], 0.0, 1.0));
  }
  return out;
}

std::vector<Individual> retrieve(const TripleScorer& scorer,
                                 const ClassExpression& ce,
                                 const Universe& universe, double gamma) {
  std::vector<Individual> out;
  for (const auto& [ind, mu] : membership(scorer, ce, universe)) {
    if (mu >= gamma) out.push_back(ind);
  }
  return out;
}

}  // namespace owlkit::ebr
