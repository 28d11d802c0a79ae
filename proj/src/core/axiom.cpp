#include "owlkit/axiom.hpp"

#include <unordered_set>

#include "owlkit/errors.hpp"
#include "owlkit/hash.hpp"

namespace owlkit {

std::string_view to_string(AxiomKind kind) {
  static constexpr std::array<std::string_view, kAxiomKindCount> kNames = {
      "Declaration",
      "SubClassOf",
      "EquivalentClasses",
      "DisjointClasses",
      "ClassAssertion",
      "ObjectPropertyAssertion",
      "DataPropertyAssertion",
      "SubObjectPropertyOf",
      "InverseObjectProperties",
      "ObjectPropertyDomain",
      "ObjectPropertyRange",
      "FunctionalObjectProperty",
      "DataPropertyDomain",
      "DataPropertyRange",
      "AnnotationAssertion",
      "DLSafeRule",
  };
  return kNames[static_cast<std::size_t>(kind)];
}

const std::array<AxiomKind, kAxiomKindCount>& all_axiom_kinds() {
  static const auto kinds = [] {
    std::array<AxiomKind, kAxiomKindCount> out{};
    for (std::size_t i = 0; i < kAxiomKindCount; ++i) {
      out[i] = static_cast<AxiomKind>(i);
    }
    return out;
  }();
  return kinds;
}

template <AxiomKind K>
ClassSetAxiom<K>::ClassSetAxiom(std::vector<ClassExpression> m)
    : members(std::move(m)) {
  if (members.size() < 2) {
    throw ModelError(std::string(to_string(K)) +
                     " needs at least 2 class expressions, got " +
                     std::to_string(members.size()));
  }
}

template struct ClassSetAxiom<AxiomKind::EquivalentClasses>;
template struct ClassSetAxiom<AxiomKind::DisjointClasses>;

namespace {

// Walks every component of an axiom. The same traversal backs hashing and
// signature extraction so the two cannot drift apart.
template <class Sink>
struct Walker {
  Sink& sink;

  void entity(const Entity& e) { sink.entity(e); }
  void iri(const IRI& i) { sink.raw(std::hash<IRI>{}(i)); }
  void literal(const Literal& l) { sink.raw(std::hash<Literal>{}(l)); }
  void number(std::int64_t n) { sink.raw(static_cast<std::size_t>(n)); }

  void ope(const ObjectPropertyExpression& p) {
    entity(p.property);
    sink.raw(p.inverse ? 0x1u : 0x2u);
  }

  void range(const DataRange& dr) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, Datatype>) {
            entity(r);
          } else if constexpr (std::is_same_v<T, DatatypeRestriction>) {
            entity(r.base);
            for (const auto& f : r.facets) {
              sink.raw(static_cast<std::size_t>(f.facet));
              literal(f.value);
            }
          } else {
            sink.raw(0x0e0f);
            for (const auto& v : r.values) literal(v);
          }
        },
        dr.variant());
  }

  void ce(const ClassExpression& c) {
    if (!sink.descend(c)) return;
    c.visit([&](const auto& n) {
      using T = std::decay_t<decltype(n)>;
      if constexpr (std::is_same_v<T, OWLClass>) {
        entity(n);
      } else if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                           std::is_same_v<T, ObjectUnionOf>) {
        for (const auto& op : n.operands) ce(op);
      } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
        ce(n.operand);
      } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                           std::is_same_v<T, ObjectAllValuesFrom>) {
        ope(n.property);
        ce(n.filler);
      } else if constexpr (std::is_same_v<T, ObjectHasValue>) {
        ope(n.property);
        entity(n.individual);
      } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
        for (const auto& i : n.individuals) entity(i);
      } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                           std::is_same_v<T, ObjectMaxCardinality> ||
                           std::is_same_v<T, ObjectExactCardinality>) {
        number(n.cardinality);
        ope(n.property);
        ce(n.filler);
      } else if constexpr (std::is_same_v<T, DataSomeValuesFrom> ||
                           std::is_same_v<T, DataAllValuesFrom>) {
        entity(n.property);
        range(n.range);
      } else {
        entity(n.property);
        literal(n.value);
      }
    });
  }

  void individual_arg(const IndividualArgument& arg) {
    if (const auto* v = std::get_if<Variable>(&arg)) {
      sink.raw(std::hash<std::string>{}(v->name));
    } else {
      entity(std::get<Individual>(arg));
    }
  }

  void atom(const SWRLAtom& a) {
    sink.raw(a.index() + 0x77);
    std::visit(
        [&](const auto& at) {
          using T = std::decay_t<decltype(at)>;
          if constexpr (std::is_same_v<T, ClassAtom>) {
            ce(at.cls);
            individual_arg(at.arg);
          } else if constexpr (std::is_same_v<T, ObjectPropertyAtom>) {
            ope(at.property);
            individual_arg(at.first);
            individual_arg(at.second);
          } else {
            entity(at.property);
            individual_arg(at.subject);
            if (const auto* v = std::get_if<Variable>(&at.value)) {
              sink.raw(std::hash<std::string>{}(v->name));
            } else {
              literal(std::get<Literal>(at.value));
            }
          }
        },
        a);
  }

  void axiom(const AxiomVariant& v) {
    std::visit(
        [&](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, Declaration>) {
            entity(ax.entity);
          } else if constexpr (std::is_same_v<T, SubClassOf>) {
            ce(ax.sub);
            ce(ax.sup);
          } else if constexpr (std::is_same_v<T, EquivalentClasses> ||
                               std::is_same_v<T, DisjointClasses>) {
            for (const auto& m : ax.members) ce(m);
          } else if constexpr (std::is_same_v<T, ClassAssertion>) {
            // Class first, matching functional-syntax argument order.
            ce(ax.cls);
            entity(ax.individual);
          } else if constexpr (std::is_same_v<T, ObjectPropertyAssertion>) {
            ope(ax.property);
            entity(ax.subject);
            entity(ax.object);
          } else if constexpr (std::is_same_v<T, DataPropertyAssertion>) {
            entity(ax.property);
            entity(ax.subject);
            literal(ax.value);
          } else if constexpr (std::is_same_v<T, SubObjectPropertyOf>) {
            ope(ax.sub);
            ope(ax.sup);
          } else if constexpr (std::is_same_v<T, InverseObjectProperties>) {
            ope(ax.first);
            ope(ax.second);
          } else if constexpr (std::is_same_v<T, ObjectPropertyDomain> ||
                               std::is_same_v<T, ObjectPropertyRange>) {
            ope(ax.property);
            ce(ax.cls);
          } else if constexpr (std::is_same_v<T, FunctionalObjectProperty>) {
            ope(ax.property);
          } else if constexpr (std::is_same_v<T, DataPropertyDomain>) {
            entity(ax.property);
            ce(ax.domain);
          } else if constexpr (std::is_same_v<T, DataPropertyRange>) {
            entity(ax.property);
            range(ax.range);
          } else if constexpr (std::is_same_v<T, AnnotationAssertion>) {
            entity(ax.property);
            iri(ax.subject);
            if (const auto* l = std::get_if<Literal>(&ax.value)) {
              literal(*l);
            } else {
              iri(std::get<IRI>(ax.value));
            }
          } else {
            sink.raw(ax.rule.body().size());
            for (const auto& a : ax.rule.body()) atom(a);
            for (const auto& a : ax.rule.head()) atom(a);
          }
        },
        v);
  }
};

struct HashSink {
  std::size_t h;
  void raw(std::size_t v) { h = hash_combine(h, v); }
  void entity(const Entity& e) { h = hash_combine(h, std::hash<Entity>{}(e)); }
  bool descend(const ClassExpression& c) {
    h = hash_combine(h, c.hash());
    return false;
  }
};

struct SignatureSink {
  std::vector<Entity> out;
  std::unordered_set<Entity> seen;
  void raw(std::size_t) {}
  void entity(const Entity& e) {
    if (seen.insert(e).second) out.push_back(e);
  }
  bool descend(const ClassExpression&) { return true; }
};

}  // namespace

std::size_t Axiom::compute_hash(const AxiomVariant& v) {
  HashSink sink{v.index() * 0x51ed27u + 1};
  Walker<HashSink>{sink}.axiom(v);
  return sink.h;
}

bool operator==(const Axiom& a, const Axiom& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return a.node_->value == b.node_->value;
}

std::vector<Entity> signature_of(const ClassExpression& ce) {
  SignatureSink sink;
  Walker<SignatureSink>{sink}.ce(ce);
  return std::move(sink.out);
}

std::vector<Entity> signature_of(const Axiom& axiom) {
  SignatureSink sink;
  Walker<SignatureSink>{sink}.axiom(axiom.variant());
  return std::move(sink.out);
}

}  // namespace owlkit
