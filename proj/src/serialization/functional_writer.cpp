#include <ostream>

#include "owlkit/functional.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit {

namespace {

class Writer {
 public:
  explicit Writer(const PrefixMap& prefixes) : prefixes_(prefixes) {}

  std::string take() { return std::move(out_); }

  void iri(const IRI& i) {
    if (auto ab = prefixes_.abbreviate(i)) {
      out_ += *ab;
    } else {
      out_ += '<';
      out_ += i.str();
      out_ += '>';
    }
  }

  template <EntityKind K>
  void entity(const NamedEntity<K>& e) {
    iri(e.iri);
  }

  void literal(const Literal& l) {
    out_ += '"';
    for (char c : l.lexical()) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
    if (l.datatype().str() != vocab::kXsdString) {
      out_ += "^^";
      iri(l.datatype());
    }
  }

  void ope(const ObjectPropertyExpression& p) {
    if (p.inverse) {
      out_ += "ObjectInverseOf(";
      entity(p.property);
      out_ += ')';
    } else {
      entity(p.property);
    }
  }

  void range(const DataRange& dr) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, Datatype>) {
            entity(r);
          } else if constexpr (std::is_same_v<T, DatatypeRestriction>) {
            out_ += "DatatypeRestriction(";
            entity(r.base);
            for (const auto& f : r.facets) {
              out_ += ' ';
              iri(facet_iri(f.facet));
              out_ += ' ';
              literal(f.value);
            }
            out_ += ')';
          } else {
            out_ += "DataOneOf(";
            sep_list(r.values, [&](const Literal& l) { literal(l); });
            out_ += ')';
          }
        },
        dr.variant());
  }

  void ce(const ClassExpression& c) {
    c.visit([&](const auto& n) {
      using T = std::decay_t<decltype(n)>;
      if constexpr (std::is_same_v<T, OWLClass>) {
        entity(n);
        return;
      } else {
        out_ += to_string(T::kKind);
        out_ += '(';
        if constexpr (std::is_same_v<T, ObjectIntersectionOf> ||
                      std::is_same_v<T, ObjectUnionOf>) {
          sep_list(n.operands, [&](const ClassExpression& op) { ce(op); });
        } else if constexpr (std::is_same_v<T, ObjectComplementOf>) {
          ce(n.operand);
        } else if constexpr (std::is_same_v<T, ObjectSomeValuesFrom> ||
                             std::is_same_v<T, ObjectAllValuesFrom>) {
          ope(n.property);
          out_ += ' ';
          ce(n.filler);
        } else if constexpr (std::is_same_v<T, ObjectHasValue>) {
          ope(n.property);
          out_ += ' ';
          entity(n.individual);
        } else if constexpr (std::is_same_v<T, ObjectOneOf>) {
          sep_list(n.individuals, [&](const Individual& i) { entity(i); });
        } else if constexpr (std::is_same_v<T, ObjectMinCardinality> ||
                             std::is_same_v<T, ObjectMaxCardinality> ||
                             std::is_same_v<T, ObjectExactCardinality>) {
          out_ += std::to_string(n.cardinality);
          out_ += ' ';
          ope(n.property);
          out_ += ' ';
          ce(n.filler);
        } else if constexpr (std::is_same_v<T, DataSomeValuesFrom> ||
                             std::is_same_v<T, DataAllValuesFrom>) {
          entity(n.property);
          out_ += ' ';
          range(n.range);
        } else {
          entity(n.property);
          out_ += ' ';
          literal(n.value);
        }
        out_ += ')';
      }
    });
  }

  void individual_arg(const IndividualArgument& a) {
    if (const auto* v = std::get_if<Variable>(&a)) {
      variable(*v);
    } else {
      entity(std::get<Individual>(a));
    }
  }

  void variable(const Variable& v) {
    out_ += "Variable(<urn:swrl:var#";
    out_ += v.name;
    out_ += ">)";
  }

  void atom(const SWRLAtom& a) {
    std::visit(
        [&](const auto& at) {
          using T = std::decay_t<decltype(at)>;
          if constexpr (std::is_same_v<T, ClassAtom>) {
            out_ += "ClassAtom(";
            ce(at.cls);
            out_ += ' ';
            individual_arg(at.arg);
          } else if constexpr (std::is_same_v<T, ObjectPropertyAtom>) {
            out_ += "ObjectPropertyAtom(";
            ope(at.property);
            out_ += ' ';
            individual_arg(at.first);
            out_ += ' ';
            individual_arg(at.second);
          } else {
            out_ += "DataPropertyAtom(";
            entity(at.property);
            out_ += ' ';
            individual_arg(at.subject);
            out_ += ' ';
            if (const auto* v = std::get_if<Variable>(&at.value)) {
              variable(*v);
            } else {
              literal(std::get<Literal>(at.value));
            }
          }
          out_ += ')';
        },
        a);
  }

  void axiom(const Axiom& ax) {
    out_ += to_string(ax.kind());
    out_ += '(';
    ax.visit([&](const auto& a) {
      using T = std::decay_t<decltype(a)>;
      if constexpr (std::is_same_v<T, Declaration>) {
        out_ += to_string(a.entity.kind);
        out_ += '(';
        iri(a.entity.iri);
        out_ += ')';
      } else if constexpr (std::is_same_v<T, SubClassOf>) {
        ce(a.sub);
        out_ += ' ';
        ce(a.sup);
      } else if constexpr (std::is_same_v<T, EquivalentClasses> ||
                           std::is_same_v<T, DisjointClasses>) {
        sep_list(a.members, [&](const ClassExpression& m) { ce(m); });
      } else if constexpr (std::is_same_v<T, ClassAssertion>) {
        ce(a.cls);
        out_ += ' ';
        entity(a.individual);
      } else if constexpr (std::is_same_v<T, ObjectPropertyAssertion>) {
        ope(a.property);
        out_ += ' ';
        entity(a.subject);
        out_ += ' ';
        entity(a.object);
      } else if constexpr (std::is_same_v<T, DataPropertyAssertion>) {
        entity(a.property);
        out_ += ' ';
        entity(a.subject);
        out_ += ' ';
        literal(a.value);
      } else if constexpr (std::is_same_v<T, SubObjectPropertyOf>) {
        ope(a.sub);
        out_ += ' ';
        ope(a.sup);
      } else if constexpr (std::is_same_v<T, InverseObjectProperties>) {
        ope(a.first);
        out_ += ' ';
        ope(a.second);
      } else if constexpr (std::is_same_v<T, ObjectPropertyDomain> ||
                           std::is_same_v<T, ObjectPropertyRange>) {
        ope(a.property);
        out_ += ' ';
        ce(a.cls);
      } else if constexpr (std::is_same_v<T, FunctionalObjectProperty>) {
        ope(a.property);
      } else if constexpr (std::is_same_v<T, DataPropertyDomain>) {
        entity(a.property);
        out_ += ' ';
        ce(a.domain);
      } else if constexpr (std::is_same_v<T, DataPropertyRange>) {
        entity(a.property);
        out_ += ' ';
        range(a.range);
      } else if constexpr (std::is_same_v<T, AnnotationAssertion>) {
        entity(a.property);
        out_ += ' ';
        iri(a.subject);
        out_ += ' ';
        if (const auto* l = std::get_if<Literal>(&a.value)) {
          literal(*l);
        } else {
          iri(std::get<IRI>(a.value));
        }
      } else {
        out_ += "Body(";
        sep_list(a.rule.body(), [&](const SWRLAtom& at) { atom(at); });
        out_ += ") Head(";
        sep_list(a.rule.head(), [&](const SWRLAtom& at) { atom(at); });
        out_ += ')';
      }
    });
    out_ += ')';
  }

 private:
  template <class Seq, class F>
  void sep_list(const Seq& items, F&& f) {
    bool first = true;
    for (const auto& item : items) {
      if (!first) out_ += ' ';
      first = false;
      f(item);
    }
  }

  const PrefixMap& prefixes_;
  std::string out_;
};

}  // namespace

std::string to_functional(const ClassExpression& ce,
                          const PrefixMap& prefixes) {
  Writer w(prefixes);
  w.ce(ce);
  return w.take();
}

std::string to_functional(const DataRange& range, const PrefixMap& prefixes) {
  Writer w(prefixes);
  w.range(range);
  return w.take();
}

std::string to_functional(const Axiom& axiom, const PrefixMap& prefixes) {
  Writer w(prefixes);
  w.axiom(axiom);
  return w.take();
}

std::string to_functional(const Literal& literal, const PrefixMap& prefixes) {
  Writer w(prefixes);
  w.literal(literal);
  return w.take();
}

std::string serialize_functional(const Ontology& onto) {
  std::string out;
  for (const auto& [name, ns] : onto.prefixes().entries()) {
    out += "Prefix(" + name + ":=<" + ns + ">)\n";
  }
  out += "\nOntology(";
  if (onto.iri()) out += "<" + onto.iri()->str() + ">";
  out += '\n';
  for (const auto& imp : onto.imports()) {
    out += "Import(<" + imp.str() + ">)\n";
  }
  for (const auto& ax : onto.axioms()) {
    out += to_functional(ax, onto.prefixes());
    out += '\n';
  }
  out += ")\n";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ClassExpression& ce) {
  return os << to_functional(ce);
}

std::ostream& operator<<(std::ostream& os, const DataRange& dr) {
  return os << to_functional(dr);
}

std::ostream& operator<<(std::ostream& os, const Axiom& axiom) {
  return os << to_functional(axiom);
}

}  // namespace owlkit
