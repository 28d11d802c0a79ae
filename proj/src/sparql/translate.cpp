#include "owlkit/sparql.hpp"
#include "owlkit/vocab.hpp"

namespace owlkit::sparql {

namespace {

const IRI& rdf_type() {
  static const IRI kType{std::string(vocab::kRdfType)};
  return kType;
}

const IRI& named_individual() {
  static const IRI kNamedIndividual{std::string(vocab::kOwlNs) +
                                    "NamedIndividual"};
  return kNamedIndividual;
}

Expr leaf(Expr::Kind kind, const std::string& var) {
  Expr e;
  e.kind = kind;
  e.var = var;
  return e;
}

Expr combine(Expr::Kind kind, std::vector<Expr> children) {
  if (children.size() == 1) return std::move(children.front());
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

Expr negate(Expr inner) {
  Expr e;
  e.kind = Expr::Kind::Not;
  e.children.push_back(std::move(inner));
  return e;
}

CompareOp facet_op(Facet f) {
  switch (f) {
    case Facet::MinInclusive: return CompareOp::Ge;
    case Facet::MinExclusive: return CompareOp::Gt;
    case Facet::MaxInclusive: return CompareOp::Le;
    case Facet::MaxExclusive: return CompareOp::Lt;
  }
  return CompareOp::Eq;
}

// Membership of ?var in a data range; never raises a SPARQL type error.
Expr range_test(const DataRange& range, const std::string& var) {
  if (const auto* d = range.get_if<Datatype>()) {
    if (d->iri.str() == vocab::kRdfsLiteral) {
      return leaf(Expr::Kind::IsLiteral, var);
    }
    Expr e = leaf(Expr::Kind::DatatypeIs, var);
    e.operand = d->iri;
    return e;
  }
  if (const auto* r = range.get_if<DatatypeRestriction>()) {
    std::vector<Expr> parts{leaf(Expr::Kind::IsNumeric, var)};
    for (const auto& f : r->facets) {
      Expr c = leaf(Expr::Kind::Compare, var);
      c.op = facet_op(f.facet);
      c.operand = f.value;
      parts.push_back(std::move(c));
    }
    return combine(Expr::Kind::And, std::move(parts));
  }
  std::vector<Expr> alternatives;
  for (const auto& v : range.get_if<DataOneOf>()->values) {
    Expr s = leaf(Expr::Kind::SameTerm, var);
    s.operand = v;
    alternatives.push_back(std::move(s));
  }
  return combine(Expr::Kind::Or, std::move(alternatives));
}

class Translator {
 public:
  // C(v) appended to g. Every translation binds v inside g.
  void emit(const ClassExpression& ce, const std::string& v, Group& g) {
    ce.visit([&](const auto& x) { emit_alt(x, v, g); });
  }

 private:
  std::string fresh_y() { return "y" + std::to_string(y_++); }

  static void add(Group& g, auto element) {
    g.elements.push_back(Element{std::move(element)});
  }

  void top(const std::string& v, Group& g) {
    add(g, TriplePattern{Var{v}, rdf_type(), named_individual()});
  }

  static void edge(const ObjectPropertyExpression& p, Term from, Term to,
                   Group& g) {
    if (p.inverse) std::swap(from, to);
    add(g, TriplePattern{std::move(from), p.property.iri, std::move(to)});
  }

  void emit_alt(const OWLClass& c, const std::string& v, Group& g) {
    if (is_thing(c)) return top(v, g);
    if (is_nothing(c)) {
      top(v, g);
      Expr f;
      f.kind = Expr::Kind::Const;
      f.value = false;
      return add(g, Filter{std::move(f)});
    }
    add(g, TriplePattern{Var{v}, rdf_type(), c.iri});
  }

  void emit_alt(const ObjectIntersectionOf& n, const std::string& v, Group& g) {
    for (const auto& op : n.operands) emit(op, v, g);
  }

  void emit_alt(const ObjectUnionOf& n, const std::string& v, Group& g) {
    Union u;
    for (const auto& op : n.operands) {
      Group branch;
      emit(op, v, branch);
      u.branches.push_back(std::move(branch));
    }
    add(g, std::move(u));
  }

  void emit_alt(const ObjectComplementOf& n, const std::string& v, Group& g) {
    top(v, g);
    NotExists ne;
    emit(n.operand, v, ne.body);
    add(g, std::move(ne));
  }

  void emit_alt(const ObjectSomeValuesFrom& q, const std::string& v, Group& g) {
    const std::string y = fresh_y();
    edge(q.property, Var{v}, Var{y}, g);
    emit(q.filler, y, g);
  }

  void emit_alt(const ObjectAllValuesFrom& q, const std::string& v, Group& g) {
    top(v, g);
    NotExists outer;
    const std::string y = fresh_y();
    edge(q.property, Var{v}, Var{y}, outer.body);
    NotExists inner;
    emit(q.filler, y, inner.body);
    add(outer.body, std::move(inner));
    add(g, std::move(outer));
  }

  void emit_alt(const ObjectHasValue& h, const std::string& v, Group& g) {
    edge(h.property, Var{v}, h.individual.iri, g);
  }

  void emit_alt(const ObjectOneOf& o, const std::string& v, Group& g) {
    Values values{v, {}};
    for (const auto& i : o.individuals) values.values.push_back(i.iri);
    add(g, std::move(values));
    top(v, g);
  }

  CountSelect count(const ObjectPropertyExpression& p, const ClassExpression& f,
                    const std::string& v, CompareOp op, std::int64_t n) {
    CountSelect c;
    c.subject = v;
    c.counted = fresh_y();
    c.count = "n" + std::to_string(n_++);
    c.op = op;
    c.n = n;
    edge(p, Var{v}, Var{c.counted}, c.where);
    emit(f, c.counted, c.where);
    return c;
  }

  // Individuals without any p-successor in f.
  Group none(const ObjectPropertyExpression& p, const ClassExpression& f,
             const std::string& v) {
    Group g;
    top(v, g);
    NotExists ne;
    const std::string y = fresh_y();
    edge(p, Var{v}, Var{y}, ne.body);
    emit(f, y, ne.body);
    add(g, std::move(ne));
    return g;
  }

  void emit_alt(const ObjectMinCardinality& c, const std::string& v, Group& g) {
    if (c.cardinality == 0) return top(v, g);
    add(g, count(c.property, c.filler, v, CompareOp::Ge, c.cardinality));
  }

  void emit_alt(const ObjectMaxCardinality& c, const std::string& v, Group& g) {
    Union u;
    Group counted;
    add(counted, count(c.property, c.filler, v, CompareOp::Le, c.cardinality));
    u.branches.push_back(std::move(counted));
    u.branches.push_back(none(c.property, c.filler, v));
    add(g, std::move(u));
  }

  void emit_alt(const ObjectExactCardinality& c, const std::string& v,
                Group& g) {
    if (c.cardinality == 0) {
      for (auto& e : none(c.property, c.filler, v).elements) {
        g.elements.push_back(std::move(e));
      }
      return;
    }
    add(g, count(c.property, c.filler, v, CompareOp::Eq, c.cardinality));
  }

  void emit_alt(const DataSomeValuesFrom& q, const std::string& v, Group& g) {
    const std::string y = fresh_y();
    add(g, TriplePattern{Var{v}, q.property.iri, Var{y}});
    add(g, Filter{range_test(q.range, y)});
  }

  void emit_alt(const DataAllValuesFrom& q, const std::string& v, Group& g) {
    top(v, g);
    NotExists ne;
    const std::string y = fresh_y();
    add(ne.body, TriplePattern{Var{v}, q.property.iri, Var{y}});
    add(ne.body, Filter{negate(range_test(q.range, y))});
    add(g, std::move(ne));
  }

  void emit_alt(const DataHasValue& h, const std::string& v, Group& g) {
    add(g, TriplePattern{Var{v}, h.property.iri, h.value});
  }

  int y_ = 0;
  int n_ = 0;
};

}  // namespace

SparqlQuery to_sparql(const ClassExpression& ce, const PrefixContext& ctx,
                      const std::string& var) {
  if (const auto violations = validate_expression(ce); !violations.empty()) {
    throw UnsupportedForSparql("cannot translate malformed expression: " +
                               violations.front().message);
  }
  SparqlQuery q;
  q.variable = var;
  q.prefixes = ctx.prefixes;
  Translator().emit(ce, var, q.where);
  q.text = render_query(q.prefixes, q.variable, q.where);
  return q;
}

}  // namespace owlkit::sparql
