#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "owlkit/sparql.hpp"

namespace owlkit::sparql {

namespace {

using Binding = std::map<std::string, RdfNode>;
using Solutions = std::vector<Binding>;

// Three-valued filter result: nullopt is a SPARQL evaluation error.
using Truth = std::optional<bool>;

class Evaluator {
 public:
  explicit Evaluator(const std::vector<Triple>& triples) : triples_(triples) {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      by_predicate_[triples_[i].predicate].push_back(i);
    }
  }

  // Seeded evaluation: every solution extends one seed. Equal to joining
  // the group with the seeds because each translated group binds its own
  // variables before filtering on them.
  Solutions group(const Group& g, Solutions seeds) {
    Solutions current = std::move(seeds);
    std::vector<const Element*> filters;
    for (const auto& e : g.elements) {
      if (std::holds_alternative<Filter>(e.value) ||
          std::holds_alternative<NotExists>(e.value)) {
        filters.push_back(&e);
        continue;
      }
      Solutions next;
      for (const auto& s : current) extend(e, s, next);
      current = std::move(next);
      if (current.empty()) return current;
    }
    Solutions kept;
    for (auto& s : current) {
      const bool pass = std::all_of(
          filters.begin(), filters.end(),
          [&](const Element* f) { return passes(*f, s); });
      if (pass) kept.push_back(std::move(s));
    }
    return kept;
  }

 private:
  static std::optional<RdfNode> resolve(const Term& t, const Binding& b) {
    if (const auto* v = std::get_if<Var>(&t)) {
      auto it = b.find(v->name);
      if (it == b.end()) return std::nullopt;
      return it->second;
    }
    if (const auto* i = std::get_if<IRI>(&t)) return RdfNode(*i);
    return RdfNode(std::get<Literal>(t));
  }

  // Binds a pattern position; false on conflict with a bound value.
  static bool unify(const Term& t, const RdfNode& value, Binding& b) {
    if (const auto* v = std::get_if<Var>(&t)) {
      auto [it, inserted] = b.emplace(v->name, value);
      return inserted || it->second == value;
    }
    return *resolve(t, b) == value;
  }

  void match(const TriplePattern& p, const Binding& b, Solutions& out) const {
    const auto pred = resolve(p.predicate, b);
    auto try_triple = [&](const Triple& t) {
      Binding next = b;
      if (unify(p.subject, t.subject, next) &&
          unify(p.predicate, RdfNode(t.predicate), next) &&
          unify(p.object, t.object, next)) {
        out.push_back(std::move(next));
      }
    };
    if (pred) {
      const auto* iri = std::get_if<IRI>(&*pred);
      if (iri == nullptr) return;
      auto it = by_predicate_.find(*iri);
      if (it == by_predicate_.end()) return;
      for (std::size_t i : it->second) try_triple(triples_[i]);
      return;
    }
    for (const auto& t : triples_) try_triple(t);
  }

  void extend(const Element& e, const Binding& b, Solutions& out) {
    if (const auto* t = std::get_if<TriplePattern>(&e.value)) {
      match(*t, b, out);
    } else if (const auto* u = std::get_if<Union>(&e.value)) {
      for (const auto& branch : u->branches) {
        for (auto& s : group(branch, {b})) out.push_back(std::move(s));
      }
    } else if (const auto* v = std::get_if<Values>(&e.value)) {
      for (const auto& value : v->values) {
        Binding next = b;
        if (unify(Var{v->var}, RdfNode(value), next)) {
          out.push_back(std::move(next));
        }
      }
    } else {
      const auto& c = std::get<CountSelect>(e.value);
      for (const auto& row : count_rows(c)) {
        Binding next = b;
        bool ok = true;
        for (const auto& [name, value] : row) ok = ok && unify(Var{name}, value, next);
        if (ok) out.push_back(std::move(next));
      }
    }
  }

  // Projected rows of a sub-select; independent of the outer binding.
  const Solutions& count_rows(const CountSelect& c) {
    auto cached = count_cache_.find(&c);
    if (cached != count_cache_.end()) return cached->second;
    std::map<RdfNode, std::vector<RdfNode>> groups;
    for (const auto& s : group(c.where, {Binding{}})) {
      auto subject = s.find(c.subject);
      auto counted = s.find(c.counted);
      if (subject == s.end()) {
        throw UnsupportedConstruct("GROUP BY variable ?" + c.subject +
                                   " is unbound");
      }
      auto& members = groups[subject->second];
      if (counted != s.end() &&
          std::find(members.begin(), members.end(), counted->second) ==
              members.end()) {
        members.push_back(counted->second);
      }
    }
    Solutions rows;
    for (const auto& [subject, members] : groups) {
      const auto k = static_cast<std::int64_t>(members.size());
      if (compare(k, c.op, c.n)) {
        rows.push_back({{c.subject, subject},
                        {c.count, RdfNode(Literal::integer(k))}});
      }
    }
    return count_cache_.emplace(&c, std::move(rows)).first->second;
  }

  static bool compare(std::int64_t a, CompareOp op, std::int64_t b) {
    switch (op) {
      case CompareOp::Lt: return a < b;
      case CompareOp::Le: return a <= b;
      case CompareOp::Eq: return a == b;
      case CompareOp::Ge: return a >= b;
      case CompareOp::Gt: return a > b;
    }
    return false;
  }

  bool passes(const Element& e, const Binding& b) {
    if (const auto* ne = std::get_if<NotExists>(&e.value)) {
      return group(ne->body, {b}).empty();
    }
    return eval(std::get<Filter>(e.value).expr, b) == Truth(true);
  }

  static Truth eval(const Expr& e, const Binding& b) {
    using K = Expr::Kind;
    const Literal* value = nullptr;
    if (!e.var.empty()) {
      auto it = b.find(e.var);
      if (it == b.end()) return std::nullopt;
      value = std::get_if<Literal>(&it->second);
      if (e.kind == K::IsLiteral) return value != nullptr;
      if (value == nullptr && e.kind != K::SameTerm) return std::nullopt;
      if (e.kind == K::SameTerm) {
        return value != nullptr && *value == std::get<Literal>(e.operand);
      }
    }
    switch (e.kind) {
      case K::Const: return e.value;
      case K::IsNumeric: return value->is_numeric();
      case K::DatatypeIs: return value->datatype() == std::get<IRI>(e.operand);
      case K::Compare: {
        const auto& rhs = std::get<Literal>(e.operand);
        if (!value->is_numeric() || !rhs.is_numeric()) return std::nullopt;
        const auto c = compare_numeric(*value, rhs);
        if (c == std::partial_ordering::unordered) return false;
        switch (e.op) {
          case CompareOp::Lt: return c < 0;
          case CompareOp::Le: return c <= 0;
          case CompareOp::Eq: return c == 0;
          case CompareOp::Ge: return c >= 0;
          case CompareOp::Gt: return c > 0;
        }
        return false;
      }
      case K::And: {
        bool error = false;
        for (const auto& c : e.children) {
          const Truth t = eval(c, b);
          if (t == Truth(false)) return false;
          if (!t) error = true;
        }
        return error ? Truth() : Truth(true);
      }
      case K::Or: {
        bool error = false;
        for (const auto& c : e.children) {
          const Truth t = eval(c, b);
          if (t == Truth(true)) return true;
          if (!t) error = true;
        }
        return error ? Truth() : Truth(false);
      }
      case K::Not: {
        const Truth t = eval(e.children.front(), b);
        if (!t) return t;
        return !*t;
      }
      default: return std::nullopt;
    }
  }

  const std::vector<Triple>& triples_;
  std::unordered_map<IRI, std::vector<std::size_t>> by_predicate_;
  std::unordered_map<const CountSelect*, Solutions> count_cache_;
};

}  // namespace

std::set<IRI> eval_query(const SparqlQuery& query,
                         const std::vector<Triple>& triples) {
  Evaluator ev(triples);
  std::set<IRI> out;
  for (const auto& s : ev.group(query.where, {Binding{}})) {
    auto it = s.find(query.variable);
    if (it == s.end()) continue;
    if (const auto* iri = std::get_if<IRI>(&it->second)) out.insert(*iri);
  }
  return out;
}

}  // namespace owlkit::sparql
