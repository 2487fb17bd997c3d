#include "exactkit/relations.hpp"

#include <algorithm>

#include "exactkit/error.hpp"

namespace exactkit {

Relation::Relation(FinSet source, FinSet target, std::vector<ElementPair> pairs)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    if (!source_.contains(a) || !target_.contains(b)) {
      fail(ErrorCode::DomainMismatch,
           "pair (" + to_string(a) + ", " + to_string(b) + ") lies outside the declared sets");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation::Relation(FinSet carrier, std::vector<ElementPair> pairs)
    : Relation(carrier, carrier, std::move(pairs)) {}

bool Relation::related(const Element& a, const Element& b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), ElementPair{a, b});
}

FinSet Relation::domain() const {
  std::vector<Element> out;
  for (const auto& p : pairs_) out.push_back(p.first);
  return FinSet(std::move(out));
}

FinSet Relation::range() const {
  std::vector<Element> out;
  for (const auto& p : pairs_) out.push_back(p.second);
  return FinSet(std::move(out));
}

std::string Relation::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + to_string(pairs_[i].first) + ", " + to_string(pairs_[i].second) + ")";
  }
  return out + "}";
}

Relation rel_inverse(const Relation& rho) {
  std::vector<ElementPair> flipped;
  flipped.reserve(rho.pairs().size());
  for (const auto& [a, b] : rho.pairs()) flipped.emplace_back(b, a);
  return Relation(rho.target(), rho.source(), std::move(flipped));
}

Relation rel_compose(const Relation& rho, const Relation& r) {
  if (rho.target() != r.source()) {
    fail(ErrorCode::DomainMismatch, "composition needs target(rho) = source(r)");
  }
  std::vector<ElementPair> out;
  for (const auto& [a, x] : rho.pairs()) {
    for (const auto& [y, c] : r.pairs()) {
      if (x == y) out.emplace_back(a, c);
    }
  }
  return Relation(rho.source(), r.target(), std::move(out));
}

FinSet rel_section(const Relation& rho, const Element& a) {
  std::vector<Element> out;
  for (const auto& [x, b] : rho.pairs()) {
    if (x == a) out.push_back(b);
  }
  return FinSet(std::move(out));
}

std::vector<FinSet> factor_set(const Relation& rho) {
  std::vector<FinSet> out;
  for (const Element& a : rho.source()) {
    FinSet s = rel_section(rho, a);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

RelationProperties rel_properties(const Relation& rho) {
  if (!rho.is_endorelation()) fail(ErrorCode::NotEndorelation, "relation is not on a single set");
  const FinSet& s = rho.source();
  RelationProperties p;
  p.reflexive = std::all_of(s.begin(), s.end(), [&](const Element& a) { return rho.related(a, a); });
  p.antireflexive =
      std::none_of(s.begin(), s.end(), [&](const Element& a) { return rho.related(a, a); });
  p.symmetric = true;
  p.antisymmetric = true;
  for (const auto& [a, b] : rho.pairs()) {
    if (!rho.related(b, a)) p.symmetric = false;
    if (a != b && rho.related(b, a)) p.antisymmetric = false;
  }
  p.transitive = true;
  for (const auto& [a, b] : rho.pairs()) {
    for (const auto& [c, d] : rho.pairs()) {
      if (b == c && !rho.related(a, d)) p.transitive = false;
    }
  }
  return p;
}

EquivalenceReport equivalence_analysis(const Relation& rho) {
  const RelationProperties p = rel_properties(rho);
  EquivalenceReport report;
  report.is_equivalence = p.reflexive && p.symmetric && p.transitive;
  if (!report.is_equivalence) return report;
  for (const Element& a : rho.source()) {
    FinSet cls = rel_section(rho, a);
    if (std::find(report.classes.begin(), report.classes.end(), cls) == report.classes.end()) {
      report.classes.push_back(std::move(cls));
    }
  }
  return report;
}

bool is_partial_order(const Relation& rho) {
  const RelationProperties p = rel_properties(rho);
  return p.reflexive && p.antisymmetric && p.transitive;
}

FunctionReport fn_analysis(const Relation& f) {
  FunctionReport r;
  r.is_function = std::all_of(f.source().begin(), f.source().end(),
                              [&](const Element& x) { return rel_section(f, x).size() == 1; });
  if (!r.is_function) return r;
  r.injective = f.range().size() == f.source().size();
  r.surjective = f.range() == f.target();
  r.bijective = r.injective && r.surjective;
  return r;
}

Relation fn_compose(const Relation& f, const Relation& g) { return rel_compose(f, g); }

Relation fn_inverse(const Relation& f) {
  if (!fn_analysis(f).bijective) fail(ErrorCode::NotBijective, "only bijections have inverses");
  return rel_inverse(f);
}

Element fn_apply(const Relation& f, const Element& x) {
  FinSet image = rel_section(f, x);
  if (image.size() != 1) fail(ErrorCode::DomainMismatch, "no unique image for " + to_string(x));
  return image[0];
}

}  // namespace exactkit
