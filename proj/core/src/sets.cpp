#include "exactkit/sets.hpp"

#include <algorithm>
#include <iterator>

#include "exactkit/error.hpp"

namespace exactkit {

std::string to_string(const Element& e) {
  if (const auto* i = std::get_if<std::int64_t>(&e)) return std::to_string(*i);
  return std::get<std::string>(e);
}

FinSet::FinSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (!elements_.empty()) {
    const std::size_t kind = elements_.front().index();
    for (const Element& e : elements_) {
      if (e.index() != kind) fail(ErrorCode::MixedAtoms, "a set may not mix integers and symbols");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FinSet FinSet::integers(std::int64_t first, std::int64_t last) {
  std::vector<Element> v;
  for (std::int64_t i = first; i <= last; ++i) v.emplace_back(i);
  return FinSet(std::move(v));
}

bool FinSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::string FinSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(elements_[i]);
  }
  return out + "}";
}

FinSet set_op(const FinSet& a, const FinSet& b, SetOp op) {
  std::vector<Element> out;
  auto sink = std::back_inserter(out);
  switch (op) {
    case SetOp::Union: std::set_union(a.begin(), a.end(), b.begin(), b.end(), sink); break;
    case SetOp::Intersect: std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), sink); break;
    case SetOp::Diff: std::set_difference(a.begin(), a.end(), b.begin(), b.end(), sink); break;
    case SetOp::SymDiff:
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), sink);
      break;
  }
  return FinSet(std::move(out));
}

FinSet complement(const FinSet& a, const FinSet& universe) {
  if (!a.is_subset_of(universe)) fail(ErrorCode::NotASubset, a.str() + " is not a subset of " + universe.str());
  return set_op(universe, a, SetOp::Diff);
}

std::vector<FinSet> powerset(const FinSet& a) {
  const std::size_t n = a.size();
  if (n > kMaxPowersetBase) {
    fail(ErrorCode::TooLarge, "power set of " + std::to_string(n) + " elements is too large");
  }
  std::vector<FinSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(a[i]);
    }
    out.emplace_back(std::move(members));
  }
  std::stable_sort(out.begin(), out.end(), [](const FinSet& x, const FinSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::vector<ElementPair> cartesian(const FinSet& a, const FinSet& b) {
  std::vector<ElementPair> out;
  out.reserve(a.size() * b.size());
  for (const Element& x : a) {
    for (const Element& y : b) out.emplace_back(x, y);
  }
  return out;
}

namespace {

void check_regions(const VennCounts& v) {
  const std::array<std::int64_t, 7> regions{v.only_a, v.only_b, v.only_c, v.ab_only,
                                            v.bc_only, v.ac_only, v.abc};
  for (std::int64_t r : regions) {
    if (r < 0) fail(ErrorCode::InconsistentCounts, "counts imply a negative Venn region");
  }
}

}  // namespace

VennCounts three_set_counts(std::int64_t total, std::int64_t a, std::int64_t b, std::int64_t ab,
                            std::int64_t bc, std::int64_t ac, std::int64_t abc) {
  for (std::int64_t x : {total, a, b, ab, bc, ac, abc}) {
    if (x < 0) fail(ErrorCode::InconsistentCounts, "counts must be nonnegative");
  }
  VennCounts v;
  v.total = total;
  v.a = a;
  v.b = b;
  v.abc = abc;
  v.ab_only = ab - abc;
  v.bc_only = bc - abc;
  v.ac_only = ac - abc;
  v.only_a = a - v.ab_only - v.ac_only - abc;
  v.only_b = b - v.ab_only - v.bc_only - abc;
  v.only_c = total - (v.only_a + v.only_b + v.ab_only + v.bc_only + v.ac_only + abc);
  v.c = v.only_c + v.bc_only + v.ac_only + abc;
  check_regions(v);
  return v;
}

VennCounts three_set_union(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t ab,
                           std::int64_t ac, std::int64_t bc, std::int64_t abc) {
  for (std::int64_t x : {a, b, c, ab, ac, bc, abc}) {
    if (x < 0) fail(ErrorCode::InconsistentCounts, "counts must be nonnegative");
  }
  VennCounts v;
  v.a = a;
  v.b = b;
  v.c = c;
  v.abc = abc;
  v.ab_only = ab - abc;
  v.bc_only = bc - abc;
  v.ac_only = ac - abc;
  v.only_a = a - v.ab_only - v.ac_only - abc;
  v.only_b = b - v.ab_only - v.bc_only - abc;
  v.only_c = c - v.ac_only - v.bc_only - abc;
  v.total = a + b + c - ab - ac - bc + abc;
  check_regions(v);
  return v;
}

}  // namespace exactkit
