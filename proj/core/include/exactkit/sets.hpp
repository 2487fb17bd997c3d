#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace exactkit {

/// Set member: an integer or a symbol. Integers order before symbols, but a
/// single set never mixes the two.
using Element = std::variant<std::int64_t, std::string>;

std::string to_string(const Element& e);

/// Finite set kept duplicate-free in ascending order.
class FinSet {
 public:
  FinSet() = default;
  /// Sorts and deduplicates. Throws MixedAtoms when integers and symbols mix.
  explicit FinSet(std::vector<Element> elements);
  FinSet(std::initializer_list<Element> elements) : FinSet(std::vector<Element>(elements)) {}

  static FinSet integers(std::int64_t first, std::int64_t last);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Element& e) const;
  bool is_subset_of(const FinSet& other) const;

  const std::vector<Element>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  /// "{a, b, c}" or "{}".
  std::string str() const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& a, const FinSet& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<Element> elements_;
};

enum class SetOp { Union, Intersect, Diff, SymDiff };

FinSet set_op(const FinSet& a, const FinSet& b, SetOp op);
/// Requires a to be a subset of universe, otherwise NotASubset.
FinSet complement(const FinSet& a, const FinSet& universe);

inline constexpr std::size_t kMaxPowersetBase = 20;

/// Subsets ordered by size, then lexicographically. Throws TooLarge above
/// kMaxPowersetBase elements.
std::vector<FinSet> powerset(const FinSet& a);

using ElementPair = std::pair<Element, Element>;

/// Pairs in row-major order of a then b.
std::vector<ElementPair> cartesian(const FinSet& a, const FinSet& b);

/// Seven Venn regions of three sets A, B, C plus every aggregate count.
struct VennCounts {
  std::int64_t only_a = 0;
  std::int64_t only_b = 0;
  std::int64_t only_c = 0;
  std::int64_t ab_only = 0;  // in A and B, not C
  std::int64_t bc_only = 0;
  std::int64_t ac_only = 0;
  std::int64_t abc = 0;
  std::int64_t total = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

/// Recovers |C| from the union size, |A|, |B| and every intersection. The
/// argument order follows the language-course word problem:
/// (total, |A|, |B|, |A∩B|, |B∩C|, |A∩C|, |A∩B∩C|).
/// Throws InconsistentCounts if a derived region is negative.
VennCounts three_set_counts(std::int64_t total, std::int64_t a, std::int64_t b, std::int64_t ab,
                            std::int64_t bc, std::int64_t ac, std::int64_t abc);

/// Inclusion-exclusion for the union when all three set sizes are known.
VennCounts three_set_union(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t ab,
                           std::int64_t ac, std::int64_t bc, std::int64_t abc);

}  // namespace exactkit
