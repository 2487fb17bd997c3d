#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exactkit {

/// Binary operation on a finite carrier given by its Cayley table. Rows and
/// columns follow carrier order; an entry is empty when the product falls
/// outside the carrier.
class Magma {
 public:
  static constexpr std::size_t kMaxCarrier = 64;

  /// Throws TooLarge above kMaxCarrier elements and ShapeMismatch when the
  /// table is not |labels| x |labels|.
  Magma(std::vector<std::string> labels, std::vector<std::optional<std::size_t>> table);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  std::optional<std::size_t> operator()(std::size_t a, std::size_t b) const {
    return table_[a * labels_.size() + b];
  }

  /// Table rendered with a header row, unclosed entries shown as "*".
  std::string str(std::string_view symbol = "o") const;

  friend bool operator==(const Magma&, const Magma&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<std::size_t>> table_;
};

/// Tabulates op over the carrier (kept in the given order). Results are
/// located in the carrier with ==; a miss leaves the entry unclosed.
template <class T, class Op, class Label>
Magma cayley_table(const std::vector<T>& carrier, Op op, Label label) {
  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (const T& x : carrier) labels.push_back(label(x));
  std::vector<std::optional<std::size_t>> table;
  table.reserve(carrier.size() * carrier.size());
  for (const T& a : carrier) {
    for (const T& b : carrier) {
      const T c = op(a, b);
      auto it = std::find(carrier.begin(), carrier.end(), c);
      table.push_back(it == carrier.end() ? std::nullopt
                                          : std::optional<std::size_t>(static_cast<std::size_t>(it - carrier.begin())));
    }
  }
  return Magma(std::move(labels), std::move(table));
}

/// ({0..n-1}, +_n) and ({0..n-1}, *_n) for 1 <= n <= 64.
Magma modular_addition(std::size_t n);
Magma modular_multiplication(std::size_t n);

/// Builds a magma from a carrier and rows of entry labels; entries that name
/// no carrier element are unclosed.
Magma magma_from_labels(const std::vector<std::string>& carrier,
                        const std::vector<std::vector<std::string>>& rows);

enum class StructureClass { NotClosed, Magma, Semigroup, Monoid, Group, AbelianGroup };

std::string_view to_string(StructureClass c);

struct StructureReport {
  bool closed = false;
  bool associative = false;
  bool commutative = false;
  std::optional<std::size_t> neutral;
  bool all_invertible = false;
  /// inverse[a] for each element when all_invertible.
  std::vector<std::size_t> inverses;
  StructureClass structure = StructureClass::NotClosed;
};

StructureReport classify_structure(const Magma& m);

/// True when `mul` distributes over `add` from both sides:
/// a*(b+c) = a*b + a*c and (b+c)*a = b*a + c*a. Throws CarrierMismatch.
bool check_distributive(const Magma& add, const Magma& mul);

}  // namespace exactkit
