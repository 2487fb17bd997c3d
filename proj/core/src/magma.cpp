#include "exactkit/magma.hpp"

#include <sstream>

#include "exactkit/error.hpp"

namespace exactkit {

Magma::Magma(std::vector<std::string> labels, std::vector<std::optional<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) fail(ErrorCode::ShapeMismatch, "empty carrier");
  if (n > kMaxCarrier) fail(ErrorCode::TooLarge, "carrier exceeds 64 elements");
  if (table_.size() != n * n) fail(ErrorCode::ShapeMismatch, "table must be |S| x |S|");
  for (const auto& e : table_) {
    if (e && *e >= n) fail(ErrorCode::IndexOutOfRange, "table entry outside carrier");
  }
}

std::optional<std::size_t> Magma::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string Magma::str(std::string_view symbol) const {
  std::size_t width = symbol.size();
  for (const auto& l : labels_) width = std::max(width, l.size());
  auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream os;
  os << pad(std::string(symbol)) << " |";
  for (const auto& l : labels_) os << ' ' << pad(l);
  os << '\n' << std::string(width + 1, '-') << '+' << std::string(labels_.size() * (width + 1), '-') << '\n';
  for (std::size_t a = 0; a < size(); ++a) {
    os << pad(labels_[a]) << " |";
    for (std::size_t b = 0; b < size(); ++b) {
      const auto c = (*this)(a, b);
      os << ' ' << pad(c ? labels_[*c] : "*");
    }
    os << '\n';
  }
  return os.str();
}

namespace {

Magma modular(std::size_t n, bool multiply) {
  if (n == 0 || n > Magma::kMaxCarrier) fail(ErrorCode::OutOfDomain, "modulus must lie in 1..64");
  std::vector<std::size_t> carrier(n);
  for (std::size_t i = 0; i < n; ++i) carrier[i] = i;
  return cayley_table(
      carrier,
      [n, multiply](std::size_t a, std::size_t b) { return multiply ? (a * b) % n : (a + b) % n; },
      [](std::size_t a) { return std::to_string(a); });
}

}  // namespace

Magma modular_addition(std::size_t n) { return modular(n, false); }
Magma modular_multiplication(std::size_t n) { return modular(n, true); }

Magma magma_from_labels(const std::vector<std::string>& carrier,
                        const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = carrier.size();
  if (rows.size() != n) fail(ErrorCode::ShapeMismatch, "expected one row per carrier element");
  std::vector<std::optional<std::size_t>> table;
  for (const auto& row : rows) {
    if (row.size() != n) fail(ErrorCode::ShapeMismatch, "expected |S| entries per row");
    for (const auto& entry : row) {
      auto it = std::find(carrier.begin(), carrier.end(), entry);
      table.push_back(it == carrier.end() ? std::nullopt
                                          : std::optional<std::size_t>(static_cast<std::size_t>(it - carrier.begin())));
    }
  }
  return Magma(carrier, std::move(table));
}

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::NotClosed: return "not closed";
    case StructureClass::Magma: return "groupoid";
    case StructureClass::Semigroup: return "semigroup";
    case StructureClass::Monoid: return "monoid";
    case StructureClass::Group: return "group";
    case StructureClass::AbelianGroup: return "abelian group";
  }
  return "unknown";
}

StructureReport classify_structure(const Magma& m) {
  const std::size_t n = m.size();
  StructureReport r;

  r.closed = true;
  for (std::size_t a = 0; a < n && r.closed; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!m(a, b)) {
        r.closed = false;
        break;
      }
    }
  }

  r.commutative = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (m(a, b) != m(b, a)) r.commutative = false;
    }
  }

  for (std::size_t e = 0; e < n && !r.neutral; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = m(e, a) == a && m(a, e) == a;
    if (ok) r.neutral = e;
  }

  if (!r.closed) {
    r.structure = StructureClass::NotClosed;
    return r;
  }

  r.associative = true;
  for (std::size_t a = 0; a < n && r.associative; ++a) {
    for (std::size_t b = 0; b < n && r.associative; ++b) {
      const std::size_t ab = *m(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (m(ab, c) != m(a, *m(b, c))) {
          r.associative = false;
          break;
        }
      }
    }
  }

  if (r.neutral) {
    const std::size_t e = *r.neutral;
    r.all_invertible = true;
    r.inverses.assign(n, 0);
    for (std::size_t a = 0; a < n && r.all_invertible; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (m(a, b) == e && m(b, a) == e) {
          r.inverses[a] = b;
          found = true;
          break;
        }
      }
      r.all_invertible = found;
    }
    if (!r.all_invertible) r.inverses.clear();
  }

  if (!r.associative) {
    r.structure = StructureClass::Magma;
  } else if (!r.neutral) {
    r.structure = StructureClass::Semigroup;
  } else if (!r.all_invertible) {
    r.structure = StructureClass::Monoid;
  } else {
    r.structure = r.commutative ? StructureClass::AbelianGroup : StructureClass::Group;
  }
  return r;
}

bool check_distributive(const Magma& add, const Magma& mul) {
  if (add.labels() != mul.labels()) fail(ErrorCode::CarrierMismatch, "operations act on different carriers");
  const std::size_t n = add.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto bc = add(b, c);
        const auto ab = mul(a, b);
        const auto ac = mul(a, c);
        const auto ba = mul(b, a);
        const auto ca = mul(c, a);
        if (!bc || !ab || !ac || !ba || !ca) return false;
        const auto left = mul(a, *bc);
        const auto left_expanded = add(*ab, *ac);
        const auto right = mul(*bc, a);
        const auto right_expanded = add(*ba, *ca);
        if (!left || !left_expanded || left != left_expanded) return false;
        if (!right || !right_expanded || right != right_expanded) return false;
      }
    }
  }
  return true;
}

}  // namespace exactkit
