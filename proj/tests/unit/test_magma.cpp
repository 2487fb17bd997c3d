#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "exactkit/complex.hpp"
#include "exactkit/magma.hpp"
#include "exactkit/rational.hpp"
#include "expect_code.hpp"

using namespace exactkit;

namespace {

std::vector<int> ints(int first, int last) {
  std::vector<int> v;
  for (int x = first; x <= last; ++x) v.push_back(x);
  return v;
}

Magma on_ints(const std::vector<int>& carrier, int (*op)(int, int)) {
  return cayley_table(carrier, op, [](int x) { return std::to_string(x); });
}

Magma random_magma(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::optional<std::size_t>> table;
  for (std::size_t i = 0; i < n * n; ++i) table.push_back(rng() % n);
  return Magma(labels, table);
}

}  // namespace

TEST(Magma, ModularAdditionRowsAreCyclicShifts) {
  const Magma m = modular_addition(6);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(m(a, b), (a + b) % 6);
  }
  const StructureReport r = classify_structure(m);
  EXPECT_EQ(r.structure, StructureClass::AbelianGroup);
  EXPECT_EQ(r.neutral, std::size_t{0});
  EXPECT_EQ(r.inverses[2], 4u);
  EXPECT_CODE(modular_addition(0), ErrorCode::OutOfDomain);
}

TEST(Magma, UnitCircleOfGaussianIntegers) {
  const std::vector<GaussianRational> s{{-1, 0}, {1, 0}, {0, 1}, {0, -1}};
  const Magma m = cayley_table(s, [](const auto& a, const auto& b) { return a * b; },
                               [](const GaussianRational& z) { return z.str(); });
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"-1", "1", "i", "-i"}));
  const StructureReport r = classify_structure(m);
  EXPECT_EQ(r.structure, StructureClass::AbelianGroup);
  ASSERT_TRUE(r.neutral);
  EXPECT_EQ(m.label(*r.neutral), "1");
  EXPECT_EQ(m.label(r.inverses[*m.index_of("i")]), "-i");
}

TEST(Magma, MaxIsAMonoidButNotAGroup) {
  const Magma m = on_ints({1, 2}, [](int a, int b) { return std::max(a, b); });
  const StructureReport r = classify_structure(m);
  EXPECT_EQ(r.structure, StructureClass::Monoid);
  EXPECT_TRUE(r.commutative);
  EXPECT_EQ(r.neutral, std::size_t{0});
  EXPECT_FALSE(r.all_invertible);
}

TEST(Magma, ClassesFromNotClosedToGroup) {
  // Subtraction leaves {0,1,2}.
  EXPECT_EQ(classify_structure(on_ints(ints(0, 2), [](int a, int b) { return a - b; })).structure,
            StructureClass::NotClosed);
  // a o b = a is associative but has no two-sided neutral element on two elements.
  EXPECT_EQ(classify_structure(on_ints(ints(0, 1), [](int a, int) { return a; })).structure,
            StructureClass::Semigroup);
  // Subtraction mod 3 is closed but not associative.
  EXPECT_EQ(classify_structure(on_ints(ints(0, 2), [](int a, int b) { return ((a - b) % 3 + 3) % 3; })).structure,
            StructureClass::Magma);
  // A nonabelian group: permutations of three points under composition.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Magma s3 = cayley_table(
      perms, [](const auto& f, const auto& g) { return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]}; },
      [](const auto& f) { return std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]); });
  EXPECT_EQ(classify_structure(s3).structure, StructureClass::Group);
}

TEST(Magma, SingletonTable) {
  const Magma m = magma_from_labels({"e"}, {{"e"}});
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(classify_structure(m).structure, StructureClass::AbelianGroup);
}

TEST(Magma, UnknownLabelsAreUnclosed) {
  const Magma m = magma_from_labels({"a", "b"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_FALSE(m(1, 1).has_value());
  EXPECT_FALSE(classify_structure(m).closed);
  EXPECT_NE(m.str().find('*'), std::string::npos);
  EXPECT_CODE(magma_from_labels({"a", "b"}, {{"a", "b"}}), ErrorCode::ShapeMismatch);
}

TEST(Magma, CarrierCap) {
  EXPECT_NO_THROW(modular_multiplication(64));
  EXPECT_CODE(Magma(std::vector<std::string>(65, "x"), std::vector<std::optional<std::size_t>>(65 * 65, 0)),
              ErrorCode::TooLarge);
}

TEST(Magma, NeutralAndInversesAreUnique) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const Magma m = random_magma(rng, n);
    const StructureReport r = classify_structure(m);
    std::vector<std::size_t> neutrals;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n; ++a) ok = ok && m(e, a) == a && m(a, e) == a;
      if (ok) neutrals.push_back(e);
    }
    EXPECT_LE(neutrals.size(), 1u);
    EXPECT_EQ(r.neutral.has_value(), !neutrals.empty());
    if (r.structure == StructureClass::Group || r.structure == StructureClass::AbelianGroup) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (std::size_t b = 0; b < n; ++b) count += m(a, b) == r.neutral && m(b, a) == r.neutral;
        EXPECT_EQ(count, 1u);
        EXPECT_EQ(m(a, r.inverses[a]), r.neutral);
      }
    }
  }
}

TEST(Magma, Distributivity) {
  EXPECT_TRUE(check_distributive(modular_addition(6), modular_multiplication(6)));
  EXPECT_FALSE(check_distributive(modular_multiplication(6), modular_addition(6)));
  const auto carrier = ints(1, 3);
  EXPECT_TRUE(check_distributive(on_ints(carrier, [](int a, int b) { return std::max(a, b); }),
                                 on_ints(carrier, [](int a, int b) { return std::min(a, b); })));
  // a + b with a multiplication that sends everything to 1 breaks a(b + c) = ab + ac.
  EXPECT_FALSE(check_distributive(modular_addition(2), magma_from_labels({"0", "1"}, {{"1", "1"}, {"1", "1"}})));
  EXPECT_CODE(check_distributive(modular_addition(2), modular_addition(3)), ErrorCode::CarrierMismatch);
}

// Operations on infinite carriers, checked on samples against the derived
// neutral element and inverse formulas.
TEST(InfiniteCarriers, ShiftedAddition) {
  auto star = [](const Rational& x, const Rational& y) { return x + y - 4; };
  auto plus1 = [](const Rational& x, const Rational& y) { return x + y + 1; };
  for (int k = -50; k <= 50; ++k) {
    const Rational x(Int(k), Int(3));
    EXPECT_EQ(star(x, 4), x);
    EXPECT_EQ(star(4, x), x);
    EXPECT_EQ(star(x, -x + 8), 4);
    EXPECT_EQ(plus1(x, -1), x);
    EXPECT_EQ(plus1(x, -x - 2), -1);
  }
}

TEST(InfiniteCarriers, ShiftedProduct) {
  auto odot = [](const Rational& x, const Rational& y) { return x * y + x + y; };
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int s = 0; s < 300; ++s) {
    const Rational x(Int(num(rng)), Int(den(rng)));
    const Rational y(Int(num(rng)), Int(den(rng)));
    const Rational z(Int(num(rng)), Int(den(rng)));
    EXPECT_EQ(odot(x, 0), x);
    EXPECT_EQ(odot(odot(x, y), z), odot(x, odot(y, z)));
    EXPECT_EQ(odot(x, y), odot(y, x));
    if (x == -1) continue;
    const Rational inv = -x / (x + 1);
    EXPECT_EQ(odot(x, inv), 0);
    EXPECT_EQ(odot(inv, x), 0);
  }
}
