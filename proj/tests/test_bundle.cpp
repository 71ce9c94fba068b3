#include <gtest/gtest.h>

#include "grasscoh/bundle.hpp"
#include "grasscoh/catalog.hpp"
#include "grasscoh/error.hpp"
#include "grasscoh/parser.hpp"

using namespace grasscoh;
using namespace grasscoh::bundles;

namespace {

BundleExpr W(std::array<int, 2> a, std::array<int, 3> b) { return BundleExpr(IrreducibleWeight(a, b)); }

std::vector<BundleExpr> small_bundles() {
  return {O(), O(-2), Q(), S(), Sd(), Sym2Q(), twist(Q(), 3), Q() + Sd(), S() + O(1) + O(1), tensor(Q(), S())};
}

}  // namespace

TEST(IrreducibleWeight, NormalizesDeterminantOfSdual) {
  EXPECT_EQ(IrreducibleWeight({0, 0}, {1, 1, 1}), IrreducibleWeight({-1, -1}, {0, 0, 0}));
  EXPECT_EQ(IrreducibleWeight({2, 0}, {0, -1, -1}).sd_part(), (std::array<int, 3>{1, 0, 0}));
  EXPECT_EQ(IrreducibleWeight({2, 0}, {0, -1, -1}).q_part(), (std::array<int, 2>{3, 1}));
}

TEST(IrreducibleWeight, RejectsNonMonotoneParts) {
  EXPECT_THROW(IrreducibleWeight({0, 1}, {0, 0, 0}), InvalidPartition);
  EXPECT_THROW(IrreducibleWeight({0, 0}, {0, 1, 0}), InvalidPartition);
}

TEST(NamedBundles, Weights) {
  EXPECT_EQ(Q(), W({1, 0}, {0, 0, 0}));
  EXPECT_EQ(O(1), W({1, 1}, {0, 0, 0}));
  EXPECT_EQ(Sd(), W({0, 0}, {1, 0, 0}));
  EXPECT_EQ(S(), W({0, 0}, {0, 0, -1}));
  EXPECT_EQ(Sym2Q(), W({2, 0}, {0, 0, 0}));
  EXPECT_EQ(Q().rank(), 2);
  EXPECT_EQ(S().rank(), 3);
  EXPECT_EQ(Sym2Q().rank(), 3);
}

TEST(Tensor, QTimesQ) { EXPECT_EQ(tensor(Q(), Q()), Sym2Q() + O(1)); }

TEST(Tensor, LineBundlesAdd) {
  for (int s = -3; s <= 3; ++s)
    for (int t = -3; t <= 3; ++t) EXPECT_EQ(tensor(O(s), O(t)), O(s + t));
}

TEST(Tensor, QTimesSdualIsIrreducible) {
  const auto x = tensor(Q(), Sd());
  EXPECT_EQ(x, W({1, 0}, {1, 0, 0}));
  EXPECT_EQ(x.rank(), 6);
}

TEST(Tensor, CommutativeAndAssociative) {
  const auto xs = small_bundles();
  for (const auto& x : xs)
    for (const auto& y : xs) {
      EXPECT_EQ(tensor(x, y), tensor(y, x));
      EXPECT_EQ(tensor(x, y).rank(), x.rank() * y.rank());
      EXPECT_EQ((x + y).rank(), x.rank() + y.rank());
    }
  for (const auto& z : {Q(), S()})
    EXPECT_EQ(tensor(tensor(Q(), Sd()), z), tensor(Q(), tensor(Sd(), z)));
}

TEST(Dual, ReferenceValues) {
  EXPECT_EQ(dual(Sym2Q()), twist(Sym2Q(), -2));
  EXPECT_EQ(dual(Q()), twist(Q(), -1));
  EXPECT_EQ(dual(O(4)), O(-4));
  EXPECT_EQ(dual(Sd()), S());
}

TEST(Dual, InvolutionOnCatalog) {
  for (const auto& x : full_catalog()) {
    EXPECT_EQ(dual(dual(x)), x);
    EXPECT_EQ(dual(x).rank(), x.rank());
  }
}

TEST(Twist, Laws) {
  for (const auto& x : small_bundles()) {
    EXPECT_EQ(twist(x, 1), tensor(x, O(1)));
    EXPECT_EQ(twist(x, 5), twist(twist(x, 2), 3));
    EXPECT_EQ(twist(x, -2), tensor(x, O(-2)));
  }
}

TEST(Plethysm, ExteriorPowersOfSdual) {
  EXPECT_EQ(ext(Sd(), 0), O());
  EXPECT_EQ(ext(Sd(), 1), Sd());
  EXPECT_EQ(ext(Sd(), 2), twist(S(), -1));
  EXPECT_EQ(ext(Sd(), 3), O(-1));
  EXPECT_EQ(ext(S(), 3), O(1));
  EXPECT_EQ(ext(Q(), 2), O(1));
}

TEST(Plethysm, SymmetricPowersOfQ) {
  EXPECT_EQ(sym(Q(), 2), Sym2Q());
  EXPECT_EQ(sym(Q(), 3), W({3, 0}, {0, 0, 0}));
  EXPECT_EQ(sym(Q(), 0), O());
}

TEST(Plethysm, WedgeSquareOfUniversalSum) {
  const auto x = Q() + S() + Sd();
  const auto expected = O(1) + twist(Sd(), 1) + twist(S(), -1) + tensor(Q(), S()) + tensor(Q(), Sd()) + tensor(S(), Sd());
  EXPECT_EQ(ext(x, 2), expected);
  EXPECT_EQ(ext(x, 2).rank(), 28);
}

TEST(Plethysm, SymSquareOfLineBundleSum) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) EXPECT_EQ(sym(O(a) + O(b), 2), O(2 * a) + O(a + b) + O(2 * b));
}

TEST(Plethysm, SquareSplitsTensorSquare) {
  for (const auto& x : small_bundles()) {
    EXPECT_EQ(sym(x, 2) + ext(x, 2), tensor(x, x)) << format_bundle(x);
    EXPECT_EQ(ext(x, 2).rank(), x.rank() * (x.rank() - 1) / 2);
    EXPECT_EQ(sym(x, 2).rank(), x.rank() * (x.rank() + 1) / 2);
  }
}

TEST(Plethysm, BinomialRanksForHigherPowers) {
  const auto x = Q() + Sd() + O(2);  // rank 6
  const Dim binom[] = {1, 6, 15, 20, 15, 6, 1};
  for (int j = 0; j <= 6; ++j) EXPECT_EQ(ext(x, j).rank(), binom[j]) << j;
  EXPECT_TRUE(ext(x, 7).is_zero());
  EXPECT_EQ(sym(Sd() + O(), 3).rank(), 20);
}

TEST(Plethysm, UnsupportedCasesThrow) {
  EXPECT_THROW(sym(Sym2Q(), 3), UnsupportedPlethysm);
  EXPECT_THROW(ext(tensor(Q(), Sd()), 3), UnsupportedPlethysm);
  EXPECT_THROW(sym(Q(), -1), DegreeOutOfRange);
}

TEST(Format, AsciiNamesReparse) {
  std::vector<BundleExpr> xs = small_bundles();
  for (const auto& w : catalog_irreducibles(2)) xs.emplace_back(w);
  xs.push_back(scale(twist(Sym2Q(), -3), 5));
  xs.push_back(BundleExpr());
  for (const auto& x : xs) EXPECT_EQ(parse_bundle(format_bundle(x)), x) << format_bundle(x);
}

TEST(Format, ReadableNames) {
  EXPECT_EQ(format_bundle(O(-1)), "O(-1)");
  EXPECT_EQ(format_bundle(Q() + Sd()), format_bundle(Sd() + Q()));
  EXPECT_EQ(format_bundle(Sd(), NameStyle::Display), "S^∨");
  EXPECT_EQ(format_bundle(Sym2Q(), NameStyle::Display), "S²Q");
  EXPECT_EQ(format_bundle(BundleExpr()), "0");
}
