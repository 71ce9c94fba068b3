#include <gtest/gtest.h>

#include "grasscoh/error.hpp"
#include "grasscoh/schur.hpp"
#include "oracles.hpp"

using namespace grasscoh;

namespace {

std::vector<int> to_vec(const GenPartition& p) { return {p.parts().begin(), p.parts().end()}; }

std::map<std::vector<int>, std::int64_t> to_map(const LRExpansion& e) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [nu, c] : e) out[to_vec(nu)] = c;
  return out;
}

/// All non-increasing tuples of length n with entries in [lo, hi].
std::vector<GenPartition> weights(int n, int lo, int hi) {
  std::vector<GenPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

}  // namespace

TEST(GenPartition, RejectsIncreasingTuple) {
  EXPECT_THROW(GenPartition({0, 1}), InvalidPartition);
  EXPECT_THROW(GenPartition({2, 0, 1}), InvalidPartition);
  EXPECT_NO_THROW(GenPartition({3, -1, -1}));
}

TEST(GenPartition, DualReversesAndNegates) {
  EXPECT_EQ(GenPartition({2, 1, -3}).dual(), GenPartition({3, -1, -2}));
  EXPECT_EQ(GenPartition({2, 0}).shifted(-1), GenPartition({1, -1}));
}

TEST(LittlewoodRichardson, TwoBoxesInGl2) {
  const auto e = lr_tensor({1, 0}, {1, 0}, 2);
  EXPECT_EQ(e, (LRExpansion{{GenPartition{2, 0}, 1}, {GenPartition{1, 1}, 1}}));
}

TEST(LittlewoodRichardson, TrivialFactorIsIdentity) {
  EXPECT_EQ(lr_tensor({0, 0, 0}, {2, 1, 0}, 3), (LRExpansion{{GenPartition{2, 1, 0}, 1}}));
}

TEST(LittlewoodRichardson, TwoBoxesInGl3) {
  EXPECT_EQ(lr_tensor({1, 0, 0}, {1, 0, 0}, 3),
            (LRExpansion{{GenPartition{2, 0, 0}, 1}, {GenPartition{1, 1, 0}, 1}}));
}

TEST(LittlewoodRichardson, TruncatesLongConstituents) {
  // (1,1) x (1,0) in GL(2): (1,1,1) has three rows and drops out.
  EXPECT_EQ(lr_tensor({1, 1}, {1, 0}, 2), (LRExpansion{{GenPartition{2, 1}, 1}}));
}

TEST(LittlewoodRichardson, KnownCoefficient) {
  EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient({2, 1}, {1}, {2, 2}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {1}, {4}), 0);
}

TEST(LittlewoodRichardson, MatchesSchurPolynomialProducts) {
  for (int n : {2, 3}) {
    const auto ws = weights(n, -2, 2);
    for (const auto& lam : ws)
      for (const auto& mu : ws) {
        const auto expected = oracle::lr_by_polynomials(to_vec(lam), to_vec(mu), n);
        EXPECT_EQ(to_map(lr_tensor(lam, mu, static_cast<std::size_t>(n))), expected)
            << lam.to_string() << " x " << mu.to_string();
      }
  }
}

TEST(LittlewoodRichardson, MatchesSchurPolynomialProductsGl5) {
  for (const auto& lam : weights(5, 0, 2))
    for (const auto& mu : std::vector<GenPartition>{{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {2, 1, 0, 0, 0}}) {
      EXPECT_EQ(to_map(lr_tensor(lam, mu, 5)), oracle::lr_by_polynomials(to_vec(lam), to_vec(mu), 5))
          << lam.to_string() << " x " << mu.to_string();
    }
}

TEST(LittlewoodRichardson, Symmetry) {
  const auto ws = weights(3, -2, 2);
  for (const auto& lam : ws)
    for (const auto& mu : ws) EXPECT_EQ(lr_tensor(lam, mu, 3), lr_tensor(mu, lam, 3));
}

TEST(LittlewoodRichardson, DimensionAdditivity) {
  for (int n : {2, 3, 5}) {
    for (const auto& lam : weights(n, -1, 2))
      for (const auto& mu : weights(n, 0, 1)) {
        Dim total = 0;
        for (const auto& [nu, c] : lr_tensor(lam, mu, static_cast<std::size_t>(n))) total += c * weyl_dim(nu);
        EXPECT_EQ(total, weyl_dim(lam) * weyl_dim(mu)) << lam.to_string() << " x " << mu.to_string();
      }
  }
}

TEST(LittlewoodRichardson, TruncationAgreesWithLongerExpansion) {
  for (const auto& lam : weights(3, 0, 2))
    for (const auto& mu : weights(3, 0, 2)) {
      int boxes = 0;
      for (int p : mu.parts()) boxes += p;
      LRExpansion restricted;
      for (const auto& [nu, c] : lr_tensor(lam, mu, 3 + static_cast<std::size_t>(boxes))) {
        bool fits = true;
        for (std::size_t i = 3; i < nu.size(); ++i) fits = fits && nu[i] == 0;
        if (fits) restricted[GenPartition({nu[0], nu[1], nu[2]})] = c;
      }
      EXPECT_EQ(restricted, lr_tensor(lam, mu, 3));
    }
}

TEST(LittlewoodRichardson, ShiftEquivariance) {
  for (const auto& lam : weights(3, -1, 2))
    for (const auto& mu : weights(3, -1, 1))
      for (int c : {-3, 2}) {
        LRExpansion shifted;
        for (const auto& [nu, m] : lr_tensor(lam, mu, 3)) shifted[nu.shifted(c)] = m;
        EXPECT_EQ(lr_tensor(lam.shifted(c), mu, 3), shifted);
      }
}

TEST(WeylDimension, ReferenceValues) {
  EXPECT_EQ(weyl_dim({0, 0, 0, 0, 0}), 1);
  EXPECT_EQ(weyl_dim({1, 0, 0, 0, 0}), 5);
  EXPECT_EQ(weyl_dim({1, 1, 0, 0, 0}), 10);
  EXPECT_EQ(weyl_dim({2, 0}), 3);
}

TEST(WeylDimension, MatchesTableauxCount) {
  for (int n : {2, 3, 5})
    for (const auto& lam : weights(n, -2, 2)) EXPECT_EQ(weyl_dim(lam), oracle::ssyt_count(to_vec(lam))) << lam.to_string();
}

TEST(WeylDimension, DualHasSameDimension) {
  for (const auto& lam : weights(5, -3, 3)) EXPECT_EQ(weyl_dim(lam), weyl_dim(lam.dual()));
}

TEST(WeylDimension, LargeWeightIsExact) {
  // GL(2): a1 - a2 + 1.
  EXPECT_EQ(weyl_dim({1000000, -1000000}), 2000001);
  // Sym^40 of a 5-dimensional space: C(44, 4).
  EXPECT_EQ(weyl_dim({40, 0, 0, 0, 0}), 135751);
}

TEST(WeylPolynomial, SignedDimensionOnUnsortedWeights) {
  const int dominant[] = {2, 1, 0};
  EXPECT_EQ(weyl_polynomial(dominant), 8);
  // (0,1,0) + rho is singular; (0,3,0) sorts to (2,1,0) after one reflection.
  const int singular[] = {0, 1, 0};
  const int reflected[] = {0, 3, 0};
  EXPECT_EQ(weyl_polynomial(singular), 0);
  EXPECT_EQ(weyl_polynomial(reflected), -8);
}
