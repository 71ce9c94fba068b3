#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "grasscoh/schur.hpp"

namespace grasscoh {

/// Highest weight (a | b) of the irreducible homogeneous bundle
/// Sigma^a Q (x) Sigma^b S^dual on G(1,4).
///
/// The relation det S^dual = O(-1) identifies (a, b + c(1,1,1)) with
/// (a - c(1,1), b); stored weights are always normalized so that b[2] == 0.
/// Twisting by O(t) adds t to both entries of a.
class IrreducibleWeight {
 public:
  /// Validates monotonicity of both parts and normalizes to b[2] == 0.
  IrreducibleWeight(std::array<int, 2> a, std::array<int, 3> b);

  const std::array<int, 2>& q_part() const { return a_; }
  const std::array<int, 3>& sd_part() const { return b_; }

  /// (a1, a2, b1, b2, b3): the GL(5) weight fed to Bott's algorithm.
  std::array<int, 5> concatenated() const { return {a_[0], a_[1], b_[0], b_[1], b_[2]}; }

  GenPartition q_partition() const { return GenPartition{a_[0], a_[1]}; }
  GenPartition sd_partition() const { return GenPartition{b_[0], b_[1], b_[2]}; }

  Dim rank() const;
  IrreducibleWeight twisted(int t) const { return IrreducibleWeight({a_[0] + t, a_[1] + t}, b_); }
  IrreducibleWeight dual() const;
  bool is_line_bundle() const { return a_[0] == a_[1] && b_[0] == 0; }

  std::string to_string() const;

  auto operator<=>(const IrreducibleWeight&) const = default;

 private:
  std::array<int, 2> a_;
  std::array<int, 3> b_;
};

using Mult = std::int64_t;

/// A direct sum of irreducible homogeneous bundles with multiplicities.
class BundleExpr {
 public:
  BundleExpr() = default;
  explicit BundleExpr(const IrreducibleWeight& w, Mult mult = 1);

  const std::map<IrreducibleWeight, Mult>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  Dim rank() const;
  /// Total number of irreducible summands counted with multiplicity.
  Mult summand_count() const;

  void add(const IrreducibleWeight& w, Mult mult = 1);
  BundleExpr& operator+=(const BundleExpr& other);
  friend BundleExpr operator+(BundleExpr x, const BundleExpr& y) { return x += y; }

  bool operator==(const BundleExpr&) const = default;

 private:
  std::map<IrreducibleWeight, Mult> summands_;
};

/// Named bundles.
namespace bundles {
BundleExpr O(int t = 0);
BundleExpr Q();
BundleExpr S();
BundleExpr Sd();
BundleExpr Sym2Q();
/// n copies of O(t).
BundleExpr trivial(Mult n, int t = 0);
}  // namespace bundles

BundleExpr tensor(const BundleExpr& x, const BundleExpr& y);
BundleExpr dual(const BundleExpr& x);
BundleExpr twist(const BundleExpr& x, int t);
BundleExpr scale(const BundleExpr& x, Mult n);

/// Symmetric power. Irreducible summands are handled by a hardcoded catalog
/// (line bundles, Sym^n Q, S^dual, S and degree-2 products of those); direct
/// sums expand binomially. Anything else throws UnsupportedPlethysm.
BundleExpr sym(const BundleExpr& x, int j);
/// Exterior power; same coverage as sym().
BundleExpr ext(const BundleExpr& x, int j);

enum class NameStyle {
  Ascii,    // re-parsable by parse_bundle
  Display,  // O(t), Q, S, S^∨, S²Q
};

std::string format_weight(const IrreducibleWeight& w, NameStyle style = NameStyle::Ascii);
std::string format_bundle(const BundleExpr& x, NameStyle style = NameStyle::Ascii);

}  // namespace grasscoh
