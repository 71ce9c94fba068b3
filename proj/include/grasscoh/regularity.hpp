#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grasscoh/bott.hpp"
#include "grasscoh/error.hpp"

namespace grasscoh {

/// The three bundles F is tensored with in the L-regularity conditions.
enum class Companion { O, Q, S2Q };

std::string to_string(Companion c);
Companion companion_from_string(const std::string& s);
BundleExpr companion_bundle(Companion c);

/// h^degree(F (x) companion (twist)).
struct Cell {
  Companion companion;
  int degree;
  int twist;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

/// Thrown when a query touches cells an external profile does not state.
class IncompleteProfile : public Error {
 public:
  explicit IncompleteProfile(std::vector<Cell> missing);
  const std::vector<Cell>& missing() const { return missing_; }

 private:
  std::vector<Cell> missing_;
};

/// Cohomology of F, F (x) Q and F (x) S^2 Q, either computed from a
/// homogeneous bundle or stated cell by cell for an arbitrary sheaf.
///
/// Bundle-backed lookups are memoized inside the profile, so a profile must
/// not be shared between threads.
class CohomologyProfile {
 public:
  static CohomologyProfile of(const BundleExpr& f);
  static CohomologyProfile external(int rank, std::map<Cell, Dim> cells);
  /// {"rank": r, "cells": [["O"|"Q"|"S2Q", i, t, dim], ...]}
  static CohomologyProfile from_json(const nlohmann::json& j);

  int rank() const { return rank_; }
  const std::optional<BundleExpr>& source() const { return source_; }

  /// std::nullopt for a cell an external profile leaves unstated.
  std::optional<Dim> lookup(const Cell& c) const;
  /// Like lookup, but throws IncompleteProfile.
  Dim h(const Cell& c) const;
  /// Throws IncompleteProfile listing every unstated cell among `cells`.
  void require(const std::vector<Cell>& cells) const;

 private:
  CohomologyProfile() = default;

  int rank_ = 0;
  std::optional<BundleExpr> source_;
  // F, F(x)Q, F(x)S^2Q for bundle-backed profiles.
  std::array<BundleExpr, 3> tensored_;
  std::map<Cell, Dim> cells_;
  mutable std::map<std::pair<Companion, int>, CohomologyVector> memo_;
};

/// The fifteen vanishings defining m-L-regularity.
std::vector<Cell> l_regularity_conditions(int m);

struct RegularityCheck {
  bool regular = false;
  std::vector<Cell> failing;
};

RegularityCheck is_L_regular(const CohomologyProfile& p, int m);

struct GRegularityCheck {
  bool regular = false;
  /// (k, cell) pairs that are nonzero.
  std::vector<std::pair<int, Cell>> failing;
};

/// L-regularity at m + k for 0 <= k <= window together with
/// h^1(F (x) Q(m+k-1)) = h^2(F (x) S^2 Q(m+k-2)) = 0.
GRegularityCheck is_G_regular_window(const CohomologyProfile& p, int m, int window);

struct RegularityReport {
  enum class Kind { Finite, MinusInfinity };
  Kind kind = Kind::Finite;
  int lreg = 0;
  /// Conditions failing at lreg - 1.
  std::vector<Cell> failing_below;
  /// Scanned m range and whether regularity was monotone on it.
  TwistWindow scanned;
  bool monotone = true;
  /// First m >= lreg that is not regular, when monotonicity fails.
  std::optional<int> monotonicity_violation;
  int g_window = 10;
  bool g_regular = true;
};

/// Least m with F m-L-regular, found by scanning an interval derived from the
/// weights of F (x) S^2 Q and asserting the answer at both ends.
RegularityReport lreg(const BundleExpr& x);

/// Dominance of (a1,a2,b1,b2,b3) for every summand, i.e. a2 >= b1.
bool is_globally_generated(const BundleExpr& x);

enum class SplitVerdict { HypothesesNotMet, SplitAsOPlusOa, IsomorphicToQ, InconsistentProfile };

std::string to_string(SplitVerdict v);

struct SplitBranch {
  std::string label;  // "i" .. "v"
  Cell cell;
  Dim value;
};

struct SplittingReport {
  SplitVerdict verdict = SplitVerdict::HypothesesNotMet;
  /// Hypotheses that failed, with the offending cells.
  std::vector<std::string> unmet;
  /// Branches whose cell is nonzero.
  std::vector<SplitBranch> fired;
};

/// Classifies a rank-2 profile with Lreg 0 against the splitting criterion.
/// The hypotheses include h^2(E(-3)) = 0, which for an external profile must be
/// stated explicitly. Throws RankMismatch for rank != 2.
SplittingReport check_splitting_criterion(const CohomologyProfile& p);

nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const SplittingReport& r);

}  // namespace grasscoh
