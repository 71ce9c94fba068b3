#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grasscoh/bott.hpp"

namespace grasscoh {

/// H^i_*(E) = H^i_*(E (x) Q) = 0 for i = 2, 3, 4.
bool without_inner_cohomology(const BundleExpr& x);

/// Per-twist dimensions of H^degree_* of a bundle, viewed as a graded module
/// over the homogeneous coordinate ring.
///
/// beta0 is only computed when every irreducible summand has its H^degree_*
/// concentrated in a single twist; such a module is killed by the irrelevant
/// ideal, so every basis vector is a minimal generator and beta0 is the total
/// dimension. Construction throws InvariantViolation otherwise.
struct GradedModuleSketch {
  int degree = 0;
  std::map<int, Dim> dims;
  Dim beta0 = 0;

  static GradedModuleSketch of(const BundleExpr& x, int degree);
  bool is_zero() const { return dims.empty(); }
  GradedModuleSketch& operator+=(const GradedModuleSketch& other);
};

/// beta0 of H^0_*(x) for a sum of line bundles: the number of summands.
Dim beta0_free(const BundleExpr& x);

enum class Regime {
  Both,    // H^1_*(E) != 0 and H^5_*(E) != 0: A != 0 and C != 0
  H1Only,  // C != 0, A = 0
  H5Only,  // A != 0, C = 0
};

std::string to_string(Regime r);

/// Discrete data of a candidate minimal monad 0 -> A -> B -> C -> 0 with
/// B = sum O(a_i) + sum Q(b_j) + sum S(c_l) + sum S^dual(d_m) and A, C sums of
/// line bundles.
struct MonadShape {
  std::vector<int> o_twists;
  std::vector<int> q_twists;
  std::vector<int> s_twists;
  std::vector<int> sd_twists;
  std::vector<int> a_twists;
  std::vector<int> c_twists;
  int target_rank = 2;
  Regime regime = Regime::Both;

  int h() const { return static_cast<int>(o_twists.size()); }
  int k() const { return static_cast<int>(q_twists.size()); }
  int s() const { return static_cast<int>(s_twists.size()); }
  int d() const { return static_cast<int>(sd_twists.size()); }
  int rank_a() const { return static_cast<int>(a_twists.size()); }
  int rank_c() const { return static_cast<int>(c_twists.size()); }
  /// h + 2k + 3s + 3d.
  int rank_b() const { return h() + 2 * k() + 3 * s() + 3 * d(); }

  BundleExpr middle() const;
  BundleExpr left() const;
  BundleExpr right() const;
};

nlohmann::json to_json(const MonadShape& shape);

/// H^1_* and H^2_* of Wedge^2 B and Wedge^2 B^dual.
struct Wedge2Data {
  GradedModuleSketch h1_b;
  GradedModuleSketch h2_b;
  GradedModuleSketch h1_bdual;
  GradedModuleSketch h2_bdual;
};

Wedge2Data compute_wedge2_data(const BundleExpr& middle);

struct EvidenceCell {
  std::string module;  // "Wedge2(B)" or "Wedge2(B^dual)"
  int degree;
  int twist;
  Dim dim;
};

struct ConditionResult {
  std::string label;
  bool applicable = true;
  bool passed = true;
  std::string detail;
  std::vector<EvidenceCell> evidence;
};

/// Labels used in rejections.
inline constexpr const char* kRankIdentity = "rank-identity";
inline constexpr const char* kCondition1 = "condition-1";
inline constexpr const char* kCondition2 = "condition-2";
inline constexpr const char* kCondition3 = "condition-3";

struct ConstraintReport {
  ConditionResult rank_identity;
  ConditionResult condition1;  // H^1_*(W2 B) != 0, beta0 >= beta0(H^0_*(S2 C)), if C != 0
  ConditionResult condition2;  // H^1_*(W2 B^dual) != 0, beta0 >= beta0(H^0_*(S2 A^dual)), if A != 0
  ConditionResult condition3;  // H^2_*(W2 B) = H^2_*(W2 B^dual) = 0
  Dim beta0_h1_wedge2_b = 0;
  Dim beta0_h1_wedge2_bdual = 0;
  Dim beta0_s2_c = 0;
  Dim beta0_s2_adual = 0;

  bool feasible() const;
  /// First failing check in the order rank identity, (1), (2), (3); empty if feasible.
  std::string rejected_by() const;
};

/// Checks the minimal-monad constraints for one shape, computing Wedge^2 B and
/// its cohomology from scratch.
ConstraintReport wedge2_cohomology_constraints(const MonadShape& shape);

/// Same checks with precomputed Wedge^2 data for shape.middle().
ConstraintReport evaluate_constraints(const MonadShape& shape, const Wedge2Data& data);

struct SearchBounds {
  TwistWindow twists{-3, 3};
  int max_rank_a = 5;
  int max_h = 3;
  int max_k = 3;
  int max_s = 3;
  int max_d = 3;
  /// Forces the number of Q summands, e.g. 0 for the degenerate search.
  std::optional<int> fixed_k;
  /// Randomly twisted representatives re-verified per summand-count class.
  int invariance_samples = 4;
};

/// All shapes sharing (h, k, s, d, rank A, regime): their verdict does not
/// depend on the twists, since twisting a summand only shifts its graded
/// cohomology module.
struct ShapeClassRecord {
  MonadShape representative;
  std::uint64_t instances = 0;
  ConstraintReport report;
};

struct FeasibilityReport {
  SearchBounds bounds;
  int target_rank = 2;
  std::vector<ShapeClassRecord> records;
  std::vector<ShapeClassRecord> feasible;
  std::uint64_t shapes_examined = 0;
  std::map<std::string, std::uint64_t> rejections;
  int invariance_checks = 0;
  std::vector<std::string> notes;
};

/// Exhaustive search over monad shapes within `bounds` for bundles of rank
/// `target_rank` without inner cohomology, in all three regimes.
FeasibilityReport search_monad_shapes(const SearchBounds& bounds, int target_rank);

nlohmann::json to_json(const ConstraintReport& r);
nlohmann::json to_json(const FeasibilityReport& r);

}  // namespace grasscoh
