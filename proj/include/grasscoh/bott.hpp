#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"

#include "grasscoh/bundle.hpp"

namespace grasscoh {

inline constexpr int kGrassmannianDim = 6;
/// omega_G = O(-5).
inline constexpr int kCanonicalTwist = -5;

/// Inclusive twist interval.
struct TwistWindow {
  int lo = -12;
  int hi = 12;
  bool contains(int t) const { return lo <= t && t <= hi; }
};

/// The single nonvanishing cohomology group of an irreducible bundle.
struct BottResult {
  int degree;
  GenPartition gl5_weight;
  Dim dim;
};

/// Bott's algorithm; std::nullopt when the rho-shifted weight is singular.
std::optional<BottResult> bott_irreducible(const IrreducibleWeight& w);

/// h^0 .. h^6 of x(t).
using CohomologyVector = std::array<Dim, kGrassmannianDim + 1>;

CohomologyVector cohomology(const BundleExpr& x, int t);

Dim euler_char(const BundleExpr& x, int t);

/// degree -> (twist -> dimension), only nonzero entries.
using TwistSupport = std::map<int, std::map<int, Dim>>;

/// Exact support of h^i_*(x) for the requested degrees (each in 1..5).
///
/// Every irreducible summand is scanned over a twist interval wide enough
/// that the rho-shifted Q-entries lie entirely above or below the S^dual
/// entries at both ends; the endpoints are asserted to carry degree 0 / 6.
TwistSupport nonzero_twists(const BundleExpr& x, const std::set<int>& degrees);

/// Convenience: all degrees 1..5.
TwistSupport inner_support(const BundleExpr& x);

/// Twist interval over which `nonzero_twists` scans a single irreducible.
TwistWindow scan_window(const IrreducibleWeight& w);

struct CohomologyTable {
  BundleExpr bundle;
  TwistWindow window;
  /// (degree, twist) -> dim, nonzero only.
  std::map<std::pair<int, int>, Dim> entries;
};

CohomologyTable cohomology_table(const BundleExpr& x, TwistWindow window);

/// {"bundle": ..., "entries": [[i,t,dim],...]} with entries sorted by degree then twist.
nlohmann::json to_json(const CohomologyTable& table);

}  // namespace grasscoh
