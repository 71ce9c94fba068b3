#include "grasscoh/bott.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "grasscoh/error.hpp"

namespace grasscoh {

namespace {

constexpr std::array<int, 5> kRho = {4, 3, 2, 1, 0};

// Degree of the nonvanishing group of w(c), ignoring its dimension.
std::optional<int> bott_degree(const IrreducibleWeight& w) {
  const auto alpha = w.concatenated();
  std::array<int, 5> delta{};
  for (std::size_t i = 0; i < 5; ++i) delta[i] = alpha[i] + kRho[i];
  int inversions = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (delta[i] == delta[j]) return std::nullopt;
      if (delta[i] < delta[j]) ++inversions;
    }
  }
  return inversions;
}

}  // namespace

std::optional<BottResult> bott_irreducible(const IrreducibleWeight& w) {
  const auto alpha = w.concatenated();
  std::array<int, 5> delta{};
  for (std::size_t i = 0; i < 5; ++i) delta[i] = alpha[i] + kRho[i];
  const auto degree = bott_degree(w);
  if (!degree) return std::nullopt;
  std::sort(delta.begin(), delta.end(), std::greater<>());
  std::vector<int> lambda(5);
  for (std::size_t i = 0; i < 5; ++i) lambda[i] = delta[i] - kRho[i];
  GenPartition weight(std::move(lambda));
  const Dim dim = weyl_dim(weight);
  return BottResult{*degree, std::move(weight), dim};
}

CohomologyVector cohomology(const BundleExpr& x, int t) {
  CohomologyVector h{};
  for (const auto& [w, m] : x.summands()) {
    if (auto r = bott_irreducible(w.twisted(t))) h[r->degree] += m * r->dim;
  }
  return h;
}

Dim euler_char(const BundleExpr& x, int t) {
  const auto h = cohomology(x, t);
  Dim chi = 0;
  for (int i = 0; i <= kGrassmannianDim; ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i];
  return chi;
}

TwistWindow scan_window(const IrreducibleWeight& w) {
  int spread = 0;
  for (int x : w.concatenated()) spread = std::max(spread, std::abs(x));
  const int bound = 2 * spread + 6;
  return {-bound, bound};
}

TwistSupport nonzero_twists(const BundleExpr& x, const std::set<int>& degrees) {
  for (int d : degrees) {
    if (d < 1 || d > 5) throw Error(fmt::format("nonzero_twists: degree {} is not an inner degree", d));
  }
  TwistSupport out;
  for (const auto& [w, m] : x.summands()) {
    const TwistWindow win = scan_window(w);
    const auto lo = bott_degree(w.twisted(win.lo));
    const auto hi = bott_degree(w.twisted(win.hi));
    if (lo != 6 || hi != 0) {
      throw InvariantViolation(fmt::format("scan window [{},{}] for {} does not reach degrees 6 and 0",
                                           win.lo, win.hi, w.to_string()));
    }
    for (int c = win.lo + 1; c < win.hi; ++c) {
      const auto r = bott_irreducible(w.twisted(c));
      if (r && degrees.contains(r->degree)) out[r->degree][c] += m * r->dim;
    }
  }
  return out;
}

TwistSupport inner_support(const BundleExpr& x) { return nonzero_twists(x, {1, 2, 3, 4, 5}); }

CohomologyTable cohomology_table(const BundleExpr& x, TwistWindow window) {
  CohomologyTable table{x, window, {}};
  for (int t = window.lo; t <= window.hi; ++t) {
    const auto h = cohomology(x, t);
    for (int i = 0; i <= kGrassmannianDim; ++i) {
      if (h[i] != 0) table.entries[{i, t}] = h[i];
    }
  }
  return table;
}

nlohmann::json to_json(const CohomologyTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, dim] : table.entries) entries.push_back({key.first, key.second, dim});
  return {{"bundle", format_bundle(table.bundle)}, {"entries", std::move(entries)}};
}

}  // namespace grasscoh
