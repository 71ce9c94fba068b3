#include "grasscoh/catalog.hpp"

#include <set>

namespace grasscoh {

std::vector<IrreducibleWeight> catalog_irreducibles(int bound) {
  std::set<IrreducibleWeight> seen;
  for (int a1 = -bound; a1 <= bound; ++a1)
    for (int a2 = -bound; a2 <= a1; ++a2)
      for (int b1 = -bound; b1 <= bound; ++b1)
        for (int b2 = -bound; b2 <= b1; ++b2)
          for (int b3 = -bound; b3 <= b2; ++b3) seen.insert(IrreducibleWeight({a1, a2}, {b1, b2, b3}));
  return {seen.begin(), seen.end()};
}

std::vector<BundleExpr> catalog_line_sums(int max_terms, TwistWindow twists) {
  std::vector<BundleExpr> out;
  std::vector<int> current;
  auto extend = [&](auto&& self, int from) -> void {
    if (!current.empty()) {
      BundleExpr x;
      for (int t : current) x += bundles::O(t);
      out.push_back(std::move(x));
    }
    if (static_cast<int>(current.size()) == max_terms) return;
    for (int t = from; t <= twists.hi; ++t) {
      current.push_back(t);
      self(self, t);
      current.pop_back();
    }
  };
  extend(extend, twists.lo);
  return out;
}

std::vector<BundleExpr> full_catalog() {
  std::vector<BundleExpr> out;
  for (const auto& w : catalog_irreducibles()) out.emplace_back(w);
  for (auto& x : catalog_line_sums()) out.push_back(std::move(x));
  return out;
}

}  // namespace grasscoh
