#include "grasscoh/acceptance.hpp"

#include <chrono>
#include <set>

#include <fmt/format.h>

#include "grasscoh/catalog.hpp"
#include "grasscoh/monad.hpp"
#include "grasscoh/regularity.hpp"
#include "grasscoh/sequences.hpp"

namespace grasscoh {

namespace {

using Check = std::vector<CriterionResult>;

CriterionResult make(std::string id, std::string title) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.passed = true;
  return r;
}

void fail(CriterionResult& r, std::string detail) {
  r.passed = false;
  r.details.push_back(std::move(detail));
}

/// Caps the number of failure lines kept per criterion.
void fail_capped(CriterionResult& r, std::size_t& count, std::string detail) {
  r.passed = false;
  if (++count <= 10) r.details.push_back(std::move(detail));
}

void note_overflow(CriterionResult& r, std::size_t count) {
  if (count > 10) r.details.push_back(fmt::format("... {} violations in total", count));
}

std::string support_text(const TwistSupport& s) {
  std::vector<std::string> parts;
  for (const auto& [i, row] : s)
    for (const auto& [t, d] : row) parts.push_back(fmt::format("h^{}(t={})={}", i, t, d));
  return parts.empty() ? "none" : fmt::format("{}", fmt::join(parts, ", "));
}

// Universal-bundle table ---------------------------------------------------

Check universal_table() {
  struct Named {
    const char* name;
    BundleExpr x;
  };
  const std::vector<Named> base = {
      {"Q", bundles::Q()}, {"S", bundles::S()}, {"S^dual", bundles::Sd()}, {"O", bundles::O()}};
  // Stated cells: (pair, degree, twist).
  const std::map<std::string, std::pair<int, int>> stated = {
      {"Q*S^dual", {1, -1}}, {"Q*S", {5, -5}}, {"S^dual*S^dual", {2, -1}}};

  auto literal = make("1", "universal-bundle table: stated cells, all other inner cohomology vanishes");
  auto closed = make("1s", "universal-bundle table: stated cells and their Serre duals, nothing else");

  // Serre duals of the stated cells, as (pair, degree, twist).
  std::map<std::string, std::pair<int, int>> duals;
  for (const auto& [pair, cell] : stated) {
    const auto sep = pair.find('*');
    auto flip = [](const std::string& n) { return n == "S" ? std::string("S^dual") : n == "S^dual" ? std::string("S") : n; };
    const std::string a = flip(pair.substr(0, sep)), b = flip(pair.substr(sep + 1));
    // (X*Y)^dual = X^dual * Y^dual; Q^dual = Q(-1) shifts the twist by one per Q factor.
    const int q_shift = (a == "Q") + (b == "Q");
    const std::string key = a <= b ? a + "*" + b : b + "*" + a;
    duals[key] = {kGrassmannianDim - cell.first, -cell.second + kCanonicalTwist - q_shift};
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      std::string a = base[i].name, b = base[j].name;
      const std::string key = a <= b ? a + "*" + b : b + "*" + a;
      const TwistSupport support = inner_support(tensor(base[i].x, base[j].x));
      TwistSupport expected_literal, expected_closed;
      if (auto it = stated.find(key); it != stated.end()) {
        expected_literal[it->second.first][it->second.second] = 1;
        expected_closed[it->second.first][it->second.second] = 1;
      }
      if (auto it = duals.find(key); it != duals.end()) expected_closed[it->second.first][it->second.second] = 1;
      if (support != expected_literal) {
        fail(literal, fmt::format("{}: found {}, expected {}", key, support_text(support), support_text(expected_literal)));
      }
      if (support != expected_closed) {
        fail(closed, fmt::format("{}: found {}, expected {}", key, support_text(support), support_text(expected_closed)));
      }
    }
  }
  literal.details.push_back("h^4(S*S(-4)) = 1 is the Serre dual of h^2(S^dual*S^dual(-1)) = 1, so the literal "
                            "statement cannot hold together with its own h^2 claim");
  return {literal, closed};
}

// ACM ------------------------------------------------------------------------

Check acm() {
  auto r = make("2", "O, Q, S, S^dual are ACM");
  for (const auto& [name, x] : std::vector<std::pair<std::string, BundleExpr>>{
           {"O", bundles::O()}, {"Q", bundles::Q()}, {"S", bundles::S()}, {"S^dual", bundles::Sd()}}) {
    const auto s = inner_support(x);
    if (!s.empty()) fail(r, fmt::format("{}: {}", name, support_text(s)));
  }
  return {r};
}

// Sequence ledger ------------------------------------------------------------

Check sequence_ledger(TwistWindow window) {
  auto r = make("3", "sequence ledger: eight fixtures vanish, printed koz fails, repaired koz passes");
  const auto probes = standard_probes();
  for (const auto& s : builtin_sequences()) {
    const auto rep = verify_sequence(s, window, probes);
    if (!rep.passed()) {
      fail(r, fmt::format("{}: alternating rank {}, {} nonzero entries", s.label, rep.alternating_rank,
                          rep.failures().size()));
    } else {
      r.details.push_back(fmt::format("{}: {} entries vanish", s.label, rep.entries.size()));
    }
  }
  const auto printed = verify_sequence(koz_as_printed(), window, probes);
  if (printed.passed()) {
    fail(r, "koz with S^2 Q(2) unexpectedly passes");
  } else {
    const auto f = printed.failures().front();
    r.details.push_back(fmt::format("koz with S^2 Q(2): {} nonzero entries, first probe {} at t = {}: {}",
                                    printed.failures().size(), f.probe, f.twist, f.alternating_sum));
  }
  return {r};
}

// Isomorphism identities -------------------------------------------------------

Check isomorphisms(TwistWindow window) {
  auto r = make("4", "isomorphism identities: dual of Sym^j Q, exterior powers of S^dual");
  std::size_t count = 0;
  for (int j = 1; j <= 2; ++j) {
    const BundleExpr lhs = dual(sym(bundles::Q(), j));
    const BundleExpr rhs = sym(bundles::Q(), j);
    for (int t = window.lo; t <= window.hi; ++t)
      if (cohomology(lhs, t) != cohomology(rhs, t - j))
        fail_capped(r, count, fmt::format("dual(Sym^{} Q) at t = {}", j, t));
  }
  for (int j = 0; j <= 3; ++j) {
    const BundleExpr lhs = ext(bundles::Sd(), j);
    const BundleExpr rhs = ext(bundles::S(), 3 - j);
    for (int t = window.lo; t <= window.hi; ++t)
      if (cohomology(lhs, t) != cohomology(rhs, t - 1))
        fail_capped(r, count, fmt::format("Wedge^{} S^dual at t = {}", j, t));
  }
  note_overflow(r, count);
  return {r};
}

// Regularity suite -------------------------------------------------------------

struct LregCache {
  std::vector<BundleExpr> catalog = full_catalog();
  std::vector<RegularityReport> reports;
  LregCache() {
    reports.reserve(catalog.size());
    for (const auto& x : catalog) reports.push_back(lreg(x));
  }
};

const LregCache& lreg_cache() {
  static const LregCache cache;
  return cache;
}

Check regularity_suite() {
  auto r = make("5", "regularity suite: Lreg(O) = Lreg(Q) = 0, twist law, direct-sum max law");
  std::size_t count = 0;
  if (lreg(bundles::O()).lreg != 0) fail(r, "Lreg(O) != 0");
  if (lreg(bundles::Q()).lreg != 0) fail(r, "Lreg(Q) != 0");
  const auto& cache = lreg_cache();
  const auto& cat = cache.catalog;
  const std::size_t n = cat.size();
  std::size_t twist_checks = 0, sum_checks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int base = cache.reports[i].lreg;
    for (int t : {-2, 1}) {
      const int got = lreg(twist(cat[i], t)).lreg;
      ++twist_checks;
      if (got != base - t)
        fail_capped(r, count, fmt::format("Lreg({} twisted by {}) = {}, expected {}", format_bundle(cat[i]), t, got, base - t));
    }
  }
  const std::size_t n_irr = catalog_irreducibles().size();
  for (std::size_t i = 0; i < n_irr; ++i) {
    const std::size_t j = (i * 7 + 3) % n_irr;
    const int got = lreg(cat[i] + cat[j]).lreg;
    const int want = std::max(cache.reports[i].lreg, cache.reports[j].lreg);
    ++sum_checks;
    if (got != want)
      fail_capped(r, count, fmt::format("Lreg({} + {}) = {}, expected {}", format_bundle(cat[i]), format_bundle(cat[j]), got, want));
  }
  for (std::size_t i = n_irr; i < n; ++i) {
    int want = std::numeric_limits<int>::min();
    for (const auto& [w, m] : cat[i].summands()) want = std::max(want, -w.q_part()[0]);
    ++sum_checks;
    if (cache.reports[i].lreg != want)
      fail_capped(r, count, fmt::format("Lreg({}) = {}, expected {}", format_bundle(cat[i]), cache.reports[i].lreg, want));
  }
  note_overflow(r, count);
  r.details.push_back(fmt::format("{} bundles, {} twist-law and {} direct-sum checks", n, twist_checks, sum_checks));
  return {r};
}

Check monotonicity_and_generation() {
  auto r = make("6", "monotonicity of L-regularity; 0-L-regular implies globally generated");
  std::size_t count = 0, regular_at_zero = 0;
  const auto& cache = lreg_cache();
  for (std::size_t i = 0; i < cache.catalog.size(); ++i) {
    const auto& x = cache.catalog[i];
    const auto& rep = cache.reports[i];
    const auto profile = CohomologyProfile::of(x);
    bool previous = false;
    for (int m = rep.scanned.lo; m <= rep.scanned.hi; ++m) {
      const bool now = is_L_regular(profile, m).regular;
      if (previous && !now) fail_capped(r, count, fmt::format("{} is {}-L-regular but not {}-L-regular", format_bundle(x), m - 1, m));
      previous = now;
    }
    if (!rep.monotone) fail_capped(r, count, fmt::format("{}: regularity report flags non-monotone scan", format_bundle(x)));
    if (is_L_regular(profile, 0).regular) {
      ++regular_at_zero;
      if (!is_globally_generated(x)) fail_capped(r, count, fmt::format("{} is 0-L-regular but not globally generated", format_bundle(x)));
    }
  }
  note_overflow(r, count);
  r.details.push_back(fmt::format("{} bundles, {} of them 0-L-regular", cache.catalog.size(), regular_at_zero));
  return {r};
}

Check g_regularity() {
  auto r = make("7", "L-regular implies windowed G-regular (K = 10)");
  std::size_t count = 0, checks = 0;
  const auto& cache = lreg_cache();
  for (std::size_t i = 0; i < cache.catalog.size(); ++i) {
    const auto& x = cache.catalog[i];
    const auto& rep = cache.reports[i];
    const auto profile = CohomologyProfile::of(x);
    for (int m = rep.scanned.lo; m <= rep.scanned.hi; ++m) {
      if (!is_L_regular(profile, m).regular) continue;
      ++checks;
      const auto g = is_G_regular_window(profile, m, 10);
      if (!g.regular) {
        fail_capped(r, count, fmt::format("{} is {}-L-regular, G-window fails at k = {}, {}", format_bundle(x), m,
                                          g.failing.front().first, to_string(g.failing.front().second)));
      }
    }
  }
  note_overflow(r, count);
  r.details.push_back(fmt::format("{} (bundle, m) pairs checked", checks));
  return {r};
}

// Splitting criterion ------------------------------------------------------------

CohomologyProfile external_copy(const BundleExpr& x, const std::map<Cell, Dim>& overrides) {
  const auto p = CohomologyProfile::of(x);
  std::map<Cell, Dim> cells;
  for (auto c : {Companion::O, Companion::Q, Companion::S2Q})
    for (int i = 0; i <= kGrassmannianDim; ++i)
      for (int t = -12; t <= 12; ++t) cells[{c, i, t}] = p.h({c, i, t});
  for (const auto& [c, v] : overrides) cells[c] = v;
  return CohomologyProfile::external(static_cast<int>(x.rank()), std::move(cells));
}

Check splitting() {
  auto r = make("8", "splitting criterion: Q, O + O(a), and hypothesis violations");
  {
    const auto rep = check_splitting_criterion(CohomologyProfile::of(bundles::Q()));
    const bool branch_ii = rep.fired.size() == 1 && rep.fired[0].label == "ii" && rep.fired[0].value != 0;
    if (!branch_ii || rep.verdict != SplitVerdict::IsomorphicToQ)
      fail(r, fmt::format("Q: verdict {}, {} branches fired", to_string(rep.verdict), rep.fired.size()));
    else
      r.details.push_back(fmt::format("Q: branch ii, h^3(Q*S2Q(-4)) = {}, {}", rep.fired[0].value, to_string(rep.verdict)));
  }
  for (int a = 0; a <= 3; ++a) {
    const auto rep = check_splitting_criterion(CohomologyProfile::of(bundles::O() + bundles::O(a)));
    const bool branch_i = rep.fired.size() == 1 && rep.fired[0].label == "i";
    if (!branch_i || rep.verdict != SplitVerdict::SplitAsOPlusOa)
      fail(r, fmt::format("O + O({}): verdict {}", a, to_string(rep.verdict)));
  }
  // Each hypothesis broken on its own, starting from a profile satisfying all of them.
  using C = Companion;
  std::vector<std::pair<std::string, CohomologyProfile>> violators;
  violators.emplace_back("O + O(-1)", CohomologyProfile::of(bundles::O() + bundles::O(-1)));
  violators.emplace_back("O(1) + O(-1)", CohomologyProfile::of(bundles::O(1) + bundles::O(-1)));
  violators.emplace_back("O(1) + O(1)", CohomologyProfile::of(bundles::O(1) + bundles::O(1)));
  const std::vector<Cell> hypothesis_cells = {{C::O, 1, -2}, {C::O, 3, -4}, {C::O, 4, -4}, {C::O, 5, -5},
                                              {C::Q, 2, -3}, {C::Q, 3, -4}, {C::Q, 4, -5}, {C::O, 2, -3},
                                              {C::O, 1, -1}, {C::S2Q, 5, -5}};
  for (const auto& cell : hypothesis_cells)
    violators.emplace_back("O + O with " + to_string(cell) + " = 1",
                           external_copy(bundles::O() + bundles::O(), {{cell, 1}}));
  for (const auto& [name, profile] : violators) {
    const auto rep = check_splitting_criterion(profile);
    if (rep.verdict != SplitVerdict::HypothesesNotMet) fail(r, fmt::format("{}: verdict {}", name, to_string(rep.verdict)));
  }
  r.details.push_back(fmt::format("{} hypothesis violations rejected", violators.size()));
  return {r};
}

// Bundles without inner cohomology --------------------------------------------------

Check classification() {
  auto r = make("9", "bundles without inner cohomology: listed bundles pass, bounded monad search is empty");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, BundleExpr>> listed;
  for (const auto& x : catalog_line_sums(3, {-3, 3})) listed.emplace_back(format_bundle(x), x);
  for (int t = -3; t <= 3; ++t) {
    listed.emplace_back(fmt::format("Q({})", t), twist(bundles::Q(), t));
    listed.emplace_back(fmt::format("S({})", t), twist(bundles::S(), t));
    listed.emplace_back(fmt::format("S^dual({})", t), twist(bundles::Sd(), t));
    for (int a = -3; a <= 3; ++a)
      listed.emplace_back(fmt::format("Q({}) + O({})", t, a), twist(bundles::Q(), t) + bundles::O(a));
  }
  for (const auto& [name, x] : listed)
    if (!without_inner_cohomology(x)) fail(r, name + " has inner cohomology");
  r.details.push_back(fmt::format("{} listed bundles without inner cohomology", listed.size()));
  if (without_inner_cohomology(bundles::Sym2Q())) fail(r, "S^2 Q unexpectedly has no inner cohomology");

  const std::set<std::string> labels = {kRankIdentity, kCondition1, kCondition2, kCondition3};
  for (int rank : {2, 3}) {
    const auto rep = search_monad_shapes(SearchBounds{}, rank);
    if (!rep.feasible.empty()) fail(r, fmt::format("rank {}: {} feasible shape classes", rank, rep.feasible.size()));
    for (const auto& rec : rep.records)
      if (!labels.count(rec.report.rejected_by())) fail(r, fmt::format("rank {}: record without a rejection label", rank));
    std::vector<std::string> parts;
    for (const auto& [label, n] : rep.rejections) parts.push_back(fmt::format("{} {}", label, n));
    r.details.push_back(fmt::format("rank {}: {} classes, {} shapes, feasible {}; rejections: {}", rank,
                                    rep.records.size(), rep.shapes_examined, rep.feasible.size(), fmt::join(parts, ", ")));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > 60) fail(r, fmt::format("runtime {:.1f} s exceeds 60 s", seconds));
  return {r};
}

// Serre duality ------------------------------------------------------------------------

Check serre(TwistWindow window) {
  auto r = make("10", "Serre duality over the catalog");
  std::size_t count = 0;
  const auto cat = full_catalog();
  for (const auto& x : cat) {
    const BundleExpr xd = dual(x);
    for (int t = window.lo; t <= window.hi; ++t) {
      const auto h = cohomology(x, t);
      const auto hd = cohomology(xd, -t + kCanonicalTwist);
      for (int i = 0; i <= kGrassmannianDim; ++i)
        if (h[i] != hd[kGrassmannianDim - i])
          fail_capped(r, count, fmt::format("{} at t = {}, degree {}: {} vs {}", format_bundle(x), t, i, h[i], hd[kGrassmannianDim - i]));
    }
  }
  note_overflow(r, count);
  r.details.push_back(fmt::format("{} bundles, twists {}..{}", cat.size(), window.lo, window.hi));
  return {r};
}

}  // namespace

std::vector<CriterionResult> run_criterion(int id, TwistWindow window) {
  const auto start = std::chrono::steady_clock::now();
  Check out;
  switch (id) {
    case 1: out = universal_table(); break;
    case 2: out = acm(); break;
    case 3: out = sequence_ledger(window); break;
    case 4: out = isomorphisms(window); break;
    case 5: out = regularity_suite(); break;
    case 6: out = monotonicity_and_generation(); break;
    case 7: out = g_regularity(); break;
    case 8: out = splitting(); break;
    case 9: out = classification(); break;
    case 10: out = serre(window); break;
    default: throw Error(fmt::format("no acceptance criterion {}", id));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.seconds = seconds;
  return out;
}

std::vector<CriterionResult> run_acceptance(TwistWindow window,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> all;
  for (int id = 1; id <= kCriterionCount; ++id) {
    for (auto& r : run_criterion(id, window)) {
      if (on_result) on_result(r);
      all.push_back(std::move(r));
    }
  }
  return all;
}

std::string format_result(const CriterionResult& r, bool with_details) {
  std::string out = fmt::format("[{}] {:<3} {} ({:.2f} s)\n", r.passed ? "PASS" : "FAIL", r.id, r.title, r.seconds);
  if (with_details)
    for (const auto& d : r.details) out += "       " + d + "\n";
  return out;
}

}  // namespace grasscoh
