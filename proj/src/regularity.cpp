#include "grasscoh/regularity.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace grasscoh {

namespace {

std::string describe(const std::vector<Cell>& cells) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(to_string(c));
  return fmt::format("{}", fmt::join(parts, ", "));
}

std::string cells_message(const std::vector<Cell>& missing) {
  return "incomplete cohomology profile, missing cells: " + describe(missing);
}

}  // namespace

std::string to_string(Companion c) {
  switch (c) {
    case Companion::O:
      return "O";
    case Companion::Q:
      return "Q";
    case Companion::S2Q:
      return "S2Q";
  }
  return "?";
}

Companion companion_from_string(const std::string& s) {
  if (s == "O") return Companion::O;
  if (s == "Q") return Companion::Q;
  if (s == "S2Q") return Companion::S2Q;
  throw Error(fmt::format("unknown companion '{}' (expected O, Q or S2Q)", s));
}

BundleExpr companion_bundle(Companion c) {
  switch (c) {
    case Companion::O:
      return bundles::O();
    case Companion::Q:
      return bundles::Q();
    case Companion::S2Q:
      return bundles::Sym2Q();
  }
  return {};
}

std::string to_string(const Cell& c) {
  const char* f = c.companion == Companion::O ? "F" : c.companion == Companion::Q ? "F*Q" : "F*S2Q";
  return fmt::format("H^{}({}({}))", c.degree, f, c.twist);
}

IncompleteProfile::IncompleteProfile(std::vector<Cell> missing)
    : Error(cells_message(missing)), missing_(std::move(missing)) {}

CohomologyProfile CohomologyProfile::of(const BundleExpr& f) {
  CohomologyProfile p;
  p.rank_ = static_cast<int>(f.rank());
  p.source_ = f;
  p.tensored_ = {f, tensor(f, bundles::Q()), tensor(f, bundles::Sym2Q())};
  return p;
}

CohomologyProfile CohomologyProfile::external(int rank, std::map<Cell, Dim> cells) {
  CohomologyProfile p;
  p.rank_ = rank;
  for (const auto& [c, d] : cells) {
    if (c.degree < 0 || c.degree > kGrassmannianDim) throw Error(fmt::format("cell {} has an invalid degree", to_string(c)));
    if (d < 0) throw Error(fmt::format("cell {} has a negative dimension", to_string(c)));
  }
  p.cells_ = std::move(cells);
  return p;
}

CohomologyProfile CohomologyProfile::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("cells")) {
    throw Error("profile JSON must be an object with \"rank\" and \"cells\"");
  }
  std::map<Cell, Dim> cells;
  try {
    for (const auto& row : j.at("cells")) {
      if (!row.is_array() || row.size() != 4) throw Error("each profile cell must be [companion, degree, twist, dim]");
      const Cell c{companion_from_string(row[0].get<std::string>()), row[1].get<int>(), row[2].get<int>()};
      const Dim d = row[3].get<Dim>();
      auto [it, inserted] = cells.emplace(c, d);
      if (!inserted && it->second != d) throw Error(fmt::format("cell {} stated twice with different values", to_string(c)));
    }
    return external(j.at("rank").get<int>(), std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw Error(fmt::format("malformed profile JSON: {}", e.what()));
  }
}

std::optional<Dim> CohomologyProfile::lookup(const Cell& c) const {
  if (source_) {
    if (c.degree < 0 || c.degree > kGrassmannianDim) return 0;
    auto [it, fresh] = memo_.try_emplace({c.companion, c.twist});
    if (fresh) it->second = cohomology(tensored_[static_cast<std::size_t>(c.companion)], c.twist);
    return it->second[c.degree];
  }
  auto it = cells_.find(c);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

Dim CohomologyProfile::h(const Cell& c) const {
  if (auto v = lookup(c)) return *v;
  throw IncompleteProfile({c});
}

void CohomologyProfile::require(const std::vector<Cell>& cells) const {
  std::vector<Cell> missing;
  for (const auto& c : cells)
    if (!lookup(c)) missing.push_back(c);
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw IncompleteProfile(std::move(missing));
  }
}

std::vector<Cell> l_regularity_conditions(int m) {
  using C = Companion;
  return {
      {C::O, 1, m - 1},   {C::O, 2, m - 2},   {C::O, 3, m - 3},   {C::O, 4, m - 3},   {C::O, 5, m - 3},
      {C::O, 5, m - 4},   {C::O, 6, m - 4},   {C::Q, 2, m - 2},   {C::Q, 3, m - 3},   {C::Q, 4, m - 3},
      {C::Q, 4, m - 4},   {C::Q, 5, m - 4},   {C::S2Q, 3, m - 3}, {C::S2Q, 4, m - 4}, {C::S2Q, 5, m - 5},
  };
}

RegularityCheck is_L_regular(const CohomologyProfile& p, int m) {
  const auto conditions = l_regularity_conditions(m);
  p.require(conditions);
  RegularityCheck out;
  for (const auto& c : conditions)
    if (p.h(c) != 0) out.failing.push_back(c);
  out.regular = out.failing.empty();
  return out;
}

GRegularityCheck is_G_regular_window(const CohomologyProfile& p, int m, int window) {
  std::vector<Cell> needed;
  for (int k = 0; k <= window; ++k) {
    for (const auto& c : l_regularity_conditions(m + k)) needed.push_back(c);
    needed.push_back({Companion::Q, 1, m + k - 1});
    needed.push_back({Companion::S2Q, 2, m + k - 2});
  }
  p.require(needed);

  GRegularityCheck out;
  for (int k = 0; k <= window; ++k) {
    for (const auto& c : l_regularity_conditions(m + k))
      if (p.h(c) != 0) out.failing.emplace_back(k, c);
    for (const Cell c : {Cell{Companion::Q, 1, m + k - 1}, Cell{Companion::S2Q, 2, m + k - 2}})
      if (p.h(c) != 0) out.failing.emplace_back(k, c);
  }
  out.regular = out.failing.empty();
  return out;
}

RegularityReport lreg(const BundleExpr& x) {
  RegularityReport report;
  if (x.is_zero()) {
    report.kind = RegularityReport::Kind::MinusInfinity;
    return report;
  }
  const auto profile = CohomologyProfile::of(x);
  int bound = 0;
  for (const auto& part : {x, tensor(x, bundles::Q()), tensor(x, bundles::Sym2Q())}) {
    for (const auto& [w, m] : part.summands()) bound = std::max(bound, scan_window(w).hi);
  }
  // Conditions reach down to twist m - 5; beyond these ends every inner cell
  // vanishes and h^6(F(m-4)) is nonzero (below) or zero (above).
  report.scanned = {-bound - 6, bound + 6};
  std::vector<bool> regular;
  for (int m = report.scanned.lo; m <= report.scanned.hi; ++m) regular.push_back(is_L_regular(profile, m).regular);
  if (regular.front() || !regular.back()) {
    throw InvariantViolation(fmt::format("lreg scan [{},{}] for {} does not bracket the regularity threshold",
                                         report.scanned.lo, report.scanned.hi, format_bundle(x)));
  }
  const auto first = std::find(regular.begin(), regular.end(), true);
  report.lreg = report.scanned.lo + static_cast<int>(first - regular.begin());
  const auto gap = std::find(first, regular.end(), false);
  if (gap != regular.end()) {
    report.monotone = false;
    report.monotonicity_violation = report.scanned.lo + static_cast<int>(gap - regular.begin());
  }
  report.failing_below = is_L_regular(profile, report.lreg - 1).failing;
  report.g_regular = is_G_regular_window(profile, report.lreg, report.g_window).regular;
  return report;
}

bool is_globally_generated(const BundleExpr& x) {
  return std::all_of(x.summands().begin(), x.summands().end(),
                     [](const auto& s) { return s.first.q_part()[1] >= s.first.sd_part()[0]; });
}

std::string to_string(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::HypothesesNotMet:
      return "hypotheses-not-met";
    case SplitVerdict::SplitAsOPlusOa:
      return "split-as-O-plus-O(a)";
    case SplitVerdict::IsomorphicToQ:
      return "isomorphic-to-Q";
    case SplitVerdict::InconsistentProfile:
      return "inconsistent-profile";
  }
  return "?";
}

SplittingReport check_splitting_criterion(const CohomologyProfile& p) {
  if (p.rank() != 2) throw RankMismatch(fmt::format("splitting criterion needs a rank-2 bundle, got rank {}", p.rank()));
  using C = Companion;
  const std::vector<Cell> vanishing = {
      {C::O, 1, -2}, {C::O, 3, -4}, {C::O, 4, -4}, {C::O, 5, -5}, {C::Q, 2, -3}, {C::Q, 3, -4}, {C::Q, 4, -5},
  };
  // Consequence of Le Potier vanishing for genuine bundles; required input for external profiles.
  const Cell le_potier{C::O, 2, -3};
  const std::vector<SplitBranch> branches = {
      {"i", {C::O, 6, -5}, 0},   {"ii", {C::S2Q, 3, -4}, 0}, {"iii", {C::Q, 5, -5}, 0},
      {"iv", {C::S2Q, 4, -5}, 0}, {"v", {C::S2Q, 5, -6}, 0},
  };

  std::vector<Cell> needed = l_regularity_conditions(0);
  for (const auto& c : l_regularity_conditions(-1)) needed.push_back(c);
  needed.insert(needed.end(), vanishing.begin(), vanishing.end());
  needed.push_back(le_potier);
  for (const auto& b : branches) needed.push_back(b.cell);
  p.require(needed);

  SplittingReport report;
  const auto at0 = is_L_regular(p, 0);
  if (!at0.regular) report.unmet.push_back("Lreg(E) = 0: E is not L-regular, failing " + describe(at0.failing));
  if (is_L_regular(p, -1).regular) report.unmet.push_back("Lreg(E) = 0: E(-1) is already L-regular");
  for (const auto& c : vanishing)
    if (p.h(c) != 0) report.unmet.push_back(fmt::format("{} = 0 fails ({})", to_string(c), p.h(c)));
  if (p.h(le_potier) != 0) report.unmet.push_back(fmt::format("{} = 0 fails ({})", to_string(le_potier), p.h(le_potier)));

  for (auto b : branches) {
    b.value = p.h(b.cell);
    if (b.value != 0) report.fired.push_back(b);
  }
  if (!report.unmet.empty()) {
    report.verdict = SplitVerdict::HypothesesNotMet;
    return report;
  }
  auto fired = [&](const std::string& label) {
    return std::any_of(report.fired.begin(), report.fired.end(), [&](const SplitBranch& b) { return b.label == label; });
  };
  if (fired("iii") || fired("iv") || fired("v") || (fired("i") && fired("ii")) || report.fired.empty()) {
    report.verdict = SplitVerdict::InconsistentProfile;
  } else if (fired("i")) {
    report.verdict = SplitVerdict::SplitAsOPlusOa;
  } else {
    report.verdict = SplitVerdict::IsomorphicToQ;
  }
  return report;
}

nlohmann::json to_json(const RegularityReport& r) {
  nlohmann::json j;
  if (r.kind == RegularityReport::Kind::MinusInfinity) {
    j["lreg"] = "-inf";
    return j;
  }
  j["lreg"] = r.lreg;
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& c : r.failing_below) failing.push_back({to_string(c.companion), c.degree, c.twist});
  j["failing_at_lreg_minus_1"] = std::move(failing);
  j["scanned"] = {r.scanned.lo, r.scanned.hi};
  j["monotone"] = r.monotone;
  j["g_regular_window"] = {{"window", r.g_window}, {"regular", r.g_regular}};
  return j;
}

nlohmann::json to_json(const SplittingReport& r) {
  nlohmann::json fired = nlohmann::json::array();
  for (const auto& b : r.fired) fired.push_back({{"branch", b.label}, {"cell", to_string(b.cell)}, {"dim", b.value}});
  return {{"verdict", to_string(r.verdict)}, {"unmet", r.unmet}, {"fired", std::move(fired)}};
}

}  // namespace grasscoh
