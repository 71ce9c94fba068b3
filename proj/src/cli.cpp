#include "grasscoh/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "grasscoh/acceptance.hpp"
#include "grasscoh/error.hpp"
#include "grasscoh/monad.hpp"
#include "grasscoh/parser.hpp"
#include "grasscoh/regularity.hpp"
#include "grasscoh/sequences.hpp"

namespace grasscoh::cli {

namespace {

constexpr TwistWindow kRecommendedWindow{-8, 8};

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TwistWindow window_flag(const std::string& text, std::ostream& err) {
  TwistWindow w = default_window();
  if (!text.empty()) {
    auto parsed = parse_window(text);
    if (!parsed) throw UsageError(fmt::format("bad twist range '{}', expected a..b", text));
    w = *parsed;
  }
  if (w.lo > kRecommendedWindow.lo || w.hi < kRecommendedWindow.hi) {
    err << fmt::format("warning: twist window {}..{} is narrower than {}..{}; some checks need the wider window\n",
                       w.lo, w.hi, kRecommendedWindow.lo, kRecommendedWindow.hi);
  }
  return w;
}

std::string display(const BundleExpr& x) { return format_bundle(x, NameStyle::Display); }

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// coh ------------------------------------------------------------------------

int cmd_coh(const std::string& expr, const TwistWindow& w, bool json, std::ostream& out) {
  const BundleExpr x = parse_bundle(expr);
  if (json) {
    print_json(out, to_json(cohomology_table(x, w)));
    return kExitOk;
  }
  out << fmt::format("{}  rank {}\n", display(x), x.rank());
  out << fmt::format("{:>5}", "t");
  for (int i = 0; i <= kGrassmannianDim; ++i) out << fmt::format(" {:>8}", fmt::format("h^{}", i));
  out << "\n";
  for (int t = w.lo; t <= w.hi; ++t) {
    const auto h = cohomology(x, t);
    out << fmt::format("{:>5}", t);
    for (Dim d : h) out << fmt::format(" {:>8}", d);
    out << "\n";
  }
  return kExitOk;
}

int cmd_chi(const std::string& expr, const TwistWindow& w, bool json, std::ostream& out) {
  const BundleExpr x = parse_bundle(expr);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int t = w.lo; t <= w.hi; ++t) rows.push_back({t, euler_char(x, t)});
    print_json(out, {{"bundle", format_bundle(x)}, {"chi", rows}});
    return kExitOk;
  }
  out << display(x) << "\n";
  for (int t = w.lo; t <= w.hi; ++t) out << fmt::format("{:>5} {:>12}\n", t, euler_char(x, t));
  return kExitOk;
}

// regularity -------------------------------------------------------------------

std::string cells_text(const std::vector<Cell>& cells) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(to_string(c));
  return fmt::format("{}", fmt::join(parts, ", "));
}

int cmd_lreg(const std::string& expr, bool json, std::ostream& out) {
  const BundleExpr x = parse_bundle(expr);
  const auto r = lreg(x);
  if (json) {
    auto j = to_json(r);
    j["bundle"] = format_bundle(x);
    j["globally_generated"] = is_globally_generated(x);
    print_json(out, j);
    return kExitOk;
  }
  if (r.kind == RegularityReport::Kind::MinusInfinity) {
    out << fmt::format("Lreg({}) = -inf\n", display(x));
    return kExitOk;
  }
  out << fmt::format("Lreg({}) = {}\n", display(x), r.lreg);
  out << fmt::format("  failing at m = {}: {}\n", r.lreg - 1, cells_text(r.failing_below));
  out << fmt::format("  scanned m = {}..{}, monotone: {}\n", r.scanned.lo, r.scanned.hi, r.monotone ? "yes" : "no");
  out << fmt::format("  G-regular on window K = {}: {}\n", r.g_window, r.g_regular ? "yes" : "no");
  out << fmt::format("  globally generated: {}\n", is_globally_generated(x) ? "yes" : "no");
  return kExitOk;
}

int cmd_greg(const std::string& expr, std::optional<int> m, int window, bool json, std::ostream& out) {
  const BundleExpr x = parse_bundle(expr);
  const int at = m ? *m : lreg(x).lreg;
  const auto g = is_G_regular_window(CohomologyProfile::of(x), at, window);
  if (json) {
    nlohmann::json failing = nlohmann::json::array();
    for (const auto& [k, c] : g.failing) failing.push_back({{"k", k}, {"cell", to_string(c)}});
    print_json(out, {{"bundle", format_bundle(x)}, {"m", at}, {"window", window}, {"regular", g.regular},
                     {"failing", failing}});
    return kExitOk;
  }
  out << fmt::format("{} at m = {}, window K = {}: {}\n", display(x), at, window,
                     g.regular ? "G-regular" : "not G-regular");
  for (const auto& [k, c] : g.failing) out << fmt::format("  k = {}: {} != 0\n", k, to_string(c));
  return kExitOk;
}

int cmd_split(const std::string& path, const std::string& expr, bool json, std::ostream& out) {
  if (path.empty() == expr.empty()) throw UsageError("split needs exactly one of PROFILE.json or --expr");
  std::optional<CohomologyProfile> profile;
  std::string name;
  if (!expr.empty()) {
    const BundleExpr x = parse_bundle(expr);
    profile = CohomologyProfile::of(x);
    name = display(x);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError(fmt::format("cannot open {}", path));
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(fmt::format("{}: {}", path, e.what()));
    }
    profile = CohomologyProfile::from_json(j);
    name = path;
  }
  const auto r = check_splitting_criterion(*profile);
  if (json) {
    print_json(out, to_json(r));
    return kExitOk;
  }
  out << fmt::format("{}: {}\n", name, to_string(r.verdict));
  for (const auto& u : r.unmet) out << "  unmet: " << u << "\n";
  for (const auto& b : r.fired) out << fmt::format("  branch {}: {} = {}\n", b.label, to_string(b.cell), b.value);
  return kExitOk;
}

// inner ------------------------------------------------------------------------

nlohmann::json support_json(const TwistSupport& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [i, row] : s)
    for (const auto& [t, d] : row) rows.push_back({i, t, d});
  return rows;
}

int cmd_inner(const std::string& expr, bool json, std::ostream& out) {
  const BundleExpr x = parse_bundle(expr);
  const std::set<int> inner{2, 3, 4};
  const auto sx = nonzero_twists(x, inner);
  const auto sq = nonzero_twists(tensor(x, bundles::Q()), inner);
  const bool without = sx.empty() && sq.empty();
  if (json) {
    print_json(out, {{"bundle", format_bundle(x)}, {"without_inner_cohomology", without}, {"E", support_json(sx)},
                     {"E*Q", support_json(sq)}});
    return kExitOk;
  }
  out << fmt::format("{}: {}\n", display(x), without ? "without inner cohomology" : "has inner cohomology");
  for (const auto& [label, s] : {std::pair{"E", &sx}, std::pair{"E⊗Q", &sq}})
    for (const auto& [i, row] : *s)
      for (const auto& [t, d] : row) out << fmt::format("  h^{}({}({})) = {}\n", i, label, t, d);
  return kExitOk;
}

// sequences --------------------------------------------------------------------

int cmd_sequences(const std::vector<std::string>& probe_exprs, const TwistWindow& w, bool printed_koz, bool json,
                  std::ostream& out) {
  std::vector<BundleExpr> probes;
  for (const auto& p : probe_exprs) probes.push_back(parse_bundle(p));
  if (probes.empty()) probes = standard_probes();
  std::vector<ExactSequenceSpec> fixtures = builtin_sequences();
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  auto report = [&](const ExactSequenceSpec& s, bool counts) {
    const auto r = verify_sequence(s, w, probes);
    if (counts) all = all && r.passed();
    if (json) {
      j.push_back({{"label", r.label},
                   {"terms", s.term_text},
                   {"alternating_rank", r.alternating_rank},
                   {"passed", r.passed()},
                   {"informational", !counts},
                   {"ledger", to_json(r)}});
      return;
    }
    out << fmt::format("[{}] {:<6} rank {:>3}, {} entries, {} nonzero{}\n", r.passed() ? "PASS" : "FAIL", r.label,
                       r.alternating_rank, r.entries.size(), r.failures().size(), counts ? "" : " (printed twist)");
    std::size_t shown = 0;
    for (const auto& f : r.failures()) {
      if (++shown > 5) break;
      out << fmt::format("         t = {}, probe {}: {}\n", f.twist, f.probe, f.alternating_sum);
    }
  };
  for (const auto& s : fixtures) report(s, true);
  if (printed_koz) report(koz_as_printed(), false);
  if (json) print_json(out, j);
  return all ? kExitOk : kExitCheckFailed;
}

// monads -------------------------------------------------------------------------

int cmd_monads(int rank, const SearchBounds& bounds, bool json, std::ostream& out) {
  const auto r = search_monad_shapes(bounds, rank);
  if (json) {
    print_json(out, to_json(r));
  } else {
    out << fmt::format("rank {}: twists {}..{}, rank A <= {}, h <= {}, k {}, s <= {}, d <= {}\n", rank, bounds.twists.lo,
                       bounds.twists.hi, bounds.max_rank_a, bounds.max_h,
                       bounds.fixed_k ? fmt::format("= {}", *bounds.fixed_k) : fmt::format("<= {}", bounds.max_k),
                       bounds.max_s, bounds.max_d);
    out << fmt::format("  {} shape classes, {} shapes, {} twist-invariance checks\n", r.records.size(),
                       r.shapes_examined, r.invariance_checks);
    for (const auto& [label, n] : r.rejections) out << fmt::format("  rejected by {}: {}\n", label, n);
    out << fmt::format("  feasible: {}\n", r.feasible.size());
    for (const auto& rec : r.feasible) out << "    " << to_json(rec.representative).dump() << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  return r.feasible.empty() ? kExitOk : kExitCheckFailed;
}

// acceptance ---------------------------------------------------------------------

int cmd_verify(const TwistWindow& w, bool json, bool details, std::ostream& out) {
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  run_acceptance(w, [&](const CriterionResult& r) {
    all = all && r.passed;
    if (json) {
      j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
    } else {
      out << format_result(r, details || !r.passed) << std::flush;
    }
  });
  if (json) {
    // Timings are left out to keep the output byte-stable.
    print_json(out, {{"criteria", j}, {"passed", all}});
  } else {
    out << (all ? "all criteria pass\n" : "some criteria fail\n");
  }
  return all ? kExitOk : kExitCheckFailed;
}

/// Joins "--twists" with its value so that ranges such as -3..1 are not
/// taken for flags.
std::vector<std::string> join_range_flags(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--twists" && i + 1 < args.size()) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

std::optional<TwistWindow> parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = parse_int(text);
    if (!n || *n < 0) return std::nullopt;
    return TwistWindow{-*n, *n};
  }
  auto lo = parse_int(std::string_view(text).substr(0, dots));
  auto hi = parse_int(std::string_view(text).substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return TwistWindow{*lo, *hi};
}

TwistWindow default_window() {
  if (const char* env = std::getenv("GRASSCOH_WINDOW")) {
    auto w = parse_window(env);
    if (!w) throw UsageError(fmt::format("GRASSCOH_WINDOW='{}' is not a twist range", env));
    return *w;
  }
  return TwistWindow{};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of homogeneous bundles on the Grassmannian of lines in P^4", "grasscoh"};
  app.require_subcommand(1);

  std::string expr, twists, path, split_expr;
  bool json = false, details = false, printed_koz = false;
  std::vector<std::string> probes;
  std::optional<int> m, fixed_k;
  int window = 10;
  int rank = 0, max_twist = 3;
  SearchBounds bounds;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", json, "Emit JSON"); };
  auto add_twists = [&](CLI::App* c) { c->add_option("--twists", twists, "Twist range a..b"); };

  auto* coh = app.add_subcommand("coh", "Cohomology table of a bundle");
  coh->add_option("EXPR", expr, "Bundle expression")->required();
  add_twists(coh);
  add_json(coh);

  auto* chi = app.add_subcommand("chi", "Euler characteristic per twist");
  chi->add_option("EXPR", expr, "Bundle expression")->required();
  add_twists(chi);
  add_json(chi);

  auto* lr = app.add_subcommand("lreg", "Least m with the bundle m-L-regular");
  lr->add_option("EXPR", expr, "Bundle expression")->required();
  add_json(lr);

  auto* gr = app.add_subcommand("greg", "Windowed G-regularity at m (default: Lreg)");
  gr->add_option("EXPR", expr, "Bundle expression")->required();
  gr->add_option("--m", m, "Regularity index");
  gr->add_option("--window", window, "Window K")->check(CLI::NonNegativeNumber);
  add_json(gr);

  auto* sp = app.add_subcommand("split", "Rank-2 splitting criterion on a profile or bundle");
  sp->add_option("PROFILE", path, "Profile JSON file");
  sp->add_option("--expr", split_expr, "Bundle expression instead of a profile");
  add_json(sp);

  auto* in = app.add_subcommand("inner", "Inner cohomology of E and E*Q");
  in->add_option("EXPR", expr, "Bundle expression")->required();
  add_json(in);

  auto* sq = app.add_subcommand("sequences", "Euler characteristic ledger of the exact sequences");
  sq->add_option("--probe", probes, "Probe bundle (repeatable)");
  sq->add_flag("--printed-koz", printed_koz, "Also report the long sequence with its printed twist");
  add_twists(sq);
  add_json(sq);

  auto* mo = app.add_subcommand("monads", "Bounded search for minimal monad shapes");
  mo->add_option("--rank", rank, "Target rank")->required()->check(CLI::PositiveNumber);
  mo->add_option("--max-twist", max_twist, "Twists range over -T..T")->check(CLI::NonNegativeNumber);
  mo->add_option("--max-rank-a", bounds.max_rank_a, "Largest rank of A")->check(CLI::NonNegativeNumber);
  mo->add_option("--max-h", bounds.max_h, "Largest number of O summands")->check(CLI::NonNegativeNumber);
  mo->add_option("--max-k", bounds.max_k, "Largest number of Q summands")->check(CLI::NonNegativeNumber);
  mo->add_option("--max-s", bounds.max_s, "Largest number of S summands")->check(CLI::NonNegativeNumber);
  mo->add_option("--max-d", bounds.max_d, "Largest number of S^dual summands")->check(CLI::NonNegativeNumber);
  mo->add_option("--fixed-k", fixed_k, "Force the number of Q summands")->check(CLI::NonNegativeNumber);
  add_json(mo);

  auto* vp = app.add_subcommand("verify-paper", "Run the acceptance suite");
  vp->alias("verify");
  vp->add_flag("--details", details, "Print details for passing criteria too");
  add_json(vp);

  std::vector<std::string> reversed = join_range_flags(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*coh) return cmd_coh(expr, window_flag(twists, err), json, out);
    if (*chi) return cmd_chi(expr, window_flag(twists, err), json, out);
    if (*lr) return cmd_lreg(expr, json, out);
    if (*gr) return cmd_greg(expr, m, window, json, out);
    if (*sp) return cmd_split(path, split_expr, json, out);
    if (*in) return cmd_inner(expr, json, out);
    if (*sq) return cmd_sequences(probes, window_flag(twists, err), printed_koz, json, out);
    if (*mo) {
      bounds.twists = {-max_twist, max_twist};
      bounds.fixed_k = fixed_k;
      return cmd_monads(rank, bounds, json, out);
    }
    if (*vp) return cmd_verify(window_flag("", err), json, details, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IncompleteProfile& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& c : e.missing()) err << "  missing " << to_string(c) << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace grasscoh::cli
