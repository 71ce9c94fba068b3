#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "grasscoh/bott.hpp"

namespace grasscoh {

/// A complex of bundles asserted to be exact, listed left to right.
struct ExactSequenceSpec {
  std::string label;
  std::vector<BundleExpr> terms;
  /// Source text of each term, for reports.
  std::vector<std::string> term_text;
};

/// The eight sequences built from the universal sequence
/// 0 -> S^dual -> V (x) O -> Q -> 0: u, w2, +w2, +w2d, ++w2, w2+, +d, koz.
///
/// Trivial factors V, V^*, Wedge^2 V, Wedge^3 V are realized as O^5, O^5,
/// O^10, O^10. The long Koszul-type sequence `koz` uses the twist -2 on its
/// V^* (x) S^2 Q term; see `koz_as_printed()` for the +2 variant.
std::vector<ExactSequenceSpec> builtin_sequences();

/// `koz` with V^* (x) S^2 Q(2), which fails the Euler characteristic ledger.
ExactSequenceSpec koz_as_printed();

ExactSequenceSpec make_sequence(std::string label, const std::vector<std::string>& terms);

/// Reverses a sequence and dualizes every term.
ExactSequenceSpec dual_reversed(const ExactSequenceSpec& s);

struct LedgerEntry {
  std::string label;
  int twist;
  std::string probe;
  Dim alternating_sum;
};

struct SequenceReport {
  std::string label;
  Dim alternating_rank;
  std::vector<LedgerEntry> entries;
  bool passed() const;
  /// Entries with a nonzero alternating sum.
  std::vector<LedgerEntry> failures() const;
};

/// sum_k (-1)^k chi(term_k (x) probe (t)) for every twist and probe.
/// Vanishing is necessary, not sufficient, for exactness.
SequenceReport verify_sequence(const ExactSequenceSpec& s, TwistWindow twists,
                               const std::vector<BundleExpr>& probes);

/// The probes {O, Q, S, S^dual, S^2 Q}.
std::vector<BundleExpr> standard_probes();

/// JSON array of {label, twist, probe, alternating_sum}.
nlohmann::json to_json(const SequenceReport& report);

}  // namespace grasscoh
