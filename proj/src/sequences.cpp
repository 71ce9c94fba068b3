#include "grasscoh/sequences.hpp"

#include "grasscoh/parser.hpp"

namespace grasscoh {

ExactSequenceSpec make_sequence(std::string label, const std::vector<std::string>& terms) {
  ExactSequenceSpec s{std::move(label), {}, terms};
  for (const auto& t : terms) s.terms.push_back(parse_bundle(t));
  return s;
}

std::vector<ExactSequenceSpec> builtin_sequences() {
  return {
      make_sequence("u", {"Sd", "5*O", "Q"}),
      make_sequence("w2", {"Wedge^2 Sd", "10*O", "5*Q", "Sym^2 Q"}),
      make_sequence("+w2", {"Q(-2)", "5*O(-1)", "10*O", "5*Q", "Sym^2 Q"}),
      make_sequence("+w2d", {"Sym^2 Q(-3)", "5*Q(-2)", "10*O(-1)", "5*O", "Q"}),
      make_sequence("++w2", {"Sd(-2)", "5*O(-2)", "5*O(-1)", "10*O", "5*Q", "Sym^2 Q"}),
      make_sequence("w2+", {"(Wedge^2 Sd)(-3)", "10*O(-3)", "5*Q(-3)", "5*Q(-2)", "10*O(-1)", "5*O", "Q"}),
      // The Wedge^2 V factor next to S^dual enters only through its rank.
      make_sequence("+d", {"Q(-5)", "5*O(-4)", "10*O(-3)", "5*Q(-3)", "5*Q(-2)", "10*O(-1)", "Sd"}),
      make_sequence("koz", {"O(-4)", "10*O(-3)", "10*Q(-3)", "5*Sym^2 Q(-3)", "5*Sym^2 Q(-2)", "10*Q(-1)",
                            "10*O", "O(1)"}),
  };
}

ExactSequenceSpec koz_as_printed() {
  return make_sequence("koz", {"O(-4)", "10*O(-3)", "10*Q(-3)", "5*Sym^2 Q(-3)", "5*Sym^2 Q(2)", "10*Q(-1)",
                               "10*O", "O(1)"});
}

ExactSequenceSpec dual_reversed(const ExactSequenceSpec& s) {
  ExactSequenceSpec out{s.label + "^dual", {}, {}};
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) out.terms.push_back(dual(*it));
  for (auto it = s.term_text.rbegin(); it != s.term_text.rend(); ++it) out.term_text.push_back("dual(" + *it + ")");
  return out;
}

bool SequenceReport::passed() const { return alternating_rank == 0 && failures().empty(); }

std::vector<LedgerEntry> SequenceReport::failures() const {
  std::vector<LedgerEntry> out;
  for (const auto& e : entries)
    if (e.alternating_sum != 0) out.push_back(e);
  return out;
}

SequenceReport verify_sequence(const ExactSequenceSpec& s, TwistWindow twists, const std::vector<BundleExpr>& probes) {
  SequenceReport report{s.label, 0, {}};
  for (std::size_t k = 0; k < s.terms.size(); ++k) report.alternating_rank += (k % 2 == 0 ? 1 : -1) * s.terms[k].rank();
  for (const auto& probe : probes) {
    std::vector<BundleExpr> tensored;
    for (const auto& term : s.terms) tensored.push_back(tensor(term, probe));
    const std::string probe_name = format_bundle(probe);
    for (int t = twists.lo; t <= twists.hi; ++t) {
      Dim sum = 0;
      for (std::size_t k = 0; k < tensored.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * euler_char(tensored[k], t);
      report.entries.push_back({s.label, t, probe_name, sum});
    }
  }
  return report;
}

std::vector<BundleExpr> standard_probes() {
  return {bundles::O(), bundles::Q(), bundles::S(), bundles::Sd(), bundles::Sym2Q()};
}

nlohmann::json to_json(const SequenceReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : report.entries) {
    out.push_back({{"label", e.label}, {"twist", e.twist}, {"probe", e.probe}, {"alternating_sum", e.alternating_sum}});
  }
  return out;
}

}  // namespace grasscoh
