#include "grasscoh/bundle.hpp"

#include <vector>

#include <fmt/format.h>

#include "grasscoh/error.hpp"

namespace grasscoh {

namespace {

enum class Power { Sym, Ext };

const char* power_name(Power p) { return p == Power::Sym ? "Sym" : "Wedge"; }

// Weights of a GL(2) or GL(3) representation, with multiplicity.
template <std::size_t N>
using WeightList = std::vector<std::pair<std::array<int, N>, Mult>>;

// Sym^l / Wedge^l of Sym^n of the standard GL(2) representation.
WeightList<2> gl2_power(int n, int l, Power p) {
  if (l == 0) return {{{0, 0}, 1}};
  if (l == 1) return {{{n, 0}, 1}};
  if (n == 0) {
    if (p == Power::Sym) return {{{0, 0}, 1}};
    return {};
  }
  if (n == 1) {
    if (p == Power::Sym) return {{{l, 0}, 1}};
    if (l == 2) return {{{1, 1}, 1}};
    return {};
  }
  if (p == Power::Ext && l > n + 1) return {};
  if (l == 2) {
    // Sym^n (x) Sym^n = sum_k Sigma^(2n-k,k); even k is symmetric, odd k alternating.
    WeightList<2> out;
    for (int k = (p == Power::Sym ? 0 : 1); k <= n; k += 2) out.push_back({{2 * n - k, k}, 1});
    return out;
  }
  throw UnsupportedPlethysm(fmt::format("{}^{} of Sym^{} Q is outside the supported catalog", power_name(p), l, n));
}

// Sym^l / Wedge^l of the GL(3) representation with highest weight b (b[2] == 0).
WeightList<3> gl3_power(const std::array<int, 3>& b, int l, Power p) {
  if (l == 0) return {{{0, 0, 0}, 1}};
  if (l == 1) return {{b, 1}};
  if (b == std::array<int, 3>{0, 0, 0}) {
    if (p == Power::Sym) return {{{0, 0, 0}, 1}};
    return {};
  }
  if (b == std::array<int, 3>{1, 0, 0}) {
    if (p == Power::Sym) return {{{l, 0, 0}, 1}};
    if (l == 2) return {{{1, 1, 0}, 1}};
    if (l == 3) return {{{1, 1, 1}, 1}};
    return {};
  }
  if (b == std::array<int, 3>{1, 1, 0}) {
    // Wedge^2 of the standard representation: the dual standard tensored with det.
    if (p == Power::Sym) return {{{l, l, 0}, 1}};
    if (l == 2) return {{{2, 1, 1}, 1}};
    if (l == 3) return {{{2, 2, 2}, 1}};
    return {};
  }
  const Dim rank = weyl_dim(GenPartition{b[0], b[1], b[2]});
  if (p == Power::Ext && l > rank) return {};
  throw UnsupportedPlethysm(fmt::format("{}^{} of the GL(3) weight ({},{},{}) is outside the supported catalog",
                                        power_name(p), l, b[0], b[1], b[2]));
}

BundleExpr from_q_weights(const WeightList<2>& ws) {
  BundleExpr out;
  for (const auto& [a, m] : ws) out.add(IrreducibleWeight(a, {0, 0, 0}), m);
  return out;
}

BundleExpr from_sd_weights(const WeightList<3>& ws) {
  BundleExpr out;
  for (const auto& [b, m] : ws) out.add(IrreducibleWeight({0, 0}, b), m);
  return out;
}

BundleExpr irreducible_power(const IrreducibleWeight& w, int l, Power p) {
  const auto& a = w.q_part();
  const auto& b = w.sd_part();
  const int n = a[0] - a[1];
  const int t = a[1];
  const bool has_q = n != 0;
  const bool has_sd = b != std::array<int, 3>{0, 0, 0};

  BundleExpr base;
  if (!has_sd) {
    base = from_q_weights(gl2_power(n, l, p));
  } else if (!has_q) {
    base = from_sd_weights(gl3_power(b, l, p));
  } else if (l <= 1) {
    base = tensor(from_q_weights(gl2_power(n, l, p)), from_sd_weights(gl3_power(b, l, p)));
  } else if (p == Power::Ext && l > w.rank()) {
    return {};
  } else if (l == 2) {
    // Sym^2(A(x)B) = S^2A(x)S^2B + W^2A(x)W^2B,  W^2(A(x)B) = S^2A(x)W^2B + W^2A(x)S^2B.
    const BundleExpr sa = from_q_weights(gl2_power(n, 2, Power::Sym));
    const BundleExpr wa = from_q_weights(gl2_power(n, 2, Power::Ext));
    const BundleExpr sb = from_sd_weights(gl3_power(b, 2, Power::Sym));
    const BundleExpr wb = from_sd_weights(gl3_power(b, 2, Power::Ext));
    base = p == Power::Sym ? tensor(sa, sb) + tensor(wa, wb) : tensor(sa, wb) + tensor(wa, sb);
  } else {
    throw UnsupportedPlethysm(
        fmt::format("{}^{} of {} is outside the supported catalog", power_name(p), l, format_weight(w)));
  }
  return twist(base, l * t);
}

BundleExpr power(const BundleExpr& x, int j, Power p) {
  if (j < 0) throw DegreeOutOfRange(fmt::format("{}^{}: degree must be non-negative", power_name(p), j));
  // acc[i] holds the i-th power of the part of x processed so far.
  std::vector<BundleExpr> acc(j + 1);
  acc[0] = bundles::O();
  for (const auto& [w, mult] : x.summands()) {
    std::vector<BundleExpr> pw(j + 1);
    for (int l = 0; l <= j; ++l) pw[l] = irreducible_power(w, l, p);
    for (Mult copy = 0; copy < mult; ++copy) {
      std::vector<BundleExpr> next(j + 1);
      for (int i = 0; i <= j; ++i) {
        for (int l = 0; l <= i; ++l) {
          if (pw[l].is_zero() || acc[i - l].is_zero()) continue;
          next[i] += tensor(pw[l], acc[i - l]);
        }
      }
      acc = std::move(next);
    }
  }
  return acc[j];
}

std::string twist_suffix(int t) { return t == 0 ? "" : fmt::format("({})", t); }

std::string sym_name(int n, const char* base, NameStyle style) {
  if (style == NameStyle::Ascii) return fmt::format("Sym^{} {}", n, base);
  if (n == 2) return fmt::format("S²{}", base);
  if (n == 3) return fmt::format("S³{}", base);
  return fmt::format("S^{}{}", n, base);
}

}  // namespace

IrreducibleWeight::IrreducibleWeight(std::array<int, 2> a, std::array<int, 3> b) : a_(a), b_(b) {
  if (a_[0] < a_[1] || b_[0] < b_[1] || b_[1] < b_[2]) {
    throw InvalidPartition(
        fmt::format("weight ({},{} | {},{},{}) is not dominant", a_[0], a_[1], b_[0], b_[1], b_[2]));
  }
  const int c = b_[2];
  for (int& x : b_) x -= c;
  for (int& x : a_) x -= c;
}

Dim IrreducibleWeight::rank() const { return weyl_dim(q_partition()) * weyl_dim(sd_partition()); }

IrreducibleWeight IrreducibleWeight::dual() const {
  return IrreducibleWeight({-a_[1], -a_[0]}, {-b_[2], -b_[1], -b_[0]});
}

std::string IrreducibleWeight::to_string() const {
  return fmt::format("({},{}|{},{},{})", a_[0], a_[1], b_[0], b_[1], b_[2]);
}

BundleExpr::BundleExpr(const IrreducibleWeight& w, Mult mult) { add(w, mult); }

Dim BundleExpr::rank() const {
  Dim r = 0;
  for (const auto& [w, m] : summands_) r += m * w.rank();
  return r;
}

Mult BundleExpr::summand_count() const {
  Mult n = 0;
  for (const auto& [w, m] : summands_) n += m;
  return n;
}

void BundleExpr::add(const IrreducibleWeight& w, Mult mult) {
  if (mult < 0) throw Error("bundle multiplicities must be non-negative");
  if (mult == 0) return;
  summands_[w] += mult;
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& other) {
  for (const auto& [w, m] : other.summands_) add(w, m);
  return *this;
}

namespace bundles {
BundleExpr O(int t) { return BundleExpr(IrreducibleWeight({t, t}, {0, 0, 0})); }
BundleExpr Q() { return BundleExpr(IrreducibleWeight({1, 0}, {0, 0, 0})); }
BundleExpr S() { return BundleExpr(IrreducibleWeight({0, 0}, {0, 0, -1})); }
BundleExpr Sd() { return BundleExpr(IrreducibleWeight({0, 0}, {1, 0, 0})); }
BundleExpr Sym2Q() { return BundleExpr(IrreducibleWeight({2, 0}, {0, 0, 0})); }
BundleExpr trivial(Mult n, int t) { return BundleExpr(IrreducibleWeight({t, t}, {0, 0, 0}), n); }
}  // namespace bundles

BundleExpr tensor(const BundleExpr& x, const BundleExpr& y) {
  BundleExpr out;
  for (const auto& [w1, m1] : x.summands()) {
    for (const auto& [w2, m2] : y.summands()) {
      const auto qs = lr_tensor(w1.q_partition(), w2.q_partition(), 2);
      const auto ss = lr_tensor(w1.sd_partition(), w2.sd_partition(), 3);
      for (const auto& [qa, qc] : qs) {
        for (const auto& [sb, sc] : ss) {
          out.add(IrreducibleWeight({qa[0], qa[1]}, {sb[0], sb[1], sb[2]}), m1 * m2 * qc * sc);
        }
      }
    }
  }
  return out;
}

BundleExpr dual(const BundleExpr& x) {
  BundleExpr out;
  for (const auto& [w, m] : x.summands()) out.add(w.dual(), m);
  return out;
}

BundleExpr twist(const BundleExpr& x, int t) {
  BundleExpr out;
  for (const auto& [w, m] : x.summands()) out.add(w.twisted(t), m);
  return out;
}

BundleExpr scale(const BundleExpr& x, Mult n) {
  BundleExpr out;
  for (const auto& [w, m] : x.summands()) out.add(w, m * n);
  return out;
}

BundleExpr sym(const BundleExpr& x, int j) { return power(x, j, Power::Sym); }

BundleExpr ext(const BundleExpr& x, int j) { return power(x, j, Power::Ext); }

std::string format_weight(const IrreducibleWeight& w, NameStyle style) {
  const auto& a = w.q_part();
  const auto& b = w.sd_part();
  const int n = a[0] - a[1];
  const int t = a[1];
  const bool ascii = style == NameStyle::Ascii;
  const char* sd = ascii ? "Sd" : "S^∨";

  if (b == std::array<int, 3>{0, 0, 0}) {
    if (n == 0) return t == 0 ? "O" : fmt::format("O({})", t);
    if (n == 1) return "Q" + twist_suffix(t);
    return sym_name(n, "Q", style) + twist_suffix(t);
  }
  if (n == 0) {
    if (b == std::array<int, 3>{1, 0, 0}) return sd + twist_suffix(t);
    if (b == std::array<int, 3>{1, 1, 0}) return "S" + twist_suffix(t - 1);
    if (b[1] == 0) return sym_name(b[0], sd, style) + twist_suffix(t);
    if (b[0] == b[1]) return sym_name(b[0], "S", style) + twist_suffix(t - b[0]);
  }
  const std::string q = n == 1 ? std::string("Q") : sym_name(n, "Q", style);
  const char* times = ascii ? "*" : "⊗";
  if (b == std::array<int, 3>{1, 0, 0}) {
    return t == 0 ? fmt::format("{}{}{}", q, times, sd) : fmt::format("({}{}{})({})", q, times, sd, t);
  }
  if (b == std::array<int, 3>{1, 1, 0}) {
    return t == 1 ? fmt::format("{}{}S", q, times) : fmt::format("({}{}S)({})", q, times, t - 1);
  }
  if (ascii) return fmt::format("W({},{};{},{},{})", a[0], a[1], b[0], b[1], b[2]);
  return fmt::format("Σ^({},{})Q⊗Σ^({},{},{})S^∨", a[0], a[1], b[0], b[1], b[2]);
}

std::string format_bundle(const BundleExpr& x, NameStyle style) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, m] : x.summands()) {
    if (!out.empty()) out += " + ";
    if (m == 1) {
      out += format_weight(w, style);
    } else if (style == NameStyle::Ascii) {
      out += fmt::format("{}*{}", m, format_weight(w, style));
    } else {
      out += fmt::format("{}^{}", format_weight(w, style), m);
    }
  }
  return out;
}

}  // namespace grasscoh
