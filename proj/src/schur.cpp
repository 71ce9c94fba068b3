#include "grasscoh/schur.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "grasscoh/error.hpp"

namespace grasscoh {

namespace {

void check_monotone(const std::vector<int>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i - 1] < parts[i]) {
      throw InvalidPartition(fmt::format("({}) is not non-increasing", fmt::join(parts, ",")));
    }
  }
}

Dim checked_mul(Dim a, Dim b) {
  Dim r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("integer overflow in dimension formula");
  return r;
}

// Fillings of nu/lam are built one label at a time. The boxes carrying each
// label form a horizontal strip; fill[r][k] counts boxes labelled k+1 in row r.
// Shapes are kept zero-padded to max_rows.
struct LrSearch {
  std::vector<int> mu;
  std::size_t max_rows = 0;
  LRExpansion* out = nullptr;
  std::vector<int> shape;
  std::vector<std::vector<int>> fill;

  bool lattice_ok() const {
    // Reading word: rows top to bottom, each row right to left. Labels increase
    // left to right within a row, so right to left they decrease.
    std::vector<int> seen(mu.size(), 0);
    for (const auto& row : fill) {
      for (std::size_t k = mu.size(); k-- > 0;) {
        for (int c = 0; c < row[k]; ++c) {
          ++seen[k];
          if (k > 0 && seen[k] > seen[k - 1]) return false;
        }
      }
    }
    return true;
  }

  void place_label(std::size_t k) {
    if (k == mu.size()) {
      if (lattice_ok()) (*out)[GenPartition(shape)] += 1;
      return;
    }
    const std::vector<int> before = shape;
    distribute(k, k, mu[k], before);
  }

  // Put `remaining` boxes labelled k+1 into rows r, r+1, ...; rows above k are
  // excluded because the lattice condition forbids them.
  void distribute(std::size_t k, std::size_t r, int remaining, const std::vector<int>& before) {
    if (remaining == 0) {
      place_label(k + 1);
      return;
    }
    if (r >= max_rows) return;
    const int cap = r == 0 ? before[0] + remaining : before[r - 1];
    const int room = std::min(remaining, cap - before[r]);
    for (int n = room; n >= 0; --n) {
      shape[r] = before[r] + n;
      fill[r][k] = n;
      distribute(k, r + 1, remaining - n, before);
    }
    shape[r] = before[r];
    fill[r][k] = 0;
  }
};

LRExpansion lr_nonnegative(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t max_len) {
  LRExpansion out;
  LrSearch search;
  for (int m : mu)
    if (m > 0) search.mu.push_back(m);
  search.max_rows = max_len;
  search.out = &out;
  search.shape.assign(max_len, 0);
  for (std::size_t i = 0; i < lam.size(); ++i) search.shape[i] = lam[i];
  search.fill.assign(max_len, std::vector<int>(search.mu.size(), 0));
  search.place_label(0);
  return out;
}

}  // namespace

GenPartition::GenPartition(std::initializer_list<int> parts) : parts_(parts) { check_monotone(parts_); }

GenPartition::GenPartition(std::vector<int> parts) : parts_(std::move(parts)) { check_monotone(parts_); }

GenPartition GenPartition::shifted(int c) const {
  std::vector<int> p = parts_;
  for (int& x : p) x += c;
  return GenPartition(std::move(p));
}

GenPartition GenPartition::dual() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  for (int& x : p) x = -x;
  return GenPartition(std::move(p));
}

std::size_t GenPartition::length() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x != 0; }));
}

std::string GenPartition::to_string() const { return fmt::format("({})", fmt::join(parts_, ",")); }

LRExpansion lr_tensor(const GenPartition& lam, const GenPartition& mu, std::size_t max_len) {
  if (lam.size() > max_len || mu.size() > max_len) {
    throw InvalidPartition(fmt::format("inputs {} and {} exceed max_len {}", lam.to_string(), mu.to_string(), max_len));
  }
  const int lam_shift = lam.size() == 0 ? 0 : std::min(0, lam[lam.size() - 1]);
  const int mu_shift = mu.size() == 0 ? 0 : std::min(0, mu[mu.size() - 1]);
  // A negative last part forces the GL(max_len) interpretation, where padding
  // zeros must be shifted too; that only makes sense when the length is full.
  if ((lam_shift < 0 && lam.size() != max_len) || (mu_shift < 0 && mu.size() != max_len)) {
    throw InvalidPartition("negative parts require inputs of length max_len");
  }
  std::vector<int> l(lam.parts().begin(), lam.parts().end());
  std::vector<int> m(mu.parts().begin(), mu.parts().end());
  for (int& x : l) x -= lam_shift;
  for (int& x : m) x -= mu_shift;

  LRExpansion shifted = lr_nonnegative(l, m, max_len);
  const int back = lam_shift + mu_shift;
  if (back == 0) return shifted;
  LRExpansion out;
  for (const auto& [nu, c] : shifted) out.emplace(nu.shifted(back), c);
  return out;
}

Dim lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu) {
  const std::size_t n = std::max({lam.size(), mu.size(), nu.size()});
  std::vector<int> l(lam.parts().begin(), lam.parts().end());
  std::vector<int> m(mu.parts().begin(), mu.parts().end());
  std::vector<int> v(nu.parts().begin(), nu.parts().end());
  l.resize(n, 0);
  m.resize(n, 0);
  v.resize(n, 0);
  const auto expansion = lr_nonnegative(l, m, n);
  auto it = expansion.find(GenPartition(v));
  return it == expansion.end() ? 0 : it->second;
}

Dim weyl_polynomial(std::span<const int> v) {
  // Numerator and denominator are reduced pairwise so intermediate values stay
  // near the size of the final answer.
  Dim num = 1;
  Dim den = 1;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Dim a = static_cast<Dim>(v[i]) - v[j] + static_cast<Dim>(j - i);
      Dim b = static_cast<Dim>(j - i);
      if (a == 0) return 0;
      const Dim g1 = std::gcd(a, den);
      a /= g1;
      den /= g1;
      const Dim g2 = std::gcd(num, b);
      num /= g2;
      b /= g2;
      num = checked_mul(num, a);
      den = checked_mul(den, b);
      const Dim g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) throw InvariantViolation("Weyl dimension formula produced a non-integer");
  return num;
}

Dim weyl_dim(const GenPartition& lam) { return weyl_polynomial(lam.parts()); }

}  // namespace grasscoh
