#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace grasscoh {

using Dim = std::int64_t;

/// A non-increasing integer tuple (a highest weight of GL(n)); parts may be negative.
class GenPartition {
 public:
  GenPartition() = default;
  GenPartition(std::initializer_list<int> parts);
  explicit GenPartition(std::vector<int> parts);

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }

  /// Adds c to every part.
  GenPartition shifted(int c) const;
  /// The highest weight of the dual representation: reversed and negated.
  GenPartition dual() const;
  /// Number of nonzero parts; only meaningful for non-negative tuples.
  std::size_t length() const;

  std::string to_string() const;

  auto operator<=>(const GenPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Multiplicity-weighted decomposition of a tensor product.
using LRExpansion = std::map<GenPartition, Dim>;

/// Littlewood-Richardson decomposition of lam (x) mu for GL(max_len).
///
/// Both inputs are shifted to non-negative, zero-padded to max_len, combined by
/// LR-tableaux enumeration, and shifted back; constituents with more than
/// max_len rows are discarded. Throws InvalidPartition on non-monotone input
/// or when an input has more than max_len entries.
LRExpansion lr_tensor(const GenPartition& lam, const GenPartition& mu, std::size_t max_len);

/// Single Littlewood-Richardson coefficient c^nu_{lam,mu} for ordinary
/// (non-negative) partitions.
Dim lr_coefficient(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu);

/// Weyl dimension formula for GL(n), n = lam.size(). Exact; throws on overflow.
Dim weyl_dim(const GenPartition& lam);

/// prod_{i<j} (v_i - v_j + j - i) / (j - i) for an arbitrary integer tuple.
///
/// Equals weyl_dim on dominant weights and (-1)^l(w) weyl_dim(w.v) otherwise,
/// i.e. the Euler characteristic of the corresponding homogeneous bundle.
Dim weyl_polynomial(std::span<const int> v);

}  // namespace grasscoh
