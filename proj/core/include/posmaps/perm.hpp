#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1,...,n}, cycle structure, and the cyclic shifts tau(n,k).
 *
 * Points are 1-based at the API boundary: apply(i) takes and returns values in
 * 1..n, images() reports sigma(1),...,sigma(n). Storage is 0-based.
 */

#include <string>
#include <string_view>
#include <vector>

namespace posmaps {

class Permutation {
 public:
  /// Validates that `images` (1-based) is a bijection of {1,...,n}.
  static Permutation from_images(const std::vector<int>& images);
  static Permutation identity(int n);
  /// Cyclic shift i -> i+k (mod n), with values kept in 1..n. Requires 1 <= k <= n.
  static Permutation tau(int n, int k);
  /// Parses "tau:n:k", "images:2,1,4,3" or "id:n".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(map_.size()); }
  int apply(int i) const;
  int operator()(int i) const { return apply(i); }
  std::vector<int> images() const;

  Permutation inverse() const;
  bool is_identity() const;

  // Storage-level access for hot loops: sigma(i+1)-1.
  int apply0(int i) const { return map_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : map_(std::move(zero_based)) {}
  std::vector<int> map_;
};

/// (a o b)(i) = a(b(i)). Degrees must agree.
Permutation compose(const Permutation& a, const Permutation& b);

struct CycleDecomposition {
  int n = 0;
  // Canonical: each cycle starts at its smallest element, cycles sorted by
  // that element, fixed points included as length-1 cycles. 1-based.
  std::vector<std::vector<int>> cycles;

  std::string to_string() const;
};

CycleDecomposition cycle_decompose(const Permutation& sigma);
/// Rebuilds a permutation; cycles must be disjoint and cover {1,...,n}.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

struct CycleLengths {
  int l_min = 0;
  int l_max = 0;
};

CycleLengths min_max_cycle_length(const Permutation& sigma);

bool is_involution(const Permutation& sigma);
/// Sorted 1-based fixed points.
std::vector<int> fixed_points(const Permutation& sigma);
/// True when sigma is a single cycle of length n.
bool is_full_cycle(const Permutation& sigma);

}  // namespace posmaps
