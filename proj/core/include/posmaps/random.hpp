#pragma once

#include <cstdint>

#include "posmaps/matrix.hpp"

namespace posmaps {

// Counter-based stream: the sequence drawn for (seed, stream) depends on
// nothing else, so samples can be generated in any order or in parallel.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Standard complex Gaussian (independent N(0, 1/2) parts).
  cplx complex_normal();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace posmaps
