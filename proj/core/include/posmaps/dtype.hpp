#pragma once

/**
 * @file dtype.hpp
 * @brief The D-type maps Theta[a; c_1..c_n] = Delta[a; c] - id on M_n, twisted
 * by a permutation sigma.
 *
 * Delta(X) is diagonal with entry i equal to a*x_ii + c_i*x_{sigma(i),sigma(i)}.
 */

#include <vector>

#include "posmaps/matrix.hpp"
#include "posmaps/perm.hpp"

namespace posmaps {

class MapParams {
 public:
  /// Requires a > 0, every c_i > 0 and sigma.degree() == c.size().
  MapParams(Permutation sigma, double a, std::vector<double> c);

  /// X -> n*diag(X) - X, i.e. a = n, c = 0, sigma = id. The only way to get c = 0.
  static MapParams delta_n(int n);

  int n() const { return sigma_.degree(); }
  const Permutation& sigma() const { return sigma_; }
  double a() const { return a_; }
  const std::vector<double>& c() const { return c_; }
  /// c_i with 1-based i.
  double c(int i) const { return c_.at(static_cast<std::size_t>(i - 1)); }
  bool is_delta_n() const { return delta_n_; }

  /// True when all c_i are equal (within 1e-12 relative).
  bool uniform_c() const;
  double sum_c() const;

 private:
  MapParams(Permutation sigma, double a, std::vector<double> c, bool delta_n);

  Permutation sigma_;
  double a_;
  std::vector<double> c_;
  bool delta_n_ = false;
};

CMatrix delta_apply(const MapParams& p, const CMatrix& x);
CMatrix theta_apply(const MapParams& p, const CMatrix& x);

/// D = a I + sum_i c_i E_{sigma(i), i}; theta_apply(X) = diag((x_11..x_nn) D) - X.
CMatrix d_matrix(const MapParams& p);

struct ChoiMatrix {
  int n = 0;
  CMatrix matrix;  // n^2 x n^2, blocks (i,j) = Theta(E_ij) or Theta(E_ij)^T
  bool transposed_composition = false;
};

/// C = sum_ij E_ij (x) Theta(E_ij); with compose_transpose the blocks are
/// transposed (Choi matrix of T o Theta).
ChoiMatrix choi(const MapParams& p, bool compose_transpose = false);

/// Tr Theta(I_n) = n(a-1) + sum c_i.
double choi_trace(const MapParams& p);

}  // namespace posmaps
