#pragma once

/**
 * @file spa.hpp
 * @brief Structural physical approximation of Theta and its explicit separable
 * decomposition when a = n - 1.
 */

#include <string>
#include <vector>

#include "posmaps/dtype.hpp"
#include "posmaps/matrix.hpp"

namespace posmaps {

struct SpaState {
  CMatrix matrix;               // n^2 x n^2, trace 1
  double lambda_star = 0.0;     // 1 / (1 + n^2 ||W-||)
  double w_minus_norm = 0.0;    // ||W-||, W = C / Tr C
  double choi_minus_norm = 0.0; // ||C-||
  double trace_choi = 0.0;
  bool map_positive = true;     // false: formula evaluated for a map not known to be positive
};

/// SPA = (||C-|| I (x) I + C) / (Tr C + n^2 ||C-||), with ||C-|| taken from the
/// full spectrum of C.
SpaState spa_state(const MapParams& p);

/// W~(lambda) = (1 - lambda)/n^2 I (x) I + lambda W. Exposed for checking that
/// lambda_star is the largest lambda keeping it PSD.
CMatrix spa_segment(const MapParams& p, double lambda);

enum class TermKind { sigma_ij, diagonal };

struct SeparableTerm {
  TermKind kind = TermKind::sigma_ij;
  int i = 0;  // 1-based. sigma_ij: i < j. diagonal: E_ii (x) E_jj with j = sigma^{-1}(i)
  int j = 0;
  CMatrix matrix;
  double weight = 0.0;
  double min_eigenvalue = 0.0;
  double gamma_min_eigenvalue = 0.0;
  double factorization_residual = 0.0;  // sigma_ij vs (D (x) D) R (D (x) D)*; 0 for diagonal
};

struct SeparableDecomposition {
  std::vector<SeparableTerm> terms;
  double normalization = 0.0;  // 1 / (n(n-2) + sum c + n^2)
  double residual = 0.0;       // max |SPA - sum weight * term|
  double r_min_eigenvalue = 0.0;
  double r_gamma_min_eigenvalue = 0.0;
};

/// The 4x4 matrix on C^2 (x) C^2 every sigma_ij is built from.
CMatrix r_matrix();
/// n x 2 isometry e_i e_1* + e_j e_2* (1-based i, j).
CMatrix d_ij(int n, int i, int j);
/// E_ii(x)E_ii + E_jj(x)E_jj + E_ii(x)E_jj + E_jj(x)E_ii - E_ij(x)E_ij - E_ji(x)E_ji.
CMatrix sigma_ij(int n, int i, int j);

/// Requires a = n - 1, l_min(sigma) >= 2 and an established positivity verdict;
/// otherwise throws PreconditionError.
SeparableDecomposition separable_decomposition(const MapParams& p);

struct PptResult {
  bool is_ppt = false;
  double min_eig_of_gamma = 0.0;
};

/// PSD test on the partial transpose of a (k n) x (k n) Hermitian matrix. For
/// 2 x 2 systems this decides separability; otherwise it is a necessary condition.
PptResult ppt_check(const CMatrix& m, std::size_t k, std::size_t n, double tol = kDefaultPsdTol);

std::string to_string(TermKind kind);

}  // namespace posmaps
