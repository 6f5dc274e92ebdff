#pragma once

/**
 * @file matrix.hpp
 * @brief Dense complex matrices and the Hermitian linear algebra the rest of
 * the library is built on.
 *
 * Indices are 0-based. Tensor products use first-factor-major block order:
 * (A (x) B)[(i,p),(j,q)] = A[i,j] * B[p,q], row index i*dim(B)+p.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace posmaps {

using cplx = std::complex<double>;

/// Absolute tolerance on the minimum eigenvalue for PSD tests.
inline constexpr double kDefaultPsdTol = 1e-9;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix identity(std::size_t n);
  /// n x n matrix with a single 1 at (i, j).
  static CMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static CMatrix diagonal(std::span<const double> values);
  static CMatrix ones(std::size_t n);
  /// Column vector (size x 1).
  static CMatrix column(std::span<const cplx> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;
  /// max |M - M*|.
  double hermitian_defect() const;
  double max_abs() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(CMatrix a, cplx s);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// max_ij |A - B|; shapes must match.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool is_hermitian(const CMatrix& m, double tol = 1e-10);

CMatrix kron(const CMatrix& a, const CMatrix& b);
/// Transposes the second factor of a (k*n) x (k*n) matrix on C^k (x) C^n.
CMatrix partial_transpose(const CMatrix& x, std::size_t k, std::size_t n);
/// Entrywise (Schur/Hadamard) product.
CMatrix schur_product(const CMatrix& a, const CMatrix& b);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max_k ||M v_k - lambda_k v_k||
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
  double residual = 0.0;
};

/// Cyclic Jacobi on a Hermitian matrix. Throws ContractError if the input is
/// not Hermitian to within 1e-9 relative to its largest entry.
EigenDecomposition hermitian_eigen(const CMatrix& m);
SpectrumResult hermitian_spectrum(const CMatrix& m);

double min_eigenvalue(const CMatrix& m);
bool is_psd(const CMatrix& m, double tol = kDefaultPsdTol);

struct NegativePart {
  CMatrix minus;      // sum over negative eigenvalues of (-lambda) v v*
  double norm = 0.0;  // operator norm of `minus`
};

/// Spectral split M = M+ - M- with M+ M- = 0.
NegativePart negative_part(const CMatrix& m);

/// Singular values of any rectangular matrix, descending (one-sided Jacobi).
std::vector<double> singular_values(const CMatrix& m);
/// Number of singular values above rel_tol * largest.
std::size_t numerical_rank(const CMatrix& m, double rel_tol = 1e-8);

}  // namespace posmaps
