#include "posmaps/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "posmaps/errors.hpp"

namespace posmaps {

namespace {

std::string shape(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw SizeError(std::string(op) + ": shapes " + shape(a) + " and " + shape(b) + " differ");
  }
}

void require_hermitian(const CMatrix& m, const char* op) {
  if (!m.is_square()) throw SizeError(std::string(op) + ": matrix is " + shape(m));
  const double scale = std::max(1.0, m.max_abs());
  const double defect = m.hermitian_defect();
  if (defect > 1e-9 * scale) {
    throw ContractError(std::string(op) + ": matrix is not Hermitian (defect " +
                        std::to_string(defect) + ")");
  }
}

// Unitary 2x2 V = diag(1, e^{-i phi}) [[c, s], [-s, c]] that diagonalises the
// Hermitian block [[alpha, beta], [conj(beta), gamma]] via V* H V.
struct Rotation {
  double c = 1.0;
  double s = 0.0;
  cplx phase{1.0, 0.0};  // e^{-i phi}
};

Rotation jacobi_rotation(double alpha, cplx beta, double gamma) {
  const double mod = std::abs(beta);
  Rotation r;
  if (mod == 0.0) return r;
  r.phase = std::conj(beta) / mod;
  const double theta = (gamma - alpha) / (2.0 * mod);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  r.c = 1.0 / std::sqrt(t * t + 1.0);
  r.s = t * r.c;
  return r;
}

double column_residual(const CMatrix& m, const CMatrix& vecs, std::size_t k, double lambda) {
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    cplx acc = -lambda * vecs(r, k);
    for (std::size_t c = 0; c < n; ++c) acc += m(r, c) * vecs(c, k);
    worst += std::norm(acc);
  }
  return std::sqrt(worst);
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows != 0 && cols > std::numeric_limits<std::size_t>::max() / rows / sizeof(cplx)) {
    throw SizeError("matrix dimensions overflow");
  }
  data_.assign(rows * cols, cplx{0.0, 0.0});
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) {
    throw SizeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                    std::to_string(data_.size()) + " entries");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw SizeError("matrix unit index outside dimension");
  CMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::ones(std::size_t n) {
  CMatrix m(n, n);
  std::fill(m.data_.begin(), m.data_.end(), cplx{1.0, 0.0});
  return m;
}

CMatrix CMatrix::column(std::span<const cplx> values) {
  return CMatrix(values.size(), 1, std::vector<cplx>(values.begin(), values.end()));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx CMatrix::trace() const {
  if (!is_square()) throw SizeError("trace of non-square matrix " + shape(*this));
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::hermitian_defect() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw SizeError("matrix product: " + shape(a) + " times " + shape(b));
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.is_square() && m.hermitian_defect() <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (a.rows() != 0 && rows / a.rows() != b.rows()) throw SizeError("kron: dimension overflow");
  if (a.cols() != 0 && cols / a.cols() != b.cols()) throw SizeError("kron: dimension overflow");
  CMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

CMatrix partial_transpose(const CMatrix& x, std::size_t k, std::size_t n) {
  if (x.rows() != k * n || x.cols() != k * n) {
    throw SizeError("partial_transpose: expected " + std::to_string(k * n) + "x" +
                    std::to_string(k * n) + ", got " + shape(x));
  }
  CMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) out(i * n + p, j * n + q) = x(i * n + q, j * n + p);
  return out;
}

CMatrix schur_product(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "schur_product");
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = a.data()[i] * b.data()[i];
  return out;
}

EigenDecomposition hermitian_eigen(const CMatrix& m) {
  require_hermitian(m, "hermitian_eigen");
  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part.
  CMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  CMatrix v = CMatrix::identity(n);

  double total = 0.0;
  for (const auto& x : a.data()) total += std::norm(x);
  const double floor = std::numeric_limits<double>::epsilon() * std::sqrt(total);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= floor || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = a(p, q);
        if (std::abs(beta) <= 0.1 * floor / static_cast<double>(n)) continue;
        const auto rot = jacobi_rotation(a(p, p).real(), beta, a(q, q).real());
        // V = [[c, s], [-s e, c e]] with e = rot.phase.
        const cplx v00 = rot.c, v01 = rot.s;
        const cplx v10 = -rot.s * rot.phase, v11 = rot.c * rot.phase;
        for (std::size_t k = 0; k < n; ++k) {  // A <- A V
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * v00 + akq * v10;
          a(k, q) = akp * v01 + akq * v11;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V* A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(v00) * apk + std::conj(v10) * aqk;
          a(q, k) = std::conj(v01) * apk + std::conj(v11) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * v00 + vkq * v10;
          v(k, q) = vkp * v01 + vkq * v11;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    out.residual = std::max(out.residual,
                            column_residual(m, out.eigenvectors, k, out.eigenvalues[k]));
  }
  return out;
}

SpectrumResult hermitian_spectrum(const CMatrix& m) {
  auto eig = hermitian_eigen(m);
  return {std::move(eig.eigenvalues), eig.residual};
}

double min_eigenvalue(const CMatrix& m) {
  const auto spec = hermitian_spectrum(m);
  return spec.eigenvalues.empty() ? 0.0 : spec.eigenvalues.front();
}

bool is_psd(const CMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

NegativePart negative_part(const CMatrix& m) {
  const auto eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  NegativePart out{CMatrix(n, n), 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda >= 0.0) break;
    out.norm = std::max(out.norm, -lambda);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out.minus(r, c) += -lambda * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
  }
  return out;
}

std::vector<double> singular_values(const CMatrix& m) {
  // One-sided Jacobi on the columns of whichever of M, M* has fewer columns.
  CMatrix w = m.cols() <= m.rows() ? m : m.adjoint();
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();

  auto dot = [&](std::size_t p, std::size_t q) {
    cplx acc{};
    for (std::size_t r = 0; r < rows; ++r) acc += std::conj(w(r, p)) * w(r, q);
    return acc;
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = dot(p, p).real();
        const double gamma = dot(q, q).real();
        const cplx beta = dot(p, q);
        if (std::abs(beta) <= std::numeric_limits<double>::epsilon() * std::sqrt(alpha * gamma) ||
            std::abs(beta) == 0.0) {
          continue;
        }
        rotated = true;
        const auto rot = jacobi_rotation(alpha, beta, gamma);
        const cplx v00 = rot.c, v01 = rot.s;
        const cplx v10 = -rot.s * rot.phase, v11 = rot.c * rot.phase;
        for (std::size_t r = 0; r < rows; ++r) {
          const cplx wp = w(r, p), wq = w(r, q);
          w(r, p) = wp * v00 + wq * v10;
          w(r, q) = wp * v01 + wq * v11;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> out(cols);
  for (std::size_t c = 0; c < cols; ++c) out[c] = std::sqrt(dot(c, c).real());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t numerical_rank(const CMatrix& m, double rel_tol) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cutoff = rel_tol * sv.front();
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cutoff; }));
}

}  // namespace posmaps
