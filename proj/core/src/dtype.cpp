#include "posmaps/dtype.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "posmaps/errors.hpp"

namespace posmaps {

namespace {

void require_square_n(const MapParams& p, const CMatrix& x, const char* op) {
  const auto n = static_cast<std::size_t>(p.n());
  if (x.rows() != n || x.cols() != n) {
    throw ParameterError(std::string(op) + ": expected " + std::to_string(n) + "x" +
                         std::to_string(n) + " input, got " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
  }
}

}  // namespace

MapParams::MapParams(Permutation sigma, double a, std::vector<double> c)
    : MapParams(std::move(sigma), a, std::move(c), false) {}

MapParams::MapParams(Permutation sigma, double a, std::vector<double> c, bool delta_n)
    : sigma_(std::move(sigma)), a_(a), c_(std::move(c)), delta_n_(delta_n) {
  if (!std::isfinite(a_) || a_ <= 0.0) {
    throw ParameterError("a: must be a positive real, got " + std::to_string(a_));
  }
  if (static_cast<int>(c_.size()) != sigma_.degree()) {
    throw ParameterError("c: expected " + std::to_string(sigma_.degree()) + " entries, got " +
                         std::to_string(c_.size()));
  }
  if (!delta_n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!std::isfinite(c_[i]) || c_[i] <= 0.0) {
        throw ParameterError("c: entry c_" + std::to_string(i + 1) +
                             " must be a positive real, got " + std::to_string(c_[i]));
      }
    }
  }
}

MapParams MapParams::delta_n(int n) {
  if (n < 2) throw ParameterError("delta_n: requires n >= 2, got " + std::to_string(n));
  return MapParams(Permutation::identity(n), static_cast<double>(n),
                   std::vector<double>(static_cast<std::size_t>(n), 0.0), true);
}

bool MapParams::uniform_c() const {
  const auto [lo, hi] = std::minmax_element(c_.begin(), c_.end());
  return *hi - *lo <= 1e-12 * std::max(1.0, std::abs(*hi));
}

double MapParams::sum_c() const { return std::accumulate(c_.begin(), c_.end(), 0.0); }

CMatrix delta_apply(const MapParams& p, const CMatrix& x) {
  require_square_n(p, x, "delta_apply");
  const auto n = static_cast<std::size_t>(p.n());
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(p.sigma().apply0(static_cast<int>(i)));
    out(i, i) = p.a() * x(i, i) + p.c()[i] * x(s, s);
  }
  return out;
}

CMatrix theta_apply(const MapParams& p, const CMatrix& x) {
  return delta_apply(p, x) - x;
}

CMatrix d_matrix(const MapParams& p) {
  const auto n = static_cast<std::size_t>(p.n());
  CMatrix d = CMatrix::identity(n) * cplx{p.a(), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(p.sigma().apply0(static_cast<int>(i)));
    d(s, i) += p.c()[i];
  }
  return d;
}

ChoiMatrix choi(const MapParams& p, bool compose_transpose) {
  const auto n = static_cast<std::size_t>(p.n());
  ChoiMatrix out{p.n(), CMatrix(n * n, n * n), compose_transpose};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CMatrix block = theta_apply(p, CMatrix::unit(n, i, j));
      if (compose_transpose) block = block.transpose();
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.matrix(i * n + r, j * n + c) = block(r, c);
    }
  }
  return out;
}

double choi_trace(const MapParams& p) { return p.n() * (p.a() - 1.0) + p.sum_c(); }

}  // namespace posmaps
