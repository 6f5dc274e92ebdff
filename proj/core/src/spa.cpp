#include "posmaps/spa.hpp"

#include <cmath>

#include "posmaps/classify.hpp"
#include "posmaps/errors.hpp"

namespace posmaps {

namespace {

CMatrix unit(int n, int i, int j) {
  return CMatrix::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i - 1),
                       static_cast<std::size_t>(j - 1));
}

}  // namespace

std::string to_string(TermKind kind) {
  return kind == TermKind::sigma_ij ? "sigma_ij" : "diagonal";
}

SpaState spa_state(const MapParams& p) {
  const auto c = choi(p).matrix;
  const double n2 = static_cast<double>(p.n()) * p.n();
  SpaState s;
  s.trace_choi = c.trace().real();
  if (!(s.trace_choi > 0.0)) {
    throw ContractError("spa_state: Choi matrix has non-positive trace " +
                        std::to_string(s.trace_choi));
  }
  s.choi_minus_norm = negative_part(c).norm;
  s.w_minus_norm = s.choi_minus_norm / s.trace_choi;
  s.lambda_star = 1.0 / (1.0 + n2 * s.w_minus_norm);
  const double scale = 1.0 / (s.trace_choi + n2 * s.choi_minus_norm);
  s.matrix = (CMatrix::identity(c.rows()) * cplx{s.choi_minus_norm, 0.0} + c) * cplx{scale, 0.0};
  s.map_positive = positivity_verdict(p).status == Status::yes;
  return s;
}

CMatrix spa_segment(const MapParams& p, double lambda) {
  const auto c = choi(p).matrix;
  const double n2 = static_cast<double>(p.n()) * p.n();
  const double tr = c.trace().real();
  return CMatrix::identity(c.rows()) * cplx{(1.0 - lambda) / n2, 0.0} + c * cplx{lambda / tr, 0.0};
}

CMatrix r_matrix() {
  CMatrix r = CMatrix::identity(4);
  r(0, 3) = -1.0;
  r(3, 0) = -1.0;
  return r;
}

CMatrix d_ij(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw ParameterError("d_ij: index outside 1..n");
  CMatrix d(static_cast<std::size_t>(n), 2);
  d(static_cast<std::size_t>(i - 1), 0) = 1.0;
  d(static_cast<std::size_t>(j - 1), 1) = 1.0;
  return d;
}

CMatrix sigma_ij(int n, int i, int j) {
  const auto eii = unit(n, i, i), ejj = unit(n, j, j);
  return kron(eii, eii) + kron(ejj, ejj) + kron(eii, ejj) + kron(ejj, eii) -
         kron(unit(n, i, j), unit(n, i, j)) - kron(unit(n, j, i), unit(n, j, i));
}

SeparableDecomposition separable_decomposition(const MapParams& p) {
  const int n = p.n();
  if (std::abs(p.a() - (n - 1.0)) > 1e-12) {
    throw PreconditionError("separable decomposition requires a = n-1 = " + std::to_string(n - 1) +
                            ", got a = " + std::to_string(p.a()));
  }
  const auto lengths = min_max_cycle_length(p.sigma());
  if (lengths.l_min < 2) {
    throw PreconditionError("separable decomposition requires l_min(sigma) >= 2, got " +
                            std::to_string(lengths.l_min));
  }
  const auto positive = positivity_verdict(p);
  if (positive.status != Status::yes) {
    throw PreconditionError("separable decomposition requires an established positive map; "
                            "positivity verdict is " + to_string(positive.status));
  }

  SeparableDecomposition out;
  out.normalization = 1.0 / (n * (n - 2.0) + p.sum_c() + static_cast<double>(n) * n);

  const auto r = r_matrix();
  out.r_min_eigenvalue = min_eigenvalue(r);
  out.r_gamma_min_eigenvalue = ppt_check(r, 2, 2).min_eig_of_gamma;

  const auto un = static_cast<std::size_t>(n);
  CMatrix total(un * un, un * un);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SeparableTerm t;
      t.kind = TermKind::sigma_ij;
      t.i = i;
      t.j = j;
      t.matrix = sigma_ij(n, i, j);
      t.weight = out.normalization;
      const auto dd = kron(d_ij(n, i, j), d_ij(n, i, j));
      t.factorization_residual = max_abs_diff(t.matrix, dd * r * dd.adjoint());
      t.min_eigenvalue = min_eigenvalue(t.matrix);
      t.gamma_min_eigenvalue = ppt_check(t.matrix, un, un).min_eig_of_gamma;
      total += t.matrix * cplx{t.weight, 0.0};
      out.terms.push_back(std::move(t));
    }
  }
  const auto inv = p.sigma().inverse();
  for (int i = 1; i <= n; ++i) {
    SeparableTerm t;
    t.kind = TermKind::diagonal;
    t.i = i;
    t.j = inv(i);
    t.matrix = kron(unit(n, i, i), unit(n, t.j, t.j));
    t.weight = out.normalization * p.c(t.j);
    total += t.matrix * cplx{t.weight, 0.0};
    out.terms.push_back(std::move(t));
  }
  out.residual = max_abs_diff(total, spa_state(p).matrix);
  return out;
}

PptResult ppt_check(const CMatrix& m, std::size_t k, std::size_t n, double tol) {
  const double lam = min_eigenvalue(partial_transpose(m, k, n));
  return {lam >= -tol, lam};
}

}  // namespace posmaps
