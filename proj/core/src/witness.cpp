#include "posmaps/witness.hpp"

#include <cmath>
#include <numbers>

#include "posmaps/errors.hpp"
#include "posmaps/random.hpp"

namespace posmaps {

namespace {

std::vector<cplx> phase_vector(const std::vector<double>& theta) {
  std::vector<cplx> x(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) x[k] = std::polar(1.0, theta[k]);
  return x;
}

ProductVector phase_generator(std::vector<double> theta) {
  ProductVector z;
  z.kind = GeneratorKind::phase;
  z.first = phase_vector(theta);
  z.second = z.first;
  z.theta = std::move(theta);
  return z;
}

CMatrix stack_columns(const std::vector<ProductVector>& gens, std::size_t dim) {
  CMatrix m(dim, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto v = gens[g].tensor();
    for (std::size_t r = 0; r < dim; ++r) m(r, g) = v[r];
  }
  return m;
}

bool optimality_theorem_applies(const MapParams& p) {
  if (p.is_delta_n()) return true;
  if (p.n() < 3 || !p.uniform_c()) return false;
  const double c = p.c(1);
  if (std::abs(p.a() - (p.n() - c)) > kBoundaryTol) return false;
  const auto lengths = min_max_cycle_length(p.sigma());
  return lengths.l_min >= 3 && c > 0.0 &&
         c <= static_cast<double>(p.n()) / lengths.l_max + kBoundaryTol;
}

}  // namespace

std::string to_string(GeneratorKind kind) { return kind == GeneratorKind::phase ? "phase" : "basis"; }

std::vector<cplx> ProductVector::tensor() const {
  std::vector<cplx> out(first.size() * second.size());
  for (std::size_t a = 0; a < first.size(); ++a)
    for (std::size_t b = 0; b < second.size(); ++b) out[a * second.size() + b] = first[a] * second[b];
  return out;
}

CMatrix witness(const MapParams& p) {
  return choi(p, true).matrix * cplx{1.0 / p.n(), 0.0};
}

double witness_expectation(const CMatrix& w, const CMatrix& rho) {
  if (rho.rows() != w.rows() || rho.cols() != w.cols()) {
    throw SizeError("witness_expectation: state is " + std::to_string(rho.rows()) + "x" +
                    std::to_string(rho.cols()) + ", witness is " + std::to_string(w.rows()) +
                    "x" + std::to_string(w.cols()));
  }
  cplx acc{};
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) acc += w(r, c) * rho(c, r);
  return acc.real();
}

int default_phase_budget(int n) { return n * (n + 1) / 2 + 1; }

std::vector<ProductVector> spanning_generators(const MapParams& p, int phase_budget,
                                               std::uint64_t seed) {
  const int n = p.n();
  const int sym_dim = n * (n + 1) / 2;
  if (phase_budget < sym_dim) {
    throw ParameterError("phase_budget: must be at least n(n+1)/2 = " + std::to_string(sym_dim) +
                         ", got " + std::to_string(phase_budget));
  }
  const auto un = static_cast<std::size_t>(n);
  const double half_pi = std::numbers::pi / 2.0;

  std::vector<ProductVector> phases;
  for (std::size_t k = 0; k < un; ++k) {
    std::vector<double> theta(un, 0.0);
    theta[k] = half_pi;
    phases.push_back(phase_generator(std::move(theta)));
  }
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t l = k + 1; l < un; ++l) {
      std::vector<double> theta(un, 0.0);
      theta[k] = theta[l] = half_pi;
      phases.push_back(phase_generator(std::move(theta)));
    }
  if (static_cast<int>(phases.size()) < phase_budget) {
    phases.push_back(phase_generator(std::vector<double>(un, 0.0)));
  }

  // The phase vectors live in the symmetric subspace; keep adding random
  // phases while it is not spanned.
  std::uint64_t stream = 0;
  while (static_cast<int>(phases.size()) < phase_budget &&
         numerical_rank(stack_columns(phases, un * un), kRankRelTol) <
             static_cast<std::size_t>(sym_dim)) {
    CounterRng rng(seed, stream++);
    std::vector<double> theta(un);
    for (auto& t : theta) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    phases.push_back(phase_generator(std::move(theta)));
  }

  std::vector<ProductVector> out = std::move(phases);
  const auto inv = p.sigma().inverse();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == inv(i)) continue;
      ProductVector z;
      z.kind = GeneratorKind::basis;
      z.first.assign(un, 0.0);
      z.second.assign(un, 0.0);
      z.first[static_cast<std::size_t>(i - 1)] = 1.0;
      z.second[static_cast<std::size_t>(j - 1)] = 1.0;
      z.i = i;
      z.j = j;
      out.push_back(std::move(z));
    }
  }
  return out;
}

cplx generator_expectation(const CMatrix& w, const ProductVector& z) {
  const auto v = z.tensor();
  if (v.size() != w.rows()) throw SizeError("generator_expectation: dimension mismatch");
  cplx acc{};
  for (std::size_t r = 0; r < w.rows(); ++r) {
    cplx row{};
    for (std::size_t c = 0; c < w.cols(); ++c) row += w(r, c) * v[c];
    acc += std::conj(v[r]) * row;
  }
  return acc;
}

bool basis_pairing_holds(const Permutation& sigma) {
  const auto inv = sigma.inverse();
  const int n = sigma.degree();
  auto in_family = [&](int i, int j) { return j != i && j != inv(i); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (!in_family(i, j) && !in_family(j, i)) return false;
    }
  return true;
}

OptimalityCertificate certify_optimality(const MapParams& p, int phase_budget, std::uint64_t seed) {
  const int n = p.n();
  if (phase_budget <= 0) phase_budget = default_phase_budget(n);

  OptimalityCertificate cert;
  cert.witness = witness(p);
  cert.dimension = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  cert.theorem_applies = optimality_theorem_applies(p);
  if (positivity_verdict(p).status != Status::yes) {
    cert.warning = "Theta is not known to be positive; W may not be an entanglement witness";
  } else if (is_psd(choi(p, true).matrix)) {
    cert.warning = "T o Theta is completely positive; W is PSD and detects nothing";
  }

  const auto all = spanning_generators(p, phase_budget, seed);
  const double scale = std::max(1.0, cert.witness.max_abs());
  double worst_rejected = 0.0;
  for (const auto& z : all) {
    const double value = std::abs(generator_expectation(cert.witness, z));
    if (value <= kExpectationTol * scale) {
      cert.generators.push_back(z);
      cert.expectations.push_back(value);
    } else {
      ++cert.rejected_generators;
      worst_rejected = std::max(worst_rejected, value);
    }
  }
  if (cert.theorem_applies && cert.rejected_generators > 0) {
    throw InternalConsistencyError(
        "certify_optimality: a generator has nonzero witness expectation (" +
        std::to_string(worst_rejected) + ") although it must vanish for these parameters");
  }

  cert.span_rank = cert.generators.empty()
                       ? 0
                       : numerical_rank(stack_columns(cert.generators, cert.dimension), kRankRelTol);
  cert.optimal = cert.span_rank == cert.dimension;

  auto& v = cert.verdict;
  v.tolerance = kExpectationTol;
  v.evidence = {{"span_rank", static_cast<double>(cert.span_rank)},
                {"dimension", static_cast<double>(cert.dimension)},
                {"generators", static_cast<double>(cert.generators.size())},
                {"rejected_generators", static_cast<double>(cert.rejected_generators)}};
  if (cert.optimal) {
    v.status = Status::yes;
    if (cert.theorem_applies) {
      v.certificate = p.is_delta_n() ? "delta-n-witness-optimal" : "witness-optimal-uniform-c";
      v.basis = Basis::theorem_and_numeric;
      v.note = "spanning property holds";
    } else {
      v.certificate = "spanning-property-numeric";
      v.basis = Basis::numeric;
      v.note = "optimal (spanning property verified numerically); parameters are outside "
               "the proven optimality range";
    }
  } else {
    v.status = Status::unknown;
    v.certificate = "none";
    v.basis = Basis::numeric;
    v.note = "vanishing generators do not span; spanning is sufficient, not necessary";
  }
  return cert;
}

}  // namespace posmaps
