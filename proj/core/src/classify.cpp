#include "posmaps/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "posmaps/errors.hpp"
#include "posmaps/random.hpp"

namespace posmaps {

std::string to_string(Status s) {
  switch (s) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::theorem: return "theorem";
    case Basis::numeric: return "numeric";
    case Basis::theorem_and_numeric: return "theorem+numeric";
    case Basis::none: return "none";
  }
  return "none";
}

const Evidence* Verdict::find(std::string_view name) const {
  for (const auto& e : evidence)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

bool at_least(double value, double bound) { return value >= bound - kBoundaryTol; }

std::vector<cplx> normalized(std::vector<cplx> v) {
  double norm = 0.0;
  for (const auto& x : v) norm += std::norm(x);
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (auto& x : v) x /= norm;
  return v;
}

double projection_image_min_eigenvalue(const MapParams& p, std::span<const cplx> xi) {
  const auto n = xi.size();
  CMatrix proj(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) proj(r, c) = xi[r] * std::conj(xi[c]);
  return min_eigenvalue(theta_apply(p, proj));
}

// Contribution of one cycle to S; the cycle is closed under sigma so this
// only reads weights on the cycle.
double cycle_ratio(const MapParams& p, const std::vector<int>& cycle,
                   const std::vector<double>& weights) {
  double s = 0.0;
  for (int point : cycle) {
    const auto i = static_cast<std::size_t>(point - 1);
    const auto j = static_cast<std::size_t>(p.sigma().apply0(point - 1));
    const double wi = weights[i] * weights[i];
    const double wj = weights[j] * weights[j];
    const double denom = p.a() * wi + p.c()[i] * wj;
    if (denom > 0.0) s += wi / denom;
  }
  return s;
}

// Candidate weight patterns on a single cycle, written into a full-length
// vector (zeros off the cycle).
std::vector<std::vector<double>> cycle_candidates(const MapParams& p,
                                                  const std::vector<int>& cycle) {
  const auto n = static_cast<std::size_t>(p.n());
  const std::size_t len = cycle.size();
  std::vector<std::vector<double>> out;

  std::vector<double> uniform(n, 0.0);
  for (int point : cycle) uniform[static_cast<std::size_t>(point - 1)] = 1.0;
  out.push_back(uniform);

  // Balanced weights: c_i |x_sigma(i)|^2 / |x_i|^2 = d for every i on the
  // cycle, d the geometric mean of c over the cycle. Squared magnitudes carry
  // the alpha weights.
  double log_d = 0.0;
  bool positive_c = true;
  for (int point : cycle) {
    const double ci = p.c(point);
    if (ci <= 0.0) positive_c = false;
    else log_d += std::log(ci);
  }
  if (positive_c && len > 1) {
    log_d /= static_cast<double>(len);
    std::vector<double> w(n, 0.0);
    double log_alpha = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      const auto idx = static_cast<std::size_t>(cycle[k] - 1);
      w[idx] = std::exp(0.5 * log_alpha);
      log_alpha += log_d - std::log(p.c(cycle[k]));
    }
    out.push_back(w);
  }

  // Geometric weights alpha_{sigma^k(s)} = lambda^{-k}, k = 1..len, from every
  // start s; as lambda grows S tends to (len - 1) / a on the cycle.
  if (len > 1) {
    for (std::size_t start = 0; start < len; ++start) {
      for (int e = -12; e <= 12; ++e) {
        if (e == 0) continue;
        const double log_lambda = 0.5 * e * std::log(10.0);
        std::vector<double> w(n, 0.0);
        for (std::size_t k = 1; k <= len; ++k) {
          const auto idx = static_cast<std::size_t>(cycle[(start + k) % len] - 1);
          w[idx] = std::exp(-0.5 * static_cast<double>(k) * log_lambda);
        }
        out.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

double geometric_mean_c(const MapParams& p) {
  double log_sum = 0.0;
  for (double ci : p.c()) {
    if (ci <= 0.0) return 0.0;
    log_sum += std::log(ci);
  }
  return std::exp(log_sum / p.n());
}

double positivity_threshold(const MapParams& p) {
  const double n = p.n();
  return std::max(n - 1.0, n - geometric_mean_c(p));
}

bool positivity_threshold_is_sharp(const MapParams& p) { return is_full_cycle(p.sigma()); }

double positivity_ratio(const MapParams& p, std::span<const cplx> xi) {
  if (static_cast<int>(xi.size()) != p.n()) {
    throw ParameterError("positivity_ratio: vector length " + std::to_string(xi.size()) +
                         " does not match n=" + std::to_string(p.n()));
  }
  double s = 0.0;
  for (int i = 0; i < p.n(); ++i) {
    const double xi2 = std::norm(xi[static_cast<std::size_t>(i)]);
    const double xs2 = std::norm(xi[static_cast<std::size_t>(p.sigma().apply0(i))]);
    const double denom = p.a() * xi2 + p.c()[static_cast<std::size_t>(i)] * xs2;
    if (denom > 0.0) s += xi2 / denom;
  }
  return s;
}

std::vector<std::vector<cplx>> adversarial_vectors(const MapParams& p) {
  const auto n = static_cast<std::size_t>(p.n());
  const auto dec = cycle_decompose(p.sigma());

  std::vector<std::vector<double>> uniform_rest(dec.cycles.size());
  std::vector<std::vector<double>> best(dec.cycles.size());
  std::vector<std::vector<std::vector<double>>> candidates(dec.cycles.size());
  for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
    candidates[ci] = cycle_candidates(p, dec.cycles[ci]);
    double best_ratio = -1.0;
    for (const auto& w : candidates[ci]) {
      const double r = cycle_ratio(p, dec.cycles[ci], w);
      if (r > best_ratio) {
        best_ratio = r;
        best[ci] = w;
      }
    }
  }

  auto to_vector = [&](const std::vector<double>& w) {
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i];
    return normalized(std::move(v));
  };

  std::vector<std::vector<cplx>> out;
  // Per-cycle maximisers combined; cycles are independent so this is the
  // worst vector within the families.
  std::vector<double> combined(n, 0.0);
  for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci)
    for (std::size_t i = 0; i < n; ++i) combined[i] += best[ci][i];
  out.push_back(to_vector(combined));

  // Each candidate on its own cycle with unit weights elsewhere.
  for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
    for (const auto& w : candidates[ci]) {
      std::vector<double> full = w;
      for (std::size_t cj = 0; cj < dec.cycles.size(); ++cj) {
        if (cj == ci) continue;
        for (int point : dec.cycles[cj]) full[static_cast<std::size_t>(point - 1)] = 1.0;
      }
      out.push_back(to_vector(full));
    }
  }
  return out;
}

PositivityEvidence verify_positivity_numeric(const MapParams& p, int samples, double tol,
                                             std::uint64_t seed) {
  if (samples < 1) throw ParameterError("samples: must be at least 1, got " + std::to_string(samples));
  const auto n = static_cast<std::size_t>(p.n());
  PositivityEvidence ev;
  ev.tolerance = tol;
  ev.max_ratio = -std::numeric_limits<double>::infinity();
  ev.min_eigenvalue = std::numeric_limits<double>::infinity();

  auto consider = [&](const std::vector<cplx>& xi) {
    const double s = positivity_ratio(p, xi);
    if (s > ev.max_ratio) {
      ev.max_ratio = s;
      ev.worst_vector = xi;
    }
    const double lam = projection_image_min_eigenvalue(p, xi);
    if (lam < ev.min_eigenvalue) {
      ev.min_eigenvalue = lam;
      ev.min_eigenvalue_vector = xi;
    }
  };

  for (int s = 0; s < samples; ++s) {
    CounterRng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<cplx> xi(n);
    for (auto& x : xi) x = rng.complex_normal();
    consider(normalized(std::move(xi)));
  }
  ev.random_samples = samples;

  const auto structured = adversarial_vectors(p);
  for (const auto& xi : structured) consider(xi);
  ev.adversarial_samples = static_cast<int>(structured.size());
  return ev;
}

CMatrix schur_matrix(const MapParams& p) {
  const auto n = static_cast<std::size_t>(p.n());
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j) ? p.a() + p.c()[i] - 1.0 : -1.0;
  return a;
}

Verdict cp_verdict(const MapParams& p, double tol) {
  Verdict v;
  v.tolerance = tol;
  const auto lengths = min_max_cycle_length(p.sigma());
  const double choi_min = min_eigenvalue(choi(p).matrix);
  v.evidence.push_back({"choi_min_eigenvalue", choi_min});
  v.evidence.push_back({"l_min", static_cast<double>(lengths.l_min)});

  if (lengths.l_min >= 2) {
    v.status = at_least(p.a(), p.n()) ? Status::yes : Status::no;
    v.certificate = "cp-iff-a-ge-n";
    v.basis = Basis::theorem_and_numeric;
    v.evidence.push_back({"a_minus_n", p.a() - p.n()});
    v.note = "no fixed points: 2-positive, completely positive and a >= n are equivalent";
  } else if (p.sigma().is_identity()) {
    const double schur_min = min_eigenvalue(schur_matrix(p));
    v.status = schur_min >= -tol ? Status::yes : Status::no;
    v.certificate = p.is_delta_n() ? "delta-n-schur-multiplier" : "schur-multiplier";
    v.basis = Basis::theorem_and_numeric;
    v.evidence.push_back({"schur_min_eigenvalue", schur_min});
    v.note = "sigma = id: Theta is the Schur multiplier by A; CP iff A is PSD";
  } else {
    v.status = choi_min >= -tol ? Status::yes : Status::no;
    v.certificate = "choi-psd-numeric";
    v.basis = Basis::numeric;
    v.note = "sigma has fixed points but is not the identity; numeric Choi test only";
  }
  return v;
}

Verdict positivity_verdict(const MapParams& p, double tol, const PositivityEvidence* evidence) {
  Verdict v;
  v.tolerance = tol;
  const double threshold = positivity_threshold(p);
  const auto lengths = min_max_cycle_length(p.sigma());
  v.evidence.push_back({"threshold", threshold});
  v.evidence.push_back({"geometric_mean_c", geometric_mean_c(p)});
  if (evidence) {
    v.evidence.push_back({"max_ratio", evidence->max_ratio});
    v.evidence.push_back({"min_projection_image_eigenvalue", evidence->min_eigenvalue});
  }
  const Basis with_numeric = evidence ? Basis::theorem_and_numeric : Basis::theorem;

  if (p.sigma().is_identity()) {
    const double schur_min = min_eigenvalue(schur_matrix(p));
    v.evidence.push_back({"schur_min_eigenvalue", schur_min});
    v.status = schur_min >= -tol ? Status::yes : Status::no;
    v.certificate = p.is_delta_n() ? "delta-n-schur-multiplier" : "schur-multiplier";
    v.basis = with_numeric;
    v.note = "sigma = id: positive iff the Schur matrix A is PSD";
    return v;
  }
  if (at_least(p.a(), threshold)) {
    v.status = Status::yes;
    v.certificate = "positivity-threshold";
    v.basis = with_numeric;
    v.note = "a >= max(n-1, n-(c_1...c_n)^(1/n))";
    return v;
  }
  if (positivity_threshold_is_sharp(p)) {
    v.status = Status::no;
    v.certificate = "positivity-threshold-sharp";
    v.basis = with_numeric;
    v.note = "sigma is a single n-cycle, so the threshold is also necessary";
    return v;
  }
  if (p.uniform_c() && std::abs(p.a() - (p.n() - p.c(1))) <= kBoundaryTol) {
    const double bound = static_cast<double>(p.n()) / lengths.l_max;
    v.evidence.push_back({"uniform_c_bound", bound});
    v.status = p.c(1) <= bound + kBoundaryTol ? Status::yes : Status::no;
    v.certificate = "uniform-c-positivity";
    v.basis = with_numeric;
    v.note = "Theta[n-c; c..c] is positive iff c <= n / l_max(sigma)";
    return v;
  }
  const auto cp = cp_verdict(p, tol);
  if (cp.status == Status::yes) {
    v.status = Status::yes;
    v.certificate = "cp-implies-positive";
    v.basis = cp.basis;
    v.note = "completely positive via " + cp.certificate;
    return v;
  }
  v.status = Status::unknown;
  v.certificate = "none";
  v.basis = evidence ? Basis::numeric : Basis::none;
  v.note = "below the sufficient threshold and sigma is not a single n-cycle; "
           "no necessary-and-sufficient criterion is known";
  return v;
}

DecomposabilityCertificate decompose_involution(const MapParams& p, double tol) {
  const int n = p.n();
  const auto& sigma = p.sigma();
  if (!is_involution(sigma)) {
    throw PreconditionError("decompose_involution: sigma is not an involution (sigma^2 != id)");
  }
  if (!at_least(p.a(), n - 1.0)) {
    throw PreconditionError("decompose_involution: requires a >= n-1 = " + std::to_string(n - 1) +
                            ", got a = " + std::to_string(p.a()));
  }
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) == i && !at_least(p.c(i), 1.0)) {
      throw PreconditionError("decompose_involution: fixed point " + std::to_string(i) +
                              " requires c_" + std::to_string(i) + " >= 1, got " +
                              std::to_string(p.c(i)));
    }
    if (sigma(i) != i && !at_least(p.c(i) * p.c(sigma(i)), 1.0)) {
      throw PreconditionError("decompose_involution: pair (" + std::to_string(i) + " " +
                              std::to_string(sigma(i)) + ") requires c_" + std::to_string(i) +
                              " * c_" + std::to_string(sigma(i)) + " >= 1, got " +
                              std::to_string(p.c(i) * p.c(sigma(i))));
    }
  }

  const auto un = static_cast<std::size_t>(n);
  auto e = [&](int i, int j) {
    return CMatrix::unit(un, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };

  DecomposabilityCertificate cert;
  cert.p = CMatrix(un * un, un * un);
  for (int i = 1; i <= n; ++i) {
    const double diag = sigma(i) == i ? p.a() + p.c(i) - 1.0 : p.a() - 1.0;
    cert.p += kron(e(i, i), e(i, i)) * cplx{diag, 0.0};
    for (int j = 1; j <= n; ++j) {
      if (j == i || sigma(i) == j) continue;
      cert.p -= kron(e(i, j), e(i, j));
    }
  }
  cert.p_min_eigenvalue = min_eigenvalue(cert.p);

  CMatrix total = cert.p;
  for (int i = 1; i <= n; ++i) {
    const int s = sigma(i);
    if (s == i || s < i) continue;
    QBlock block;
    block.i = i;
    block.j = s;
    block.q = kron(e(i, i), e(s, s)) * cplx{p.c(s), 0.0} +
              kron(e(s, s), e(i, i)) * cplx{p.c(i), 0.0} - kron(e(i, s), e(i, s)) -
              kron(e(s, i), e(s, i));
    block.gamma_min_eigenvalue = min_eigenvalue(partial_transpose(block.q, un, un));
    total += block.q;
    cert.q_blocks.push_back(std::move(block));
  }
  cert.reconstruction_residual = max_abs_diff(total, choi(p).matrix);

  if (cert.p_min_eigenvalue < -tol || cert.reconstruction_residual > 1e-10) {
    throw InternalConsistencyError("decompose_involution: certificate failed verification");
  }
  for (const auto& b : cert.q_blocks) {
    if (b.gamma_min_eigenvalue < -tol) {
      throw InternalConsistencyError("decompose_involution: Q block is not PPT");
    }
  }
  return cert;
}

ClassificationReport classify(const MapParams& p, const ClassifyOptions& options) {
  ClassificationReport r{.params = p, .lengths = min_max_cycle_length(p.sigma()), .threshold = positivity_threshold(p), .choi_min_eigenvalue = 0.0, .positive = {}, .two_positive = {}, .completely_positive = {}, .atomic = {}, .decomposable = {}, .positivity_evidence = {}, .decomposition = std::nullopt};
  r.choi_min_eigenvalue = min_eigenvalue(choi(p).matrix);
  r.positivity_evidence = verify_positivity_numeric(p, options.samples, options.tol, options.seed);

  r.positive = positivity_verdict(p, options.tol, &r.positivity_evidence);
  r.completely_positive = cp_verdict(p, options.tol);
  const bool cp_yes = r.completely_positive.status == Status::yes;
  const bool pos_yes = r.positive.status == Status::yes;
  const bool pos_no = r.positive.status == Status::no;

  // 2-positivity
  auto& two = r.two_positive;
  two.tolerance = options.tol;
  if (r.lengths.l_min >= 2 || p.sigma().is_identity()) {
    two.status = r.completely_positive.status;
    two.certificate = r.completely_positive.certificate;
    two.basis = r.completely_positive.basis;
    two.evidence = r.completely_positive.evidence;
    two.note = r.lengths.l_min >= 2 ? "equivalent to complete positivity when l_min >= 2"
                                    : "sigma = id: positive, 2-positive and CP coincide";
  } else if (cp_yes) {
    two.status = Status::yes;
    two.certificate = "cp-implies-2-positive";
    two.basis = r.completely_positive.basis;
  } else if (pos_no) {
    two.status = Status::no;
    two.certificate = "not-positive";
    two.basis = r.positive.basis;
  } else {
    two.status = Status::unknown;
    two.certificate = "none";
    two.note = "sigma has fixed points and is not the identity; no 2-positivity criterion";
  }

  // Decomposability
  auto& dec = r.decomposable;
  dec.tolerance = options.tol;
  const bool atomic_by_theorem = r.lengths.l_min >= 3 && pos_yes && !cp_yes &&
                                 r.completely_positive.status == Status::no;
  if (cp_yes) {
    dec.status = Status::yes;
    dec.certificate = "cp-implies-decomposable";
    dec.basis = r.completely_positive.basis;
  } else if (pos_no) {
    dec.status = Status::no;
    dec.certificate = "not-positive";
    dec.basis = r.positive.basis;
    dec.note = "decomposable maps are positive";
  } else if (atomic_by_theorem) {
    dec.status = Status::no;
    dec.certificate = "atomic-positive-not-cp";
    dec.basis = Basis::theorem;
    dec.note = "atomic maps are indecomposable";
  } else {
    dec.status = Status::unknown;
    dec.certificate = "none";
    if (is_involution(p.sigma())) {
      try {
        r.decomposition = decompose_involution(p, options.tol);
        dec.status = Status::yes;
        dec.certificate = "decomposable-involution";
        dec.basis = Basis::theorem_and_numeric;
        dec.evidence.push_back({"p_min_eigenvalue", r.decomposition->p_min_eigenvalue});
        double q_min = std::numeric_limits<double>::infinity();
        for (const auto& b : r.decomposition->q_blocks) q_min = std::min(q_min, b.gamma_min_eigenvalue);
        if (!r.decomposition->q_blocks.empty()) dec.evidence.push_back({"q_gamma_min_eigenvalue", q_min});
        dec.evidence.push_back({"reconstruction_residual", r.decomposition->reconstruction_residual});
      } catch (const PreconditionError& e) {
        dec.note = e.what();
      }
    } else {
      dec.note = "no decomposability criterion applies";
    }
  }

  // Atomicity
  auto& at = r.atomic;
  at.tolerance = options.tol;
  if (cp_yes) {
    at.status = Status::no;
    at.certificate = "cp-implies-decomposable";
    at.basis = r.completely_positive.basis;
  } else if (dec.status == Status::yes) {
    at.status = Status::no;
    at.certificate = dec.certificate;
    at.basis = dec.basis;
    at.note = "decomposable maps are not atomic";
  } else if (pos_no) {
    at.status = Status::no;
    at.certificate = "not-positive";
    at.basis = r.positive.basis;
    at.note = "atomicity is a property of positive maps";
  } else if (atomic_by_theorem) {
    at.status = Status::yes;
    at.certificate = "atomic-positive-not-cp";
    at.basis = Basis::theorem;
    at.evidence.push_back({"l_min", static_cast<double>(r.lengths.l_min)});
    std::ostringstream note;
    note << "l_min >= 3, positive (" << r.positive.certificate << ") and not CP ("
         << r.completely_positive.certificate << ")";
    at.note = note.str();
  } else {
    at.status = Status::unknown;
    at.certificate = "none";
    at.note = r.lengths.l_min < 3 ? "atomicity criterion needs l_min(sigma) >= 3"
                                  : "positivity not established";
  }
  return r;
}

Verdict atomic_verdict(const MapParams& p, const ClassifyOptions& options) {
  return classify(p, options).atomic;
}

Verdict atomic_uniform_c(const MapParams& p) {
  if (p.is_delta_n()) return atomic_uniform_c(p.sigma(), 0.0);
  if (!p.uniform_c()) throw ParameterError("c: atomic_uniform_c requires c_1 = ... = c_n");
  const double c = p.c(1);
  if (std::abs(p.a() - (p.n() - c)) > kBoundaryTol) {
    throw ParameterError("a: atomic_uniform_c requires a = n - c = " + std::to_string(p.n() - c) +
                         ", got " + std::to_string(p.a()));
  }
  const auto lengths = min_max_cycle_length(p.sigma());
  const double bound = static_cast<double>(p.n()) / lengths.l_max;
  Verdict v;
  v.evidence = {{"c", c}, {"n_over_l_max", bound}, {"l_min", static_cast<double>(lengths.l_min)}};
  if (lengths.l_min >= 3 && c > 0.0 && c <= bound + kBoundaryTol) {
    v.status = Status::yes;
    v.certificate = "atomic-uniform-c";
    v.basis = Basis::theorem;
    v.note = "l_min >= 3 and 0 < c <= n / l_max(sigma)";
  } else {
    v.status = Status::unknown;
    v.certificate = "none";
    v.basis = Basis::none;
    v.note = lengths.l_min < 3 ? "criterion needs l_min(sigma) >= 3" : "c exceeds n / l_max(sigma)";
  }
  return v;
}

Verdict atomic_uniform_c(const Permutation& sigma, double c) {
  if (c < 0.0) throw ParameterError("c: must be nonnegative, got " + std::to_string(c));
  if (c == 0.0) {
    const auto delta = MapParams::delta_n(sigma.degree());
    const auto cp = cp_verdict(delta);
    Verdict v;
    v.status = cp.status == Status::yes ? Status::no : Status::unknown;
    v.certificate = "uniform-c-zero-is-cp";
    v.basis = cp.basis;
    v.evidence = cp.evidence;
    v.note = "c = 0 gives X -> n diag(X) - X, which is completely positive";
    return v;
  }
  const int n = sigma.degree();
  return atomic_uniform_c(MapParams(sigma, n - c, std::vector<double>(static_cast<std::size_t>(n), c)));
}

std::vector<double> elementary_symmetric(std::span<const double> xs) {
  std::vector<double> e(xs.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (std::size_t m = k + 1; m >= 1; --m) e[m] += xs[k] * e[m - 1];
  return e;
}

double symmetric_F(double a, std::span<const double> xs) {
  if (a <= 0.0) throw ParameterError("a: symmetric_F requires a > 0");
  const auto e = elementary_symmetric(xs);
  const std::size_t n = xs.size();
  double f = 0.0;
  double a_pow = 1.0 / a;  // a^(m-1)
  for (std::size_t m = 0; m <= n; ++m) {
    f += a_pow * (a - static_cast<double>(m)) * e[n - m];
    a_pow *= a;
  }
  return f;
}

}  // namespace posmaps
