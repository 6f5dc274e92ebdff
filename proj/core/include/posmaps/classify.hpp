#pragma once

/**
 * @file classify.hpp
 * @brief Positivity, 2-positivity, complete positivity, atomicity and
 * decomposability of Theta[a; c] with sigma.
 *
 * Every verdict pairs a closed-form criterion (where one exists) with numeric
 * evidence computed independently of it. When no criterion covers the input
 * the status is `unknown` and only the evidence is attached.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posmaps/dtype.hpp"
#include "posmaps/matrix.hpp"

namespace posmaps {

enum class Status { yes, no, unknown };

// What backs a verdict.
enum class Basis { theorem, numeric, theorem_and_numeric, none };

std::string to_string(Status s);
std::string to_string(Basis b);

struct Evidence {
  std::string name;
  double value = 0.0;
};

struct Verdict {
  Status status = Status::unknown;
  std::string certificate;  // stable criterion identifier, e.g. "cp-iff-a-ge-n"
  Basis basis = Basis::none;
  std::vector<Evidence> evidence;
  double tolerance = 0.0;
  std::string note;

  const Evidence* find(std::string_view name) const;
};

/// Verdicts closer than this to an inclusive threshold count as satisfying it.
inline constexpr double kBoundaryTol = 1e-9;

// ---------------------------------------------------------------------------
// Positivity

double geometric_mean_c(const MapParams& p);

/// max(n - 1, n - (c_1 ... c_n)^(1/n)). a at or above it is sufficient for
/// positivity for every sigma, and necessary when sigma is a single n-cycle.
double positivity_threshold(const MapParams& p);
bool positivity_threshold_is_sharp(const MapParams& p);

/// S(xi) = sum_i |x_i|^2 / (a |x_i|^2 + c_i |x_sigma(i)|^2); Theta is positive
/// iff S <= 1 for all xi. Terms with vanishing denominator contribute 0.
double positivity_ratio(const MapParams& p, std::span<const cplx> xi);

struct PositivityEvidence {
  double max_ratio = 0.0;             // max S over all evaluated vectors
  std::vector<cplx> worst_vector;     // unit vector attaining max_ratio
  double min_eigenvalue = 0.0;        // min over vectors of lambda_min(Theta(xi xi*))
  std::vector<cplx> min_eigenvalue_vector;
  int random_samples = 0;
  int adversarial_samples = 0;
  double tolerance = 0.0;

  bool consistent_with_positive() const { return max_ratio <= 1.0 + tolerance; }
};

/// Structured vectors that saturate the positivity inequality: geometric
/// weights along each cycle of sigma and weights balancing c_i x_sigma(i)/x_i.
std::vector<std::vector<cplx>> adversarial_vectors(const MapParams& p);

/// `samples` complex Gaussian unit vectors (stream i drawn from (seed, i)) plus
/// adversarial_vectors(p).
PositivityEvidence verify_positivity_numeric(const MapParams& p, int samples, double tol,
                                             std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Complete positivity

/// Diagonal a + c_i - 1, off-diagonal -1. For sigma = id, Theta(X) = A o X.
CMatrix schur_matrix(const MapParams& p);

Verdict cp_verdict(const MapParams& p, double tol = kDefaultPsdTol);
Verdict positivity_verdict(const MapParams& p, double tol = kDefaultPsdTol,
                           const PositivityEvidence* evidence = nullptr);

// ---------------------------------------------------------------------------
// Decomposability

struct QBlock {
  int i = 0;  // 1-based, i < j = sigma(i)
  int j = 0;
  CMatrix q;
  double gamma_min_eigenvalue = 0.0;
};

struct DecomposabilityCertificate {
  CMatrix p;  // PSD part
  std::vector<QBlock> q_blocks;
  double p_min_eigenvalue = 0.0;
  double reconstruction_residual = 0.0;  // max |P + sum Q - C|
};

/// For sigma^2 = id, a >= n-1, c_i >= 1 on fixed points and c_i c_sigma(i) >= 1
/// elsewhere: splits the Choi matrix into a PSD part and PPT parts. Throws
/// PreconditionError naming the failed inequality.
DecomposabilityCertificate decompose_involution(const MapParams& p,
                                                double tol = kDefaultPsdTol);

// ---------------------------------------------------------------------------
// Atomicity

struct ClassifyOptions {
  int samples = 2000;
  double tol = kDefaultPsdTol;
  std::uint64_t seed = 0;
};

struct ClassificationReport {
  MapParams params;
  CycleLengths lengths;
  double threshold = 0.0;
  double choi_min_eigenvalue = 0.0;
  Verdict positive;
  Verdict two_positive;
  Verdict completely_positive;
  Verdict atomic;
  Verdict decomposable;
  PositivityEvidence positivity_evidence;
  std::optional<DecomposabilityCertificate> decomposition;
};

ClassificationReport classify(const MapParams& p, const ClassifyOptions& options = {});

/// The `atomic` verdict of classify(p, options).
Verdict atomic_verdict(const MapParams& p, const ClassifyOptions& options = {});

/// Theta[n - c; c, ..., c]: atomic when l_min >= 3 and 0 < c <= n / l_max.
/// Requires uniform c and a = n - c, otherwise ParameterError.
Verdict atomic_uniform_c(const MapParams& p);
/// Same, building the map from sigma and c; c = 0 gives X -> n diag(X) - X,
/// which is completely positive and hence not atomic.
Verdict atomic_uniform_c(const Permutation& sigma, double c);

// ---------------------------------------------------------------------------
// Symmetric-function inequality

/// e_0..e_n of xs, e_k = sum over k-subsets of products.
std::vector<double> elementary_symmetric(std::span<const double> xs);

/// F(x) = sum_{m=0}^{n} a^(m-1) (a - m) e_{n-m}(x). F >= 0 iff sum 1/(a + x_i) <= 1.
double symmetric_F(double a, std::span<const double> xs);

}  // namespace posmaps
