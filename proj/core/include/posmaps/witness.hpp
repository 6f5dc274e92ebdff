#pragma once

/**
 * @file witness.hpp
 * @brief Entanglement witness W = C_{T o Theta} / n and its optimality
 * certificate via the spanning property.
 *
 * A witness is optimal when the product vectors z = x (x) y with <W z, z> = 0
 * span C^n (x) C^n. Two families of such vectors are generated:
 *  - phase vectors x_t (x) x_t with x_t = sum_j e^{i t_j} e_j,
 *  - basis products e_i (x) e_j with j != i and j != sigma^{-1}(i).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "posmaps/classify.hpp"
#include "posmaps/dtype.hpp"
#include "posmaps/matrix.hpp"

namespace posmaps {

/// Rank cut-off for the generator stack, relative to the largest singular value.
inline constexpr double kRankRelTol = 1e-8;
/// Largest accepted |<W z, z>| for a generator.
inline constexpr double kExpectationTol = 1e-9;

CMatrix witness(const MapParams& p);

/// Tr(W rho), real part; rho must be n^2 x n^2.
double witness_expectation(const CMatrix& w, const CMatrix& rho);

enum class GeneratorKind { phase, basis };

struct ProductVector {
  GeneratorKind kind = GeneratorKind::phase;
  std::vector<cplx> first;   // x
  std::vector<cplx> second;  // y
  std::vector<double> theta; // phase generators only
  int i = 0;                 // basis generators only, 1-based
  int j = 0;

  std::vector<cplx> tensor() const;  // x (x) y, first-factor-major
};

std::string to_string(GeneratorKind kind);

/// Deterministic phases first (one pi/2 phase at each index, then at each pair
/// of indices, then the all-zero phase), topped up with random phases from
/// `seed` while the phase family has not reached the symmetric dimension
/// n(n+1)/2 and the budget allows. Requires phase_budget >= n(n+1)/2.
/// Basis products follow.
std::vector<ProductVector> spanning_generators(const MapParams& p, int phase_budget,
                                               std::uint64_t seed = 0);

/// phase_budget used when the caller has no preference.
int default_phase_budget(int n);

/// <W z, z> for a product vector.
cplx generator_expectation(const CMatrix& w, const ProductVector& z);

/// True when for every i != j, e_i(x)e_j or e_j(x)e_i is a basis generator.
bool basis_pairing_holds(const Permutation& sigma);

struct OptimalityCertificate {
  CMatrix witness;
  std::vector<ProductVector> generators;  // only those with vanishing expectation
  std::vector<double> expectations;       // |<W z, z>| per kept generator
  int rejected_generators = 0;            // nonzero expectation, dropped
  std::size_t span_rank = 0;
  std::size_t dimension = 0;              // n^2
  bool optimal = false;                   // span_rank == dimension
  bool theorem_applies = false;
  std::string warning;  // set when T o Theta is not known positive, or is CP
  Verdict verdict;
};

/// Under the optimality criterion (uniform c, a = n - c, l_min >= 3,
/// 0 < c <= n/l_max) or for X -> n diag(X) - X, a generator with nonzero
/// expectation throws InternalConsistencyError. Elsewhere the same evidence is
/// gathered and the verdict is `unknown` unless the spanning property holds.
OptimalityCertificate certify_optimality(const MapParams& p, int phase_budget = 0,
                                         std::uint64_t seed = 0);

}  // namespace posmaps
