#include <doctest.h>

#include <cmath>

#include "posmaps/dtype.hpp"
#include "posmaps/errors.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using posmaps::CMatrix;
using posmaps::MapParams;
using posmaps::Permutation;

namespace {

MapParams flagship() { return MapParams(Permutation::tau(3, 2), 2.0, {1, 1, 1}); }

CMatrix diag(std::vector<double> d) { return CMatrix::diagonal(d); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(MapParams(Permutation::tau(3, 2), 0.0, {1, 1, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(MapParams(Permutation::tau(3, 2), 2.0, {1, 0, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(MapParams(Permutation::tau(3, 2), 2.0, {1, -1, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(MapParams(Permutation::tau(3, 2), 2.0, {1, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(MapParams::delta_n(1), posmaps::ParameterError);
}

TEST_CASE("delta_apply examples") {
  const auto p = flagship();
  CHECK(posmaps::max_abs_diff(posmaps::delta_apply(p, CMatrix::unit(3, 0, 0)), diag({2, 1, 0})) == 0.0);
  CHECK(posmaps::max_abs_diff(posmaps::delta_apply(p, CMatrix::identity(3)), diag({3, 3, 3})) == 0.0);
  CHECK(posmaps::delta_apply(p, CMatrix::unit(3, 0, 1)).max_abs() == 0.0);
  CHECK_THROWS_AS(posmaps::delta_apply(p, CMatrix::identity(2)), posmaps::ParameterError);
}

TEST_CASE("theta_apply examples") {
  const auto p = flagship();
  CHECK(posmaps::max_abs_diff(posmaps::theta_apply(p, CMatrix::identity(3)), diag({2, 2, 2})) == 0.0);
  CHECK_THROWS_AS(posmaps::theta_apply(p, CMatrix::identity(4)), posmaps::ParameterError);

  gen::Gen g(31);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = g.integer(2, 7);
    const MapParams q(g.permutation(n), g.uniform(0.1, 5), g.reals(static_cast<std::size_t>(n), 0.1, 4));
    const auto inv = q.sigma().inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto t = posmaps::theta_apply(q, CMatrix::unit(static_cast<std::size_t>(n),
                                                              static_cast<std::size_t>(i),
                                                              static_cast<std::size_t>(j)));
        CMatrix expected(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        if (i != j) {
          expected(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = -1.0;
        } else {
          const int s = inv.apply0(i);
          expected(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) += q.a() - 1.0;
          expected(static_cast<std::size_t>(s), static_cast<std::size_t>(s)) += q.c()[static_cast<std::size_t>(s)];
        }
        CHECK(posmaps::max_abs_diff(t, expected) < 1e-14);
      }
  }
}

TEST_CASE("d_matrix examples") {
  const MapParams id(Permutation::identity(3), 1.5, {1, 2, 3});
  CHECK(posmaps::max_abs_diff(posmaps::d_matrix(id), diag({2.5, 3.5, 4.5})) == 0.0);

  auto expected = 2.0 * CMatrix::identity(3);
  expected(2, 0) = 1.0;
  expected(0, 1) = 1.0;
  expected(1, 2) = 1.0;
  CHECK(posmaps::max_abs_diff(posmaps::d_matrix(flagship()), expected) == 0.0);
}

TEST_CASE("choi examples") {
  const auto p = flagship();
  const auto c = posmaps::choi(p);
  CHECK(c.n == 3);
  CHECK_FALSE(c.transposed_composition);
  CHECK(oracle::max_diff(oracle::eigenvalues(c.matrix), {-1, 0, 0, 0, 1, 1, 1, 2, 2}) < 1e-12);
  CHECK(c.matrix.trace().real() == doctest::Approx(6.0));
  CHECK(posmaps::choi_trace(p) == doctest::Approx(6.0));

  const auto ct = posmaps::choi(p, true);
  CHECK(ct.transposed_composition);
  CHECK(posmaps::is_hermitian(ct.matrix));
  CHECK(ct.matrix.trace().real() == doctest::Approx(6.0));
  // Transposing the blocks pairs (i,j) with (j,i); each pair carries one c = 1
  // entry, so the spectrum is {1^3, ((1 +- sqrt 5)/2)^3}, not that of the plain matrix.
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(oracle::max_diff(oracle::eigenvalues(ct.matrix), {1 - g, 1 - g, 1 - g, 1, 1, 1, g, g, g}) <
        1e-12);
}

TEST_CASE("delta_n examples") {
  const auto d2 = MapParams::delta_n(2);
  CHECK(d2.is_delta_n());
  CHECK(posmaps::max_abs_diff(posmaps::theta_apply(d2, CMatrix::unit(2, 0, 1)),
                              -1.0 * CMatrix::unit(2, 0, 1)) == 0.0);
  const auto d3 = MapParams::delta_n(3);
  CHECK(posmaps::max_abs_diff(posmaps::theta_apply(d3, CMatrix::identity(3)),
                              2.0 * CMatrix::identity(3)) == 0.0);
  CHECK(oracle::min_eigenvalue(posmaps::choi(d3).matrix) >= -1e-12);
}

TEST_CASE("property: theta is linear and preserves hermiticity") {
  gen::Gen g(32);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = g.integer(2, 7);
    const auto un = static_cast<std::size_t>(n);
    const MapParams p(g.permutation(n), g.uniform(0.1, 5), g.reals(un, 0.1, 4));
    const auto x = g.complex_matrix(un, un), y = g.complex_matrix(un, un);
    const posmaps::cplx alpha = g.complex_normal(), beta = g.complex_normal();
    const auto lhs = posmaps::theta_apply(p, alpha * x + beta * y);
    const auto rhs = alpha * posmaps::theta_apply(p, x) + beta * posmaps::theta_apply(p, y);
    CHECK(posmaps::max_abs_diff(lhs, rhs) < 1e-12);
    CHECK(posmaps::is_hermitian(posmaps::theta_apply(p, g.hermitian(un)), 1e-13));
  }
}

TEST_CASE("property: theta matches its D-type form and the entrywise definition") {
  gen::Gen g(33);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = g.integer(2, 7);
    const auto un = static_cast<std::size_t>(n);
    const MapParams p(g.permutation(n), g.uniform(0.1, 5), g.reals(un, 0.1, 4));
    const auto x = g.complex_matrix(un, un);
    const auto d = posmaps::d_matrix(p);
    auto dtype = -1.0 * x;
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t i = 0; i < un; ++i) dtype(j, j) += x(i, i) * d(i, j);
    CHECK(posmaps::max_abs_diff(posmaps::theta_apply(p, x), dtype) < 1e-12);
    CHECK(posmaps::max_abs_diff(posmaps::theta_apply(p, x),
                                oracle::theta(p.sigma().images(), p.a(), p.c(), x)) < 1e-12);
  }
}

TEST_CASE("property: choi agrees with entrywise oracle and has the expected trace") {
  gen::Gen g(34);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = g.integer(2, 6);
    const MapParams p(g.permutation(n), g.uniform(0.1, 5), g.reals(static_cast<std::size_t>(n), 0.1, 4));
    for (bool t : {false, true}) {
      const auto c = posmaps::choi(p, t);
      CHECK(posmaps::max_abs_diff(c.matrix, oracle::choi(p.sigma().images(), p.a(), p.c(), t)) == 0.0);
      CHECK(posmaps::is_hermitian(c.matrix));
      CHECK(c.matrix.trace().real() == doctest::Approx(n * (p.a() - 1) + p.sum_c()).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: choi spectrum closed form when sigma has no fixed points") {
  gen::Gen g(35);
  int checked = 0;
  while (checked < 80) {
    const int n = g.integer(2, 7);
    const auto s = g.permutation(n);
    if (posmaps::min_max_cycle_length(s).l_min < 2) continue;
    const MapParams p(s, g.uniform(0.1, 9), g.reals(static_cast<std::size_t>(n), 0.1, 4));
    const auto got = posmaps::hermitian_spectrum(posmaps::choi(p).matrix).eigenvalues;
    CHECK(oracle::max_diff(got, oracle::closed_form_spectrum(p.a(), p.c())) < 1e-8);
    ++checked;
  }
}
