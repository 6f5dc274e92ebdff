#include <doctest.h>

#include <algorithm>
#include <set>
#include <numeric>

#include "posmaps/errors.hpp"
#include "posmaps/perm.hpp"
#include "support/gen.hpp"

using posmaps::Permutation;

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::multiset<int> cycle_type(const Permutation& s) {
  std::multiset<int> out;
  for (const auto& c : posmaps::cycle_decompose(s).cycles) out.insert(static_cast<int>(c.size()));
  return out;
}

}  // namespace

TEST_CASE("tau images") {
  CHECK(Permutation::tau(3, 2).images() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::tau(3, 3).images() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::tau(3, 3).is_identity());
  CHECK(Permutation::tau(6, 4).images() == std::vector<int>{5, 6, 1, 2, 3, 4});
}

TEST_CASE("tau rejects out of range arguments") {
  CHECK_THROWS_AS(Permutation::tau(3, 0), posmaps::ParameterError);
  CHECK_THROWS_AS(Permutation::tau(3, 4), posmaps::ParameterError);
  CHECK_THROWS_AS(Permutation::tau(0, 1), posmaps::ParameterError);
}

TEST_CASE("cycle decomposition examples") {
  using Cycles = std::vector<std::vector<int>>;
  CHECK(posmaps::cycle_decompose(Permutation::tau(3, 2)).cycles == Cycles{{1, 3, 2}});
  CHECK(posmaps::cycle_decompose(Permutation::identity(4)).cycles == Cycles{{1}, {2}, {3}, {4}});
  CHECK(posmaps::cycle_decompose(Permutation::tau(6, 3)).cycles == Cycles{{1, 4}, {2, 5}, {3, 6}});
}

TEST_CASE("cycle length examples") {
  auto l = posmaps::min_max_cycle_length(Permutation::tau(6, 4));
  CHECK(l.l_min == 3);
  CHECK(l.l_max == 3);
  l = posmaps::min_max_cycle_length(Permutation::identity(5));
  CHECK(l.l_min == 1);
  CHECK(l.l_max == 1);
  l = posmaps::min_max_cycle_length(Permutation::from_images({2, 1, 4, 5, 3}));
  CHECK(l.l_min == 2);
  CHECK(l.l_max == 3);
}

TEST_CASE("involutions and fixed points") {
  const auto t = Permutation::from_images({2, 1, 3});
  CHECK(posmaps::is_involution(t));
  CHECK(posmaps::fixed_points(t) == std::vector<int>{3});
  CHECK(posmaps::is_involution(Permutation::tau(4, 2)));
  CHECK(posmaps::fixed_points(Permutation::tau(4, 2)).empty());
  CHECK_FALSE(posmaps::is_involution(Permutation::tau(3, 1)));
}

TEST_CASE("parse accepts the three text forms") {
  CHECK(Permutation::parse("tau:3:2") == Permutation::tau(3, 2));
  CHECK(Permutation::parse("images:2,1,4,3").images() == std::vector<int>{2, 1, 4, 3});
  CHECK(Permutation::parse("id:4") == Permutation::identity(4));
}

TEST_CASE("parse errors name the sigma field") {
  for (const char* bad : {"tau:3", "tau:x:1", "images:1,1,2", "images:", "cycle:3", "id:0",
                          "images:1,2,5", "tau:3:7", ""}) {
    CAPTURE(bad);
    try {
      (void)Permutation::parse(bad);
      FAIL("accepted malformed text");
    } catch (const posmaps::ParameterError& e) {
      CHECK(std::string(e.what()).rfind("sigma:", 0) == 0);
    }
  }
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), posmaps::ParameterError);
  CHECK_THROWS_AS(Permutation::from_images({}), posmaps::ParameterError);
}

TEST_CASE("property: inverse composes to identity") {
  gen::Gen g(11);
  for (int rep = 0; rep < 300; ++rep) {
    const auto s = g.permutation(g.integer(1, 10));
    CHECK(posmaps::compose(s, s.inverse()).is_identity());
    CHECK(posmaps::compose(s.inverse(), s).is_identity());
  }
}

TEST_CASE("property: cycle round trip is exhaustive for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    auto img = iota_vec(n);
    do {
      const auto s = Permutation::from_images(img);
      const auto d = posmaps::cycle_decompose(s);
      CHECK(posmaps::from_cycles(n, d.cycles) == s);
      int total = 0;
      std::vector<int> seen;
      for (const auto& c : d.cycles) {
        total += static_cast<int>(c.size());
        seen.insert(seen.end(), c.begin(), c.end());
        // canonical: starts at smallest element
        CHECK(c.front() == *std::min_element(c.begin(), c.end()));
        for (std::size_t k = 0; k < c.size(); ++k) CHECK(s(c[k]) == c[(k + 1) % c.size()]);
      }
      CHECK(total == n);
      std::sort(seen.begin(), seen.end());
      CHECK(seen == iota_vec(n));
      for (std::size_t k = 1; k < d.cycles.size(); ++k)
        CHECK(d.cycles[k - 1].front() < d.cycles[k].front());
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("property: cycle round trip sampled for n = 7, 8") {
  gen::Gen g(7);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = g.integer(7, 8);
    const auto s = g.permutation(n);
    CHECK(posmaps::from_cycles(n, posmaps::cycle_decompose(s).cycles) == s);
  }
}

TEST_CASE("property: cycle lengths of tau(n, k) equal n / gcd(n, k)") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto l = posmaps::min_max_cycle_length(Permutation::tau(n, k));
      const int expected = n / std::gcd(n, k);
      CHECK(l.l_min == expected);
      CHECK(l.l_max == expected);
    }
}

TEST_CASE("property: l_min >= 2 iff no fixed points") {
  gen::Gen g(5);
  for (int rep = 0; rep < 500; ++rep) {
    const auto s = g.permutation(g.integer(1, 9));
    CHECK((posmaps::min_max_cycle_length(s).l_min >= 2) == posmaps::fixed_points(s).empty());
  }
}

TEST_CASE("property: tau(n, k) and tau(n, gcd(n, k)) share a cycle type") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(cycle_type(Permutation::tau(n, k)) == cycle_type(Permutation::tau(n, std::gcd(n, k))));
}

TEST_CASE("property: generated n-cycles and involutions have the advertised shape") {
  gen::Gen g(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = g.integer(2, 8);
    CHECK(posmaps::is_full_cycle(g.n_cycle(n)));
    CHECK(posmaps::is_involution(g.involution(n)));
  }
}
