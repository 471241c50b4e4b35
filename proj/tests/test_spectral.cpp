#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "twa/errors.hpp"
#include "twa/oracle.hpp"
#include "twa/spectral.hpp"

using namespace twa;

namespace {

const auto kMax = SemiringTag::MaxPlus;
const Weight Z = Weight::zero();

TropicalMatrix matrix(std::initializer_list<std::initializer_list<Weight>> rows) {
  TropicalMatrix m(rows.size(), kMax);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& w : row) m.set(i, j++, w);
    ++i;
  }
  return m;
}

Weight oracle_rho(const TropicalMatrix& m) {
  Weight best = Weight::zero();
  for (const auto& c : oracle::simple_circuits(m)) best = oplus(best, Weight(c.mean), kMax);
  return best;
}

// I + M + ... + M^{n-1} by repeated products.
TropicalMatrix power_sum(const TropicalMatrix& m) {
  auto sum = TropicalMatrix::identity(m.size(), kMax);
  auto power = sum;
  for (std::size_t k = 1; k < m.size(); ++k) {
    power = mat_mul(power, m);
    sum = mat_oplus(sum, power);
  }
  return sum;
}

TropicalMatrix shifted(const TropicalMatrix& m, const Rational& c) {
  TropicalMatrix r(m.size(), kMax);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j).is_finite()) r.set(i, j, Weight(Rational(m(i, j).value() + c)));
  return r;
}

}  // namespace

TEST_CASE("mat_mul") {
  auto a = matrix({{Weight(1L), Weight(-2L)}, {Z, Weight(3L)}});
  auto id = TropicalMatrix::identity(2, kMax);
  CHECK(mat_mul(a, id) == a);
  CHECK(mat_mul(id, a) == a);
  auto u = matrix({{Weight(0L), Weight(1L)}, {Z, Weight(0L)}});
  CHECK(mat_mul(u, u) == u);
  CHECK(mat_mul(TropicalMatrix(2, kMax), a) == TropicalMatrix(2, kMax));
  CHECK_THROWS_AS(mat_mul(a, TropicalMatrix(3, kMax)), DimensionError);
  CHECK_THROWS_AS(mat_mul(a, TropicalMatrix(2, SemiringTag::MinPlus)), SemiringError);
}

TEST_CASE("vec_mul") {
  auto a = matrix({{Weight(1L), Weight(-2L)}, {Z, Weight(3L)}});
  auto v = vec_mul({Weight(0L), Weight(1L)}, a);
  CHECK(v[0] == Weight(1L));
  CHECK(v[1] == Weight(4L));
}

TEST_CASE("max_mean_cycle examples") {
  CHECK(max_mean_cycle(matrix({{Weight(-1L), Weight(2L)}, {Weight(0L), Z}})) == Weight(1L));
  CHECK(max_mean_cycle(matrix({{Weight(-3L)}})) == Weight(-3L));
  CHECK(max_mean_cycle(matrix({{Z, Weight(5L), Weight(1L)}, {Z, Z, Weight(7L)}, {Z, Z, Z}})).is_zero());
  CHECK(max_mean_cycle(TropicalMatrix(0, kMax)).is_zero());
  // Mean 1/3 needs an exact rational.
  CHECK(max_mean_cycle(matrix({{Z, Weight(1L), Z}, {Z, Z, Weight(0L)}, {Weight(0L), Z, Z}})) ==
        Weight(Rational(1, 3)));
  CHECK_THROWS_AS(max_mean_cycle(TropicalMatrix(1, SemiringTag::MinPlus)), SemiringError);
}

TEST_CASE("max_mean_cycle matches circuit enumeration") {
  std::mt19937 rng(31);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + round % 6;
    auto m = testing::random_matrix(rng, n, -5, 5, 0.5);
    CHECK(max_mean_cycle(m) == oracle_rho(m));
    Rational c = testing::random_rational(rng, -4, 4, true);
    Weight rho = max_mean_cycle(m);
    Weight expected = rho.is_zero() ? rho : Weight(Rational(rho.value() + c));
    CHECK(max_mean_cycle(shifted(m, c)) == expected);
  }
}

TEST_CASE("critical circuit has the maximum mean") {
  std::mt19937 rng(37);
  for (int round = 0; round < 200; ++round) {
    auto m = testing::random_matrix(rng, 1 + round % 6, -5, 5, 0.5);
    auto circuit = critical_circuit(ArcGraph::from_matrix(m));
    Weight rho = max_mean_cycle(m);
    REQUIRE(circuit.has_value() == rho.is_finite());
    if (!circuit) continue;
    CHECK(Weight(circuit->mean) == rho);
    Rational sum = 0;
    const auto& v = circuit->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Weight& w = m(v[i], v[(i + 1) % v.size()]);
      REQUIRE(w.is_finite());
      sum += w.value();
    }
    CHECK(sum / static_cast<long>(v.size()) == circuit->mean);
  }
}

TEST_CASE("mat_star examples") {
  CHECK(mat_star(matrix({{Z, Weight(1L)}, {Z, Z}})) == matrix({{Weight(0L), Weight(1L)}, {Z, Weight(0L)}}));
  CHECK(mat_star(matrix({{Weight(-1L)}})) == TropicalMatrix::identity(1, kMax));
  CHECK_THROWS_AS(mat_star(matrix({{Weight(1L)}})), PositiveCycleError);
}

TEST_CASE("mat_star equals the truncated power sum exactly when rho <= 0") {
  std::mt19937 rng(41);
  int finite = 0;
  for (int round = 0; round < 300; ++round) {
    auto m = testing::random_matrix(rng, 1 + round % 5, -5, 3, 0.45);
    Weight rho = max_mean_cycle(m);
    if (is_positive(rho)) {
      CHECK_THROWS_AS(mat_star(m), PositiveCycleError);
      continue;
    }
    ++finite;
    auto star = mat_star(m);
    CHECK(star == power_sum(m));
    CHECK(mat_oplus(mat_mul(m, star), TropicalMatrix::identity(m.size(), kMax)) == star);
  }
  CHECK(finite > 50);
}

TEST_CASE("strongly connected components") {
  ArcGraph g(4);
  g.add_arc(0, 1, 0);
  g.add_arc(1, 0, 0);
  g.add_arc(1, 2, 0);
  g.add_arc(3, 3, 0);
  auto sccs = strongly_connected_components(g);
  CHECK(sccs.size() == 3);
  std::size_t total = 0;
  for (const auto& c : sccs) total += c.size();
  CHECK(total == 4);
}

TEST_CASE("star_times_vector agrees with the dense star") {
  std::mt19937 rng(43);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + round % 6;
    auto m = testing::random_matrix(rng, n, -5, 2, 0.5);
    std::vector<Weight> v(n);
    for (auto& w : v)
      if (std::bernoulli_distribution(0.6)(rng)) w = Weight(long(std::uniform_int_distribution<int>(-3, 3)(rng)));
    if (is_positive(max_mean_cycle(m))) {
      // Diverges only if a positive circuit reaches a finite entry; the
      // dense star cannot tell, so only check the finite case.
      continue;
    }
    auto star = mat_star(m);
    auto u = star_times_vector(ArcGraph::from_matrix(m), v);
    for (std::size_t i = 0; i < n; ++i) {
      Weight expected = Weight::zero();
      for (std::size_t j = 0; j < n; ++j) expected = oplus(expected, otimes(star(i, j), v[j], kMax), kMax);
      CHECK(u[i] == expected);
    }
  }
  ArcGraph loop(1);
  loop.add_arc(0, 0, 1);
  CHECK_THROWS_AS(star_times_vector(loop, {Weight(0L)}), PositiveCycleError);
  CHECK(star_times_vector(loop, {Weight::zero()})[0].is_zero());
}
