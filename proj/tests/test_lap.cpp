#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "copex/lap.hpp"

using namespace copex;

namespace {

SquareMatrix random_matrix(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  SquareMatrix c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = uni(rng);
  return c;
}

// Dual certificate: feasibility everywhere, tightness on matched entries,
// and strong duality, at the documented scaled tolerance.
void check_duals(const SquareMatrix& c, const Assignment& a) {
  const std::size_t m = c.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, std::abs(c(i, j)));
  const double tol = 1e-9 * static_cast<double>(m) * std::max(1.0, scale);

  double dual_sum = 0.0;
  for (double u : a.row_potential) dual_sum += u;
  for (double v : a.col_potential) dual_sum += v;
  CHECK(std::abs(dual_sum - a.value) <= tol);

  for (std::size_t i = 0; i < m; ++i) {
    const double slack_assigned =
        c(i, a.perm[i]) - a.row_potential[i] - a.col_potential[a.perm[i]];
    CHECK(std::abs(slack_assigned) <= tol);
    for (std::size_t j = 0; j < m; ++j) {
      const double slack = c(i, j) - a.row_potential[i] - a.col_potential[j];
      if (a.sense == Sense::Min)
        CHECK(slack >= -tol);
      else
        CHECK(slack <= tol);
    }
  }
}

}  // namespace

TEST_SUITE("lap") {
  TEST_CASE("two-by-two examples") {
    auto c = SquareMatrix::from_rows({{0, 1}, {1, 0}});
    auto a = solve_lap(c, Sense::Min);
    CHECK(a.value == 0.0);
    CHECK(a.perm == std::vector<std::size_t>{0, 1});

    auto c2 = SquareMatrix::from_rows({{1, 2}, {4, 3}});
    auto mx = solve_lap(c2, Sense::Max);
    CHECK(mx.value == 6.0);
    CHECK(mx.perm == std::vector<std::size_t>{1, 0});
    auto mn = brute_force_lap(c2, Sense::Min);
    CHECK(mn.value == 4.0);
    CHECK(mn.perm == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("outer-product matrix: identity is forced by rearrangement") {
    const std::size_t m = 5;
    SquareMatrix c(m);
    double diag = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double si = std::sin(std::numbers::pi * (i + 1) / 5.0);
      diag += si * si;
      for (std::size_t j = 0; j < m; ++j)
        c(i, j) = si * std::sin(std::numbers::pi * (j + 1) / 5.0);
    }
    auto a = solve_lap(c, Sense::Max);
    auto oracle = brute_force_lap(c, Sense::Max);
    CHECK(a.value == oracle.value);
    CHECK(a.value == doctest::Approx(diag).epsilon(1e-14));
  }

  TEST_CASE("one-by-one") {
    auto a = brute_force_lap(SquareMatrix::from_rows({{7}}), Sense::Max);
    CHECK(a.value == 7.0);
    CHECK(a.perm == std::vector<std::size_t>{0});
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_lap(SquareMatrix(0), Sense::Min),
                    std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix::from_rows({{1, 2}, {3}}),
                    std::invalid_argument);
    SquareMatrix bad(2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(solve_lap(bad, Sense::Min), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_lap(SquareMatrix(11), Sense::Min),
                    std::invalid_argument);
  }

  TEST_CASE("oracle equivalence on 500 random matrices") {
    std::mt19937_64 rng(7031);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    for (int it = 0; it < 500; ++it) {
      const std::size_t m = size(rng);
      SquareMatrix c = random_matrix(rng, m);
      const Sense sense = (it % 2 == 0) ? Sense::Min : Sense::Max;
      auto fast = solve_lap(c, sense);
      auto oracle = brute_force_lap(c, sense);
      CAPTURE(it);
      CHECK(fast.value == oracle.value);
      CHECK(fast.perm == oracle.perm);
      check_duals(c, fast);
    }
  }

  TEST_CASE("tie-break is lexicographic on degenerate matrices") {
    // All optima are equal-valued: identity must come out.
    auto zero = solve_lap(SquareMatrix(4, 0.0), Sense::Min);
    CHECK(zero.perm == std::vector<std::size_t>{0, 1, 2, 3});

    // Rank-one additive matrix: every permutation is optimal.
    SquareMatrix add(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) add(i, j) = 0.5 * (i + 1) + 0.25 * (j + 1);
    for (Sense s : {Sense::Min, Sense::Max}) {
      auto a = solve_lap(add, s);
      CHECK(a.perm == std::vector<std::size_t>{0, 1, 2, 3, 4});
      CHECK(a.value == brute_force_lap(add, s).value);
    }

    // Discrete-valued random matrices have many exact ties.
    std::mt19937_64 rng(515);
    std::uniform_int_distribution<int> tri(0, 2);
    std::uniform_int_distribution<std::size_t> size(2, 7);
    for (int it = 0; it < 300; ++it) {
      const std::size_t m = size(rng);
      SquareMatrix c(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c(i, j) = 0.5 * tri(rng);
      const Sense sense = (it % 2 == 0) ? Sense::Min : Sense::Max;
      auto fast = solve_lap(c, sense);
      auto oracle = brute_force_lap(c, sense);
      CAPTURE(it);
      CHECK(fast.value == oracle.value);
      CHECK(fast.perm == oracle.perm);
    }
  }

  TEST_CASE("sense duality") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
      SquareMatrix c = random_matrix(rng, 6);
      SquareMatrix neg(6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) neg(i, j) = -c(i, j);
      CHECK(solve_lap(c, Sense::Max).value == -solve_lap(neg, Sense::Min).value);
    }
  }

  TEST_CASE("row and column shifts keep the chosen permutation") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 50; ++it) {
      SquareMatrix c = random_matrix(rng, 6);
      auto base = solve_lap(c, Sense::Min);
      SquareMatrix shifted = c;
      for (std::size_t j = 0; j < 6; ++j) shifted(2, j) += 0.75;   // row shift
      for (std::size_t i = 0; i < 6; ++i) shifted(i, 4) -= 0.5;    // col shift
      auto moved = solve_lap(shifted, Sense::Min);
      CHECK(moved.perm == base.perm);
      CHECK(moved.value == doctest::Approx(base.value + 0.25).epsilon(1e-12));
    }
  }
}
