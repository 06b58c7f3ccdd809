#include <doctest.h>

#include <cmath>

#include "copex/costfn.hpp"
#include "copex/grid.hpp"
#include "copex/verify.hpp"

using namespace copex;

namespace {

SupportSet diagonal_support(int m, Sense sense) {
  SupportSet s;
  s.sense = sense;
  for (int i = 0; i < m; ++i) {
    const double x = (i + 0.5) / m;
    s.points.emplace_back(x, x);
  }
  return s;
}

SupportSet antidiagonal_support(int m, Sense sense) {
  SupportSet s;
  s.sense = sense;
  for (int i = 0; i < m; ++i) {
    const double x = (i + 0.5) / m;
    s.points.emplace_back(x, 1.0 - x);
  }
  return s;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("two-point examples") {
    auto prod = registry_cost("product");
    SupportSet anti{{{0.0, 1.0}, {1.0, 0.0}}, Sense::Min};
    CHECK(check_cyclical_monotonicity(anti, prod, 2, 1, 7).pass);

    SupportSet diag{{{0.0, 0.0}, {1.0, 1.0}}, Sense::Min};
    auto rep = check_cyclical_monotonicity(diag, prod, 2, 1, 7);
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst_gap == doctest::Approx(1.0));
    CHECK(rep.violating_cycle.size() == 2);
  }

  TEST_CASE("grid optimizer supports pass for their own sense") {
    auto c = registry_cost("sincos");
    auto r = bound(c, GridSpec{6, GridMode::Midpoint}, Sense::Max);
    SupportSet s{support_points(r.coupling), Sense::Max};
    auto rep = check_cyclical_monotonicity(s, c, 5, 10000, 42);
    CHECK(rep.pass);
    CHECK(rep.worst_gap <= 1e-10);
  }

  TEST_CASE("supermodular costs: diagonal maximizes, antidiagonal minimizes") {
    auto prod = registry_cost("product");
    CHECK(check_cyclical_monotonicity(diagonal_support(32, Sense::Max), prod, 4,
                                      500, 1)
              .pass);
    CHECK(check_cyclical_monotonicity(antidiagonal_support(32, Sense::Min),
                                      prod, 4, 500, 1)
              .pass);
    auto wrong_max = check_cyclical_monotonicity(
        antidiagonal_support(32, Sense::Max), prod, 2, 1, 1);
    CHECK_FALSE(wrong_max.pass);
    auto wrong_min = check_cyclical_monotonicity(
        diagonal_support(32, Sense::Min), prod, 2, 1, 1);
    CHECK_FALSE(wrong_min.pass);
  }

  TEST_CASE("assignment supports satisfy monotonicity for the discrete cost") {
    auto c = registry_cost("sin_sum");
    auto r = bound(c, GridSpec{5, GridMode::Midpoint}, Sense::Max);
    SupportSet s{support_points(r.coupling), Sense::Max};
    CHECK(check_cyclical_monotonicity(s, c, 4, 2000, 9).pass);
  }

  TEST_CASE("report is reproducible and order-independent") {
    auto c = registry_cost("sinsin");
    SupportSet s = antidiagonal_support(40, Sense::Max);
    auto a = check_cyclical_monotonicity(s, c, 6, 3000, 123);
    auto b = check_cyclical_monotonicity_serial(s, c, 6, 3000, 123);
    CHECK(a.pass == b.pass);
    CHECK(a.worst_gap == b.worst_gap);
    CHECK(a.violating_cycle == b.violating_cycle);
  }

  TEST_CASE("input validation") {
    auto prod = registry_cost("product");
    SupportSet empty{{}, Sense::Min};
    CHECK_THROWS_AS(check_cyclical_monotonicity(empty, prod, 2, 1, 0),
                    std::invalid_argument);
    SupportSet one{{{0.5, 0.5}}, Sense::Min};
    CHECK_THROWS_AS(check_cyclical_monotonicity(one, prod, 1, 1, 0),
                    std::invalid_argument);
    CHECK(check_cyclical_monotonicity(one, prod, 3, 5, 0).pass);
  }

  TEST_CASE("doubly stochastic checks") {
    SquareMatrix perm(4, 0.0);
    for (int i = 0; i < 4; ++i) perm(i, (i + 1) % 4) = 0.25;
    CHECK(check_doubly_stochastic(perm, 0.0, MassConvention::CellMass).pass);

    SquareMatrix indep(4, 1.0 / 16.0);
    CHECK(check_doubly_stochastic(indep, 1e-15, MassConvention::CellMass).pass);

    SquareMatrix ones(3, 1.0 / 3.0);
    CHECK(check_doubly_stochastic(ones, 1e-15, MassConvention::RowSumOne).pass);

    SquareMatrix holed(4, 0.25);
    for (int j = 0; j < 4; ++j) holed(2, j) = 0.0;
    auto rep = check_doubly_stochastic(holed, 1e-12, MassConvention::RowSumOne);
    CHECK_FALSE(rep.pass);
    CHECK(rep.detail.find("row 3") != std::string::npos);

    SquareMatrix neg(2, 0.5);
    neg(0, 1) = -0.1;
    CHECK_THROWS_AS(check_doubly_stochastic(neg, 1e-9, MassConvention::RowSumOne),
                    std::invalid_argument);
  }
}
