#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "copex/costfn.hpp"
#include "copex/grid.hpp"
#include "copex/io.hpp"

using namespace copex;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("grid") {
  TEST_CASE("product midpoint matrix at level 1") {
    auto m = build_matrix(registry_cost("product"), GridSpec{1, GridMode::Midpoint});
    CHECK(m.values(0, 0) == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(m.values(0, 1) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(m.values(1, 0) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(m.values(1, 1) == doctest::Approx(0.5625).epsilon(1e-15));
  }

  TEST_CASE("product upper matrix hits cell corners") {
    for (int ms : {2, 5, 9}) {
      auto m = build_matrix(registry_cost("product"),
                            GridSpec{1, GridMode::Upper, ms});
      CHECK(m.values(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
      CHECK(m.values(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(m.values(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(m.values(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }

  TEST_CASE("sinsin midpoint matrix is the expected outer product") {
    auto m = build_matrix(registry_cost("sinsin"), GridSpec{2, GridMode::Midpoint});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(m.values(i, j) ==
              doctest::Approx(std::sin(kPi * (2 * i + 1) / 8.0) *
                              std::sin(kPi * (2 * j + 1) / 8.0))
                  .epsilon(1e-14));
  }

  TEST_CASE("bound examples") {
    auto r = bound(registry_cost("product"), GridSpec{1, GridMode::Midpoint},
                   Sense::Max);
    CHECK(r.value == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(r.coupling.perm == std::vector<std::size_t>{0, 1});

    for (int n = 2; n <= 7; ++n) {
      auto s = bound(registry_cost("sinsin"), GridSpec{n, GridMode::Midpoint},
                     Sense::Max);
      CHECK(std::abs(s.value - 0.5) <= 1e-9);
    }

    auto sc = bound(registry_cost("sincos"), GridSpec{7, GridMode::Midpoint},
                    Sense::Max);
    CHECK(std::abs(sc.value - 0.2122) <= 1e-3);
  }

  TEST_CASE("bound sequences reproduce the tabulated midpoint columns") {
    auto seq = bound_sequence(registry_cost("sincos"), 7, GridMode::Midpoint,
                              Sense::Max);
    const double expected[] = {0.1768, 0.2039, 0.2102, 0.2117, 0.2121, 0.2122};
    for (int n = 2; n <= 7; ++n) {
      CHECK(seq[n - 1].first == n);
      CHECK(std::abs(seq[n - 1].second - expected[n - 2]) <= 1e-3);
    }

    auto rec = bound_sequence(registry_cost("sin_recip_cos"), 7,
                              GridMode::Midpoint, Sense::Max);
    const double expected_rec[] = {0.4612, 0.3402, 0.5067, 0.4012, 0.4580,
                                   0.4400};
    for (int n = 2; n <= 7; ++n)
      CHECK(std::abs(rec[n - 1].second - expected_rec[n - 2]) <= 2e-2);
  }

  TEST_CASE("upper bounds for the product shrink toward 1/3") {
    auto seq = bound_sequence(registry_cost("product"), 4, GridMode::Upper,
                              Sense::Max, 2);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      CHECK(seq[i].second >= seq[i + 1].second - 1e-12);
    CHECK(seq.back().second > 1.0 / 3.0);
    CHECK(seq.back().second < 0.37);
  }

  TEST_CASE("support points") {
    DiscreteCoupling id{1, {0, 1}};
    auto pts = support_points(id);
    CHECK(pts[0] == std::pair<double, double>{0.25, 0.25});
    CHECK(pts[1] == std::pair<double, double>{0.75, 0.75});
    DiscreteCoupling swap{1, {1, 0}};
    auto sw = support_points(swap);
    CHECK(sw[0] == std::pair<double, double>{0.25, 0.75});
    CHECK(sw[1] == std::pair<double, double>{0.75, 0.25});

    auto r = bound(registry_cost("product"), GridSpec{3, GridMode::Midpoint},
                   Sense::Max);
    auto sp = support_points(r.coupling);
    for (int i = 0; i < 8; ++i) {
      CHECK(sp[i].first == doctest::Approx((i + 0.5) / 8.0));
      CHECK(sp[i].second == sp[i].first);  // diagonal by rearrangement
    }
  }

  TEST_CASE("couplings are exactly doubly stochastic") {
    auto r = bound(registry_cost("sincos"), GridSpec{4, GridMode::Midpoint},
                   Sense::Max);
    auto m = r.coupling.induced_matrix();
    const double mass = r.coupling.cell_mass();
    for (std::size_t i = 0; i < m.size(); ++i) {
      double row = 0.0, col = 0.0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        row += m(i, j);
        col += m(j, i);
      }
      CHECK(row == mass);
      CHECK(col == mass);
    }
  }

  TEST_CASE("sandwich: lower <= midpoint <= upper") {
    for (const auto& name : registry_names()) {
      for (int n = 3; n <= 5; ++n) {
        auto lo = bound(registry_cost(name), GridSpec{n, GridMode::Lower, 9},
                        Sense::Max);
        auto mid = bound(registry_cost(name), GridSpec{n, GridMode::Midpoint},
                         Sense::Max);
        auto hi = bound(registry_cost(name), GridSpec{n, GridMode::Upper, 9},
                        Sense::Max);
        CAPTURE(name);
        CHECK(lo.value <= mid.value + 1e-12);
        CHECK(mid.value <= hi.value + 1e-12);
      }
    }
  }

  TEST_CASE("matrix entries are ordered lower <= midpoint <= upper") {
    for (const auto& name : {"sincos", "sin_recip_cos"}) {
      auto lo = build_matrix(registry_cost(name), GridSpec{3, GridMode::Lower, 9});
      auto mid =
          build_matrix(registry_cost(name), GridSpec{3, GridMode::Midpoint});
      auto hi = build_matrix(registry_cost(name), GridSpec{3, GridMode::Upper, 9});
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
          CHECK(lo.values(i, j) <= mid.values(i, j));
          CHECK(mid.values(i, j) <= hi.values(i, j));
        }
    }
  }

  TEST_CASE("refinement monotonicity with exact corner extrema") {
    for (const auto& name : {"product", "sincos"}) {
      auto up = bound_sequence(registry_cost(name), 6, GridMode::Upper,
                               Sense::Max, 3);
      auto lo = bound_sequence(registry_cost(name), 6, GridMode::Lower,
                               Sense::Max, 3);
      for (std::size_t i = 0; i + 1 < up.size(); ++i) {
        CAPTURE(name);
        CHECK(up[i].second >= up[i + 1].second - 1e-12);
        CHECK(lo[i].second <= lo[i + 1].second + 1e-12);
      }
    }
  }

  TEST_CASE("bounds tighten with refinement") {
    for (const auto& name : {"product", "sinsin", "sincos", "sin_sum"}) {
      auto c = registry_cost(name);
      auto gap = [&](int n) {
        return bound(c, GridSpec{n, GridMode::Upper, 9}, Sense::Max).value -
               bound(c, GridSpec{n, GridMode::Lower, 9}, Sense::Max).value;
      };
      CAPTURE(name);
      CHECK(gap(7) < gap(3));
    }
  }

  TEST_CASE("linearity probe: x + y integrates to one under any coupling") {
    auto c = parse_cost("x+y");
    for (int n = 1; n <= 6; ++n)
      for (Sense s : {Sense::Min, Sense::Max}) {
        auto r = bound(c, GridSpec{n, GridMode::Midpoint}, s);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
      }
  }

  TEST_CASE("singular column: extremum modes exclude the x = 0 edge") {
    auto rc = registry_cost("sin_recip_cos");
    auto excl = build_matrix(rc, GridSpec{2, GridMode::Upper, 3,
                                          SingularPolicy::ExcludeBoundarySample});
    // With the x=0 edge excluded the first-column cells are sampled on
    // x in {1/8, 1/4} only; all entries stay finite either way.
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::isfinite(excl.values(i, j)));
    auto clamp = build_matrix(
        rc, GridSpec{2, GridMode::Upper, 3, SingularPolicy::Clamp});
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::isfinite(clamp.values(0, j)));
  }

  TEST_CASE("validation") {
    GridSpec bad_level{0, GridMode::Midpoint};
    CHECK_THROWS_AS(bad_level.validate(), std::invalid_argument);
    GridSpec bad_samples{3, GridMode::Lower, 0};
    CHECK_THROWS_AS(bad_samples.validate(), std::invalid_argument);
    CHECK_THROWS_AS(
        bound_sequence(registry_cost("product"), 11, GridMode::Midpoint,
                       Sense::Max),
        std::invalid_argument);
  }

  TEST_CASE("matrix csv round-trips through the reader") {
    auto m = build_matrix(registry_cost("sincos"), GridSpec{2, GridMode::Midpoint});
    std::ostringstream os;
    write_matrix_csv(m, os);
    std::istringstream is(os.str());
    SquareMatrix back = read_square_matrix_csv(is);
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(back(i, j) == m.values(i, j));
  }

  TEST_CASE("coupling json round-trip") {
    auto r = bound(registry_cost("sincos"), GridSpec{3, GridMode::Midpoint},
                   Sense::Max);
    auto j = coupling_to_json(r.coupling, r.value);
    CHECK(j["schema"] == 1);
    auto [back, value] = coupling_from_json(j);
    CHECK(back.level == 3);
    CHECK(back.perm == r.coupling.perm);
    CHECK(value == r.value);
  }
}
