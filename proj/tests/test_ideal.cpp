#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "sphedra/errors.hpp"
#include "sphedra/ideal.hpp"
#include "sphedra/polyhedron.hpp"
#include "support/oracles.hpp"

using sphedra::Vec3;

namespace {

constexpr double kPi = std::numbers::pi;

// Real root of 2h^3 - 2h^2 - 7h + 8 in [1, 3/2] and its companion root,
// both evaluated to full precision with independent multiprecision tooling.
constexpr double kEta = 1.2622189781000104;
constexpr double kRival = 1.6538868491936141;
constexpr double kMaxPyramidArea5 = 5.778863966793344;

double central_difference(const std::function<double(double)>& f, double x,
                          double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace

TEST_CASE("counts bound matches its closed forms at the regular solids") {
  CHECK(std::abs(sphedra::toth_bound(4, 6, 4) - 8.0 / std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(sphedra::toth_bound(6, 12, 8) - 4.0 * std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(sphedra::toth_bound(12, 30, 20) -
                 (2.0 * std::sqrt(75.0) - 2.0 * std::sqrt(15.0))) < 1e-12);

  SUBCASE("invalid counts are rejected") {
    CHECK_THROWS_AS(sphedra::toth_bound(5, 9, 5), sphedra::InvalidCounts);
    CHECK_THROWS_AS(sphedra::toth_bound(3, 3, 2), sphedra::InvalidCounts);
    CHECK_THROWS_AS(sphedra::toth_bound(4, 5, 3), sphedra::InvalidCounts);
  }
}

TEST_CASE("vertex-count bound agrees with high-precision reference values") {
  const double expected[] = {4.61880215351701, 5.96495385421934,
                             6.92820323027551, 7.64934189943441,
                             8.20848343981605, 8.65426486680975,
                             9.01777445715817, 9.31975255361242,
                             9.57454138327394};
  for (int v = 4; v <= 12; ++v) {
    CHECK(std::abs(sphedra::g_bound(v) - expected[v - 4]) < 1e-10);
  }

  // With simplicial counts e = 3v - 6, f = 2v - 4 the two bounds coincide.
  for (int v : {4, 6, 12}) {
    CHECK(std::abs(sphedra::g_bound(v) -
                   sphedra::toth_bound(v, 3 * v - 6, 2 * v - 4)) < 1e-10);
  }
  CHECK_THROWS_AS(sphedra::g_bound(3), sphedra::DomainError);
}

TEST_CASE("regular polygons maximize perimeter and area in a circle") {
  CHECK(std::abs(sphedra::kgon_max_perimeter(4, 1.0) - 4.0 * std::sqrt(2.0)) <
        1e-12);
  CHECK(std::abs(sphedra::kgon_max_area(4, 1.0) - 2.0) < 1e-12);
  CHECK(std::abs(sphedra::kgon_max_perimeter(3, 1.0) - 3.0 * std::sqrt(3.0)) <
        1e-12);
  CHECK(std::abs(sphedra::kgon_max_area(3, 1.0) - 0.75 * std::sqrt(3.0)) <
        1e-12);
  CHECK(std::abs(sphedra::kgon_max_perimeter(6, 2.0) - 12.0) < 1e-12);
  CHECK(std::abs(sphedra::kgon_max_area(6, 2.0) - 6.0 * std::sqrt(3.0)) <
        1e-12);

  // Quadratic scaling in R for area, linear for perimeter.
  CHECK(std::abs(sphedra::kgon_max_area(5, 2.0) -
                 4.0 * sphedra::kgon_max_area(5, 1.0)) < 1e-12);
  CHECK(std::abs(sphedra::kgon_max_perimeter(5, 2.0) -
                 2.0 * sphedra::kgon_max_perimeter(5, 1.0)) < 1e-12);

  CHECK_THROWS_AS(sphedra::kgon_max_area(2, 1.0), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::kgon_max_perimeter(3, 0.0), sphedra::DomainError);
}

TEST_CASE("cap geometry ties base radius to cap height") {
  const sphedra::CapGeometry cap = sphedra::make_cap_geometry(0.8, 0.5);
  CHECK(cap.h == 0.8);
  CHECK(cap.t == 0.5);
  CHECK(std::abs(cap.R - std::sqrt(2.0 * 0.8 - 0.64)) < 1e-14);

  CHECK_NOTHROW(sphedra::make_cap_geometry(1.0, 1.0));  // apex at the top
  CHECK_THROWS_AS(sphedra::make_cap_geometry(1.0, 0.0), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::make_cap_geometry(1.0, 1.3), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::make_cap_geometry(2.0, 0.5), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::make_cap_geometry(0.0, 0.0), sphedra::DomainError);
}

TEST_CASE("lateral bound closed form and dominance over sampled pyramids") {
  CHECK(std::abs(sphedra::pyramid_lateral_bound(5, 1.0) - 2.0 * std::sqrt(3.0)) <
        1e-12);
  CHECK(std::abs(sphedra::pyramid_lateral_bound(4, 1.5) - 3.5128113740990990) <
        1e-12);

  // Vanishes with the cap: a flat sliver has no lateral surface.
  CHECK(sphedra::pyramid_lateral_bound(4, 1e-4) <
        sphedra::pyramid_lateral_bound(4, 1e-2));
  CHECK(sphedra::pyramid_lateral_bound(4, 1e-8) < 1e-3);

  CHECK_THROWS_AS(sphedra::pyramid_lateral_bound(5, 0.0), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::pyramid_lateral_bound(5, 2.0), sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::pyramid_lateral_bound(3, 1.0), sphedra::DomainError);

  SUBCASE("no sampled cap pyramid beats the bound") {
    std::mt19937_64 rng(0xcab5a11u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (double h : {0.6, 1.0, 1.4}) {
      const double bound = sphedra::pyramid_lateral_bound(5, h);
      const double R = std::sqrt(2.0 * h - h * h);
      const double z_base = 1.0 - h;
      for (int trial = 0; trial < 200; ++trial) {
        // Random base polygon in the base disk, azimuth-sorted.
        std::vector<double> az(4);
        for (auto& a : az) a = 2.0 * kPi * uni(rng);
        std::sort(az.begin(), az.end());
        std::vector<Vec3> base;
        for (double a : az) {
          const double r = R * uni(rng);
          base.push_back({r * std::cos(a), r * std::sin(a), z_base});
        }
        // Random apex strictly inside the cap.
        const double za = z_base + h * std::max(uni(rng), 1e-3);
        const double ra = std::sqrt(std::max(0.0, 1.0 - za * za)) * uni(rng);
        const double aa = 2.0 * kPi * uni(rng);
        const Vec3 apex{ra * std::cos(aa), ra * std::sin(aa), za};
        double lateral = 0.0;
        for (int i = 0; i < 4; ++i) {
          const Vec3 u = base[i] - apex;
          const Vec3 w = base[(i + 1) % 4] - apex;
          lateral += 0.5 * norm(cross(u, w));
        }
        CHECK(lateral <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("pyramid area profile values and height cubic") {
  CHECK(std::abs(sphedra::pyramid_area_profile(5, 1.0) -
                 (2.0 + 2.0 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(sphedra::pyramid_area_profile(5, kEta) - kMaxPyramidArea5) <
        1e-12);

  // Closed-form cross-check at the optimum: base 2u + lateral
  // 2 sqrt(u) sqrt(u + t^2) with u = 2 eta - eta^2 and t = eta reduces to
  // 4h - 2h^2 + 2 sqrt(4h^2 - h^4).
  const double direct = 4.0 * kEta - 2.0 * kEta * kEta +
                        2.0 * std::sqrt(4.0 * kEta * kEta -
                                        kEta * kEta * kEta * kEta);
  CHECK(std::abs(sphedra::pyramid_area_profile(5, kEta) - direct) < 1e-12);

  // Profile = base polygon area + lateral bound, by definition.
  for (double h : {1.0, 1.2, 1.6, 1.9}) {
    const double R = std::sqrt(2.0 * h - h * h);
    CHECK(std::abs(sphedra::pyramid_area_profile(5, h) -
                   (sphedra::kgon_max_area(4, R) +
                    sphedra::pyramid_lateral_bound(5, h))) < 1e-12);
  }

  CHECK_THROWS_AS(sphedra::pyramid_area_profile(5, 0.99),
                  sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::pyramid_area_profile(5, 2.0), sphedra::DomainError);

  SUBCASE("optimal height satisfies the cubic and the profile peaks there") {
    const double eta = sphedra::optimal_pyramid_height(5);
    CHECK(std::abs(eta - kEta) < 1e-12);
    CHECK(std::abs(2.0 * eta * eta * eta - 2.0 * eta * eta - 7.0 * eta + 8.0) <
          1e-10);

    // Independent argmax: golden-section search on the profile.
    const double gs = testsupport::golden_section_argmax(
        [](double h) { return sphedra::pyramid_area_profile(5, h); }, 1.0,
        1.9);
    CHECK(std::abs(gs - eta) < 1e-6);

    // First-order stationarity and local maximality.
    auto f5 = [](double h) { return sphedra::pyramid_area_profile(5, h); };
    CHECK(std::abs(central_difference(f5, eta, 1e-5)) < 1e-7);
    CHECK(f5(eta) > f5(eta - 1e-4));
    CHECK(f5(eta) > f5(eta + 1e-4));
  }

  SUBCASE("companion root scores strictly less and is not stationary") {
    const auto roots = sphedra::pyramid_height_roots5();
    CHECK(roots.maximizer == sphedra::optimal_pyramid_height(5));
    CHECK(std::abs(roots.rival - kRival) < 1e-9);
    const double r = roots.rival;
    CHECK(std::abs(2.0 * r * r * r - 2.0 * r * r - 7.0 * r + 8.0) < 1e-10);
    auto f5 = [](double h) { return sphedra::pyramid_area_profile(5, h); };
    CHECK(f5(roots.rival) < f5(roots.maximizer));
    CHECK(std::abs(central_difference(f5, roots.rival, 1e-6)) > 0.01);
  }
}

TEST_CASE("the unrestricted height sweep never peaks below 1") {
  // The area profile is only defined on [1, 2), but base-plus-lateral is
  // meaningful for any cap height; sweeping the full range confirms the
  // restriction discards nothing.
  for (int v = 4; v <= 7; ++v) {
    double best_h = 0.0;
    double best = -1.0;
    for (int i = 1; i < 400; ++i) {
      const double h = 2.0 * i / 400.0;
      const double R = std::sqrt(2.0 * h - h * h);
      const double area = sphedra::kgon_max_area(v - 1, R) +
                          sphedra::pyramid_lateral_bound(v, h);
      if (area > best) {
        best = area;
        best_h = h;
      }
    }
    CHECK(best_h > 1.0);
    CHECK(best_h < 2.0);
    CHECK(std::abs(best_h - sphedra::optimal_pyramid_height(v)) < 0.01);
  }
}

TEST_CASE("optimal heights for other vertex counts are stationary maxima") {
  CHECK(std::abs(sphedra::optimal_pyramid_height(4) - 4.0 / 3.0) < 1e-12);
  for (int v = 6; v <= 9; ++v) {
    const double h = sphedra::optimal_pyramid_height(v);
    CHECK(h > 1.0);
    CHECK(h < 2.0);
    auto f = [v](double x) { return sphedra::pyramid_area_profile(v, x); };
    CHECK(std::abs(central_difference(f, h, 1e-5)) < 1e-6);
    CHECK(f(h) >= f(h - 1e-4));
    CHECK(f(h) >= f(h + 1e-4));
  }
}

TEST_CASE("pyramid constructors agree with the scalar maxima") {
  for (int v = 4; v <= 9; ++v) {
    const sphedra::Polyhedron p = sphedra::build_ideal_pyramid(v);
    CHECK(std::abs(sphedra::surface_area(p) - sphedra::pyramid_max_area(v)) <
          1e-10);
    const auto type = sphedra::classify(p);
    if (v == 4) {
      CHECK(type.family == sphedra::Family::kSimplex);
    } else {
      CHECK(type.family == sphedra::Family::kPyramid);
      CHECK(type.vertex_count == v);
    }
  }
  CHECK(std::abs(sphedra::pyramid_max_area(5) - kMaxPyramidArea5) < 1e-12);

  SUBCASE("v = 4 maximum dominates random inscribed tetrahedra") {
    const double best = sphedra::pyramid_max_area(4);
    CHECK(std::abs(best - 8.0 / std::sqrt(3.0)) < 1e-10);
    std::mt19937_64 rng(0x7e7a4u);
    for (int trial = 0; trial < 10000; ++trial) {
      const auto pts = testsupport::random_unit_points(4, rng);
      try {
        CHECK(sphedra::surface_area(sphedra::convex_hull(pts)) <=
              best + 1e-9);
      } catch (const sphedra::DegenerateInput&) {
      }
    }
  }
}

TEST_CASE("bipyramid profile is symmetric and peaks at the equator") {
  for (double h : {0.3, 0.7, 1.4}) {
    CHECK(std::abs(sphedra::bipyramid_area_profile(5, h) -
                   sphedra::bipyramid_area_profile(5, 2.0 - h)) < 1e-12);
  }
  for (int k = 1; k < 200; ++k) {
    const double h = 2.0 * k / 200.0;
    CHECK(std::abs(sphedra::bipyramid_area_profile(7, h) -
                   sphedra::bipyramid_area_profile(7, 2.0 - h)) < 1e-12);
    CHECK(sphedra::bipyramid_area_profile(7, h) <=
          sphedra::bipyramid_max_area(7) + 1e-12);
  }
  CHECK(std::abs(sphedra::bipyramid_area_profile(5, 1.0) -
                 sphedra::bipyramid_max_area(5)) < 1e-14);
  CHECK(std::abs(sphedra::bipyramid_max_area(5) - 1.5 * std::sqrt(15.0)) <
        1e-12);
  CHECK(std::abs(sphedra::bipyramid_max_area(6) - 4.0 * std::sqrt(3.0)) <
        1e-12);

  CHECK_THROWS_AS(sphedra::bipyramid_area_profile(5, 0.0),
                  sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::bipyramid_area_profile(5, 2.0),
                  sphedra::DomainError);
  CHECK_THROWS_AS(sphedra::bipyramid_max_area(4), sphedra::DomainError);
}

TEST_CASE("bipyramid constructors agree with the scalar maxima") {
  for (int v = 5; v <= 9; ++v) {
    const sphedra::Polyhedron p = sphedra::build_ideal_bipyramid(v);
    CHECK(std::abs(sphedra::surface_area(p) - sphedra::bipyramid_max_area(v)) <
          1e-10);
    const auto type = sphedra::classify(p);
    if (v == 6) {
      CHECK(type.family == sphedra::Family::kOther);  // octahedron
    } else {
      CHECK(type.family == sphedra::Family::kBipyramid);
      CHECK(type.vertex_count == v);
    }
  }

  // The five-vertex maximizer hits the poles-plus-equatorial-triangle
  // configuration exactly.
  const sphedra::Polyhedron best = sphedra::build_ideal_bipyramid(5);
  const std::vector<Vec3> expected{
      {0, 0, 1}, {0, 0, -1}, {1, 0, 0},
      sphedra::kEquatorThird1, sphedra::kEquatorThird2};
  REQUIRE(best.vertices.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(norm(best.vertices[i] - expected[i]) < 1e-12);
  }
}

TEST_CASE("family maxima stay below the vertex-count bound") {
  for (int v = 4; v <= 12; ++v) {
    CHECK(sphedra::pyramid_max_area(v) <= sphedra::g_bound(v) + 1e-12);
    if (v >= 5) {
      CHECK(sphedra::bipyramid_max_area(v) <= sphedra::g_bound(v) + 1e-12);
    }
  }
  // Five vertices: the bipyramid beats the best pyramid by a clear margin.
  CHECK(sphedra::bipyramid_max_area(5) - sphedra::pyramid_max_area(5) > 0.03);
}

TEST_CASE("lateral decomposition of the ideal pyramid validates") {
  const sphedra::Polyhedron p = sphedra::build_ideal_pyramid(5);
  const sphedra::LateralDecomposition d =
      sphedra::pyramid_lateral_decomposition(p);

  REQUIRE(d.side_lengths.size() == 4);
  REQUIRE(d.foot_lengths.size() == 4);
  CHECK(std::abs(d.apex_height - kEta) < 1e-12);

  const double R = std::sqrt(2.0 * kEta - kEta * kEta);
  const double base_area = sphedra::kgon_max_area(4, R);
  CHECK(sphedra::validate_lateral_decomposition(d, base_area));
  CHECK(std::abs(d.inradius - R * std::cos(kPi / 4.0)) < 1e-10);
  for (double s : d.side_lengths) CHECK(std::abs(s - R * std::sqrt(2.0)) < 1e-10);

  // Lateral area identity: (1/2) sum s_i sqrt(p_i^2 + t^2) is the total
  // surface minus the base.
  double lateral = 0.0;
  for (std::size_t i = 0; i < d.side_lengths.size(); ++i) {
    lateral += 0.5 * d.side_lengths[i] *
               std::hypot(d.foot_lengths[i], d.apex_height);
  }
  CHECK(std::abs(lateral - (sphedra::surface_area(p) - base_area)) < 1e-10);
  CHECK(std::abs(lateral - sphedra::pyramid_lateral_bound(5, kEta)) < 1e-10);

  SUBCASE("perturbations break validation") {
    sphedra::LateralDecomposition bad = d;
    bad.foot_lengths[0] += 1e-3;
    CHECK_FALSE(sphedra::validate_lateral_decomposition(bad, base_area));
    CHECK_FALSE(sphedra::validate_lateral_decomposition(d, base_area + 1e-6));
    sphedra::LateralDecomposition short_one = d;
    short_one.side_lengths.pop_back();
    CHECK_FALSE(
        sphedra::validate_lateral_decomposition(short_one, base_area));
  }

  SUBCASE("non-pyramids are rejected") {
    CHECK_THROWS_AS(sphedra::pyramid_lateral_decomposition(
                        sphedra::build_ideal_bipyramid(5)),
                    sphedra::DomainError);
    CHECK_THROWS_AS(sphedra::pyramid_lateral_decomposition(
                        sphedra::build_ideal_pyramid(4)),
                    sphedra::DomainError);
  }
}

TEST_CASE("volume profile peaks at 4/3 while the area profile does not") {
  CHECK(std::abs(sphedra::pyramid_volume_profile(5, 4.0 / 3.0) - 64.0 / 81.0) <
        1e-12);
  CHECK(sphedra::kOptimalVolumePyramidHeight == 4.0 / 3.0);

  const double gs = testsupport::golden_section_argmax(
      [](double h) { return sphedra::pyramid_volume_profile(5, h); }, 1.0,
      1.9);
  CHECK(std::abs(gs - 4.0 / 3.0) < 1e-6);

  // The area profile is visibly non-stationary at the volume optimum.
  auto f5 = [](double h) { return sphedra::pyramid_area_profile(5, h); };
  const double slope = central_difference(f5, 4.0 / 3.0, 1e-6);
  CHECK(std::abs(slope) > 0.01);
  CHECK(std::abs(slope - (-0.7370485393333894)) < 1e-4);

  CHECK(std::abs(sphedra::bipyramid_max_volume(5) - 0.5 * std::sqrt(3.0)) <
        1e-12);
  // naming note: six vertices give the regular octahedron, volume 4/3
  CHECK(std::abs(sphedra::bipyramid_max_volume(6) - 4.0 / 3.0) < 1e-12);
  CHECK(std::abs(sphedra::bipyramid_max_volume(5) -
                 sphedra::volume(sphedra::build_ideal_bipyramid(5))) < 1e-12);
  CHECK_THROWS_AS(sphedra::pyramid_volume_profile(5, 2.1),
                  sphedra::DomainError);
}
