#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qsurf/corpus.hpp"
#include "qsurf/curves.hpp"
#include "qsurf/errors.hpp"

using namespace qsurf;

TEST_CASE("earring circles pass through 1 and nest") {
  const auto geo = earring(5);
  REQUIRE(geo.N() == 5);
  for (int j = 1; j <= 5; ++j) {
    const auto& c = geo.circle(j);
    CHECK(c.center == Complex(-1.0 / j, 0.0));
    CHECK(c.radius == doctest::Approx((j + 1.0) / j));
    CHECK(std::abs(std::abs(Complex(1.0, 0.0) - c.center) - c.radius) < 1e-15);
  }
  CHECK(geo.distance(Complex(1.0, 0.0)) < 1e-15);
  CHECK(geo.distance(Complex(-3.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zeta curve starts at the base point and stays on the earring") {
  const auto ps = pair_structure(parse_word("abaBcc"));
  const auto zeta = zeta_curve(ps, 64);
  const auto geo = earring(3);
  REQUIRE_FALSE(zeta.samples.empty());
  CHECK(std::abs(zeta.samples.front().value - Complex(1.0, 0.0)) < 1e-14);
  for (const auto& s : zeta.samples) CHECK(geo.distance(s.value) < 1e-13);
  CHECK(zeta.samples.size() == 6u * 64u);
}

TEST_CASE("zeta curve rejects coarse sampling and multi-vertex words") {
  CHECK_THROWS_AS(zeta_curve(pair_structure(parse_word("aa")), 8), InvalidInvariantError);
  CHECK_THROWS_AS(zeta_curve(pair_structure(parse_word("abab")), 64), UnsupportedWordError);
}

TEST_CASE("circle windings against the ray-crossing oracle") {
  for (const char* text : {"aa", "abAB", "abaB", "aabb", "abaBcc", "abABcdCD", "aabcBC"}) {
    CAPTURE(text);
    const auto ps = pair_structure(parse_word(text));
    const auto zeta = zeta_curve(ps, 1024);
    const auto comb = circle_windings(ps);
    const int k = oracle::same_exponent_pairs(text);
    CHECK(comb.around_zero == 2 * k);
    CHECK(oracle::ray_crossing_winding(zeta.values(), Complex(0.0, 0.0)) == 2 * k);
    const auto numeric = numeric_circle_windings(zeta, earring(ps.N));
    CHECK(numeric == comb.per_circle);
    const auto wz = winding_around(zeta, Complex(0.0, 0.0));
    CHECK(wz.winding == 2 * k);
    CHECK(wz.residual < kIntegralityTolerance);
  }
}

TEST_CASE("pullback generators wind once or not at all") {
  const auto ps = pair_structure(parse_word("abaBcc"));
  const auto zeta = zeta_curve(ps, 256);
  const auto geo = earring(3);
  const std::vector<int> expected = {2, 0, 2};
  for (int j = 1; j <= 3; ++j) {
    const auto pb = pullback_generator(zeta, j);
    const auto w = winding_around(pb, geo.circle(j).center);
    CHECK(w.winding == expected[j - 1]);
    CHECK(oracle::ray_crossing_winding(pb.values(), geo.circle(j).center) == expected[j - 1]);
  }
}

TEST_CASE("power curves") {
  for (int p = -5; p <= 5; ++p) {
    const auto c = power_curve(p, 512);
    CHECK(winding_around(c, Complex(0.0, 0.0)).winding == p);
    CHECK(oracle::ray_crossing_winding(c.values(), Complex(0.0, 0.0)) == p);
  }
}

TEST_CASE("winding guard near the curve") {
  const auto c = power_curve(1, 64);
  CHECK_THROWS_AS(winding_around(c, Complex(1.0, 0.0)), NearZeroError);
  CHECK_THROWS_AS(winding_around(c, Complex(0.999, 0.0)), NearZeroError);
}

TEST_CASE("winding is invariant under reparametrisation by rotation of samples") {
  const auto ps = pair_structure(parse_word("abAB"));
  auto zeta = zeta_curve(ps, 512);
  const auto before = winding_around(zeta, Complex(0.2, 0.1)).winding;
  std::rotate(zeta.samples.begin(), zeta.samples.begin() + 77, zeta.samples.end());
  CHECK(winding_around(zeta, Complex(0.2, 0.1)).winding == before);
}

TEST_CASE("random single-vertex corpus: numeric and combinatorial windings agree") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const auto w = corpus::random_single_vertex_word(1 + i % 6, rng);
    const auto ps = pair_structure(w);
    const auto zeta = zeta_curve(ps, 256);
    CHECK(numeric_circle_windings(zeta, earring(ps.N)) == circle_windings(ps).per_circle);
    CHECK(winding_around(zeta, Complex(0.0, 0.0)).winding == 2 * ps.k);
  }
}

TEST_CASE("arc parametrisation of the standard polygons") {
  CHECK(render_compact(arc_parametrization(ArcFamily::Orientable, 1).word) == "abAB");
  CHECK(render_compact(arc_parametrization(ArcFamily::NonOrientable, 1).word) == "aa");
  const auto g2 = arc_parametrization(ArcFamily::Orientable, 2);
  CHECK(oracle::vertex_count(render_compact(g2.word)) == 1);
  const auto cls = classify(g2.word);
  REQUIRE(std::holds_alternative<Orientable>(cls.kind));
  CHECK(std::get<Orientable>(cls.kind).genus == 2);
  for (int n = 1; n <= 4; ++n) {
    const auto layout = arc_parametrization(ArcFamily::NonOrientable, n);
    CHECK(quantum_invariant(layout.word) == QuantumInvariant{n, n});
    CHECK(layout.arcs.size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("curve CSV export") {
  const auto zeta = zeta_curve(pair_structure(parse_word("aa")), 16);
  std::ostringstream os;
  write_curve_csv(os, zeta);
  const std::string text = os.str();
  CHECK(text.rfind("t,re,im,circle\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 32);
}
