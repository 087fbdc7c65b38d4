#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsurf/corpus.hpp"
#include "qsurf/errors.hpp"
#include "qsurf/ktheory.hpp"

using namespace qsurf;

namespace {

void check_groups(const KGroups& kg, const oracle::Groups& expected) {
  CHECK(kg.k0.free_rank == expected.k0_free);
  CHECK(kg.k0.torsion == expected.k0_torsion);
  CHECK(kg.k1.free_rank == expected.k1_free);
  CHECK(kg.k1.torsion.empty());
}

}  // namespace

TEST_CASE("index maps") {
  CHECK(index_map(pair_structure(parse_word("abaB"))).vector == std::vector<long long>{2, 0});
  CHECK(index_map(pair_structure(parse_word("abAB"))).vector == std::vector<long long>{0, 0});
  CHECK(index_map(pair_structure(parse_word("abaBcc"))).vector ==
        std::vector<long long>{2, 0, 2});
  CHECK(normal_form_index_map(4, 2).vector == std::vector<long long>{2, 2, 0, 0});
  CHECK(normal_form_index_map(3, 1).apply({1, 5, 7}) == 2);
  CHECK_THROWS_AS(index_map(pair_structure(parse_word("abab"))), UnsupportedWordError);
  CHECK_THROWS_AS(normal_form_index_map(2, 3), InvalidInvariantError);
}

TEST_CASE("K-groups of the standard families") {
  for (int g = 1; g <= 4; ++g) check_groups(kgroups(classify(corpus::orientable_family(g))),
                                            oracle::torus_groups(g));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      check_groups(kgroups(classify(corpus::nonorientable_family(n, k))),
                   oracle::projective_groups(n));
  check_groups(kgroups(classify(corpus::sphere_word())), oracle::sphere_groups());
  CHECK_THROWS_AS(kgroups(classify(parse_word("abab"))), UnsupportedWordError);
}

TEST_CASE("K-groups of random words depend only on (N,k)") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto w = corpus::random_single_vertex_word(1 + i % 6, rng);
    const auto cls = classify(w);
    const auto kg = kgroups(cls);
    const auto from_word = kgroups_from_index(index_map(pair_structure(w)));
    CHECK(kg.k0 == from_word.first);
    CHECK(kg.k1 == from_word.second);
    const auto expected = cls.k() == 0 ? oracle::torus_groups(cls.N / 2)
                                       : oracle::projective_groups(cls.N);
    check_groups(kg, expected);
  }
}

TEST_CASE("torsion relation appears exactly when k >= 1") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      if (k == 0 && n % 2 == 1) continue;
      const auto w = k == 0 ? corpus::orientable_family(n / 2) : corpus::nonorientable_family(n, k);
      const auto p = k0_generator_presentation(classify(w));
      CHECK(p.has_torsion_relation == (k >= 1));
      const bool listed =
          std::find(p.relations.begin(), p.relations.end(), "2([P_Bott]-[1])=0") != p.relations.end();
      CHECK(listed == (k >= 1));
      CHECK(p.relations.back() == kBottShiftRelation);
    }
}

TEST_CASE("K1 generators form a basis of the kernel of the index map") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      if (k == 0 && n % 2 == 1) continue;
      const auto w = k == 0 ? corpus::orientable_family(n / 2) : corpus::nonorientable_family(n, k);
      const auto cls = classify(w);
      const auto gens = k1_generator_presentation(cls);
      const auto ind = normal_form_index_map(n, k);
      REQUIRE(static_cast<int>(gens.size()) == kgroups(cls).k1.free_rank);
      if (gens.empty()) continue;
      IntMatrix basis(n, gens.size());
      for (std::size_t c = 0; c < gens.size(); ++c) {
        CHECK(ind.apply(gens[c].symbol_class) == 0);
        for (int r = 0; r < n; ++r) basis(r, c) = gens[c].symbol_class[r];
      }
      // a basis of a saturated sublattice has trivial cokernel torsion
      CHECK(cokernel(basis).torsion.empty());
      CHECK(kernel(basis).trivial());
    }
}

TEST_CASE("JSON shape") {
  const auto j = to_json(kgroups(classify(parse_word("abaB"))));
  CHECK(j["k0"]["free_rank"] == 1);
  CHECK(j["k0"]["torsion"] == nlohmann::json::array({2}));
  CHECK(j["k1"]["free_rank"] == 1);
  CHECK(j["k1_generators"][0]["label"] == "V_1");
  CHECK(j["k1_generators"][0]["symbol_class"] == nlohmann::json::array({0, 1}));
}
