#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qsurf/corpus.hpp"
#include "qsurf/errors.hpp"
#include "qsurf/word.hpp"

using namespace qsurf;

namespace {

std::vector<OrientedLetter> letters_of(const BoundaryWord& w) {
  return {w.letters().begin(), w.letters().end()};
}

}  // namespace

TEST_CASE("parse_word compact form") {
  const auto w = parse_word("abAB");
  const std::vector<OrientedLetter> expected = {{0, +1}, {1, +1}, {0, -1}, {1, -1}};
  CHECK(letters_of(w) == expected);
  CHECK(w.alphabet_size() == 2);
  CHECK(w.source_text() == "abAB");
}

TEST_CASE("parse_word long form matches compact form") {
  CHECK(parse_word("a1 b1 a1^-1 b1^-1") == parse_word("abAB"));
  CHECK(parse_word("x, y,x^-1 ,y^-1") == parse_word("abAB"));
  CHECK(parse_word("  abAB \n") == parse_word("abAB"));
  // ids follow first appearance, not the names
  CHECK(parse_word("z z y y") == parse_word("a1 a1 b1 b1"));
}

TEST_CASE("parse_word errors carry byte offsets") {
  SUBCASE("invalid character") {
    try {
      parse_word("a#b");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("bad exponent") {
    try {
      parse_word("a1 b1^2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
    }
  }
  SUBCASE("token starting with a digit") {
    try {
      parse_word("a1 1b");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 3);
    }
  }
  SUBCASE("empty") { CHECK_THROWS_AS(parse_word("   "), ParseError); }
  SUBCASE("mixed syntax") {
    CHECK_THROWS_AS(parse_word("abAB a1"), MixedSyntaxError);
    CHECK_THROWS_AS(parse_word("a1 A"), MixedSyntaxError);
  }
}

TEST_CASE("render round trips") {
  const auto w = parse_word("abaBcc");
  CHECK(render(w) == "x1 x2 x1 x2^-1 x3 x3");
  CHECK(render_compact(w) == "abaBcc");
  CHECK(parse_word(render(w)) == w);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto r = corpus::random_paired_word(1 + i % 12, rng);
    CHECK(parse_word(render(r)) == r);
  }
}

TEST_CASE("pair_structure") {
  const auto torus = pair_structure(parse_word("abAB"));
  CHECK(torus.N == 2);
  CHECK(torus.k == 0);
  CHECK(torus.occurrences[0][0].position == 0);
  CHECK(torus.occurrences[0][1].position == 2);

  const auto rp2 = pair_structure(parse_word("aa"));
  CHECK(rp2.N == 1);
  CHECK(rp2.k == 1);
  CHECK(rp2.same_orientation[0]);

  CHECK_THROWS_AS(pair_structure(parse_word("aba")), NotPairedError);
  CHECK_THROWS_AS(pair_structure(parse_word("a")), NotPairedError);
}

TEST_CASE("vertex_classes on hand-worked words") {
  // abAB: a at 0,2 opposite merges P3~P2, P0~P1; b at 1,3 merges P0~P3, P1~P2.
  const auto torus = vertex_classes(parse_word("abAB"));
  REQUIRE(torus.count() == 1);
  CHECK(torus.classes[0] == std::vector<int>{0, 1, 2, 3});

  // aA: P1~P1 and P0~P0, nothing merges.
  const auto sphere = vertex_classes(parse_word("aA"));
  CHECK(sphere.count() == 2);

  // abab: a at 0,2 equal merges P3~P1, P0~P2; b at 1,3 merges P0~P2, P1~P3.
  const auto abab = vertex_classes(parse_word("abab"));
  REQUIRE(abab.count() == 2);
  CHECK(abab.classes[0] == std::vector<int>{0, 2});
  CHECK(abab.classes[1] == std::vector<int>{1, 3});

  // aabB: the adjacent bB folds P2 onto itself.
  CHECK(vertex_classes(parse_word("aabB")).count() == 2);
}

TEST_CASE("classify examples") {
  const auto torus = classify(parse_word("abAB"));
  REQUIRE(std::holds_alternative<Orientable>(torus.kind));
  CHECK(std::get<Orientable>(torus.kind).genus == 1);
  CHECK(torus.euler_characteristic == 0);
  CHECK(torus.describe() == "orientable genus 1, invariant (2,0), χ=0");

  const auto klein = classify(parse_word("aabb"));
  REQUIRE(std::holds_alternative<NonOrientable>(klein.kind));
  CHECK(std::get<NonOrientable>(klein.kind).euler_genus == 2);
  CHECK(std::get<NonOrientable>(klein.kind).k == 2);
  CHECK(klein.euler_characteristic == 0);

  CHECK(std::holds_alternative<Sphere>(classify(parse_word("aA")).kind));
  CHECK(std::holds_alternative<Sphere>(classify(parse_word("Aa")).kind));
  CHECK(classify(parse_word("aA")).euler_characteristic == 2);

  const auto abab = classify(parse_word("abab"));
  REQUIRE(std::holds_alternative<Unsupported>(abab.kind));
  CHECK(std::get<Unsupported>(abab.kind).vertex_count == 2);
  CHECK(std::get<Unsupported>(abab.kind).cycle_rank == 1);
  CHECK(std::get<Unsupported>(abab.kind).reason.find("2 vertex classes") != std::string::npos);

  CHECK(classify(parse_word("abcABC")).vertex_count == 2);
  CHECK(classify(parse_word("abABcdCD")).kind.index() == 0);

  CHECK_THROWS_AS(classify(parse_word("aba")), NotPairedError);
}

TEST_CASE("quantum_invariant") {
  CHECK(quantum_invariant(parse_word("abAB")) == QuantumInvariant{2, 0});
  CHECK(quantum_invariant(parse_word("aabb")) == QuantumInvariant{2, 2});
  CHECK(quantum_invariant(parse_word("abaB")) == QuantumInvariant{2, 1});
  CHECK(quantum_invariant(parse_word("aA")) == QuantumInvariant{1, -1});
  CHECK_THROWS_AS(quantum_invariant(parse_word("abab")), UnsupportedWordError);
  CHECK_THROWS_AS(quantum_invariant(parse_word("aabB")), UnsupportedWordError);
}

TEST_CASE("is_isomorphic") {
  const auto w = [](const char* s) { return parse_word(s); };
  CHECK(is_isomorphic(w("abAB"), w("abAB"), IsoMode::Quantum));
  CHECK(is_isomorphic(w("abaB"), w("abAb"), IsoMode::Quantum));
  // Klein bottle words with k=2 and k=1: classically equal, quantum distinct.
  CHECK(is_isomorphic(w("aabb"), w("abaB"), IsoMode::Classical));
  CHECK_FALSE(is_isomorphic(w("aabb"), w("abaB"), IsoMode::Quantum));
  // Two different torus arrangements of genus 2.
  CHECK(is_isomorphic(w("abABcdCD"), w("abcdABCD"), IsoMode::Quantum));
  CHECK_FALSE(is_isomorphic(w("aA"), w("aa"), IsoMode::Classical));
  CHECK_THROWS_AS(is_isomorphic(w("aabb"), w("aabB"), IsoMode::Classical), UnsupportedWordError);
}

TEST_CASE("(N,k) is invariant under relabel, rotation, flip and reversal") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const auto w = corpus::random_single_vertex_word(1 + i % 7, rng);
    const auto q = quantum_invariant(w);
    std::vector<int> perm(w.alphabet_size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(quantum_invariant(relabel(w, perm)) == q);
    for (std::size_t s = 0; s < w.size(); ++s) CHECK(quantum_invariant(rotate(w, s)) == q);
    CHECK(quantum_invariant(flip_orientation(w)) == q);
    CHECK(quantum_invariant(reverse(w)) == q);
  }
}

TEST_CASE("single-vertex words satisfy chi = 2 - N and orientable N is even") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto w = corpus::random_paired_word(1 + i % 8, rng);
    const auto cls = classify(w);
    const auto ps = pair_structure(w);
    if (ps.k > 0) CHECK_FALSE(std::holds_alternative<Orientable>(cls.kind));
    if (cls.vertex_count != 1) continue;
    CHECK(cls.euler_characteristic == 2 - cls.N);
    if (ps.k == 0) CHECK(cls.N % 2 == 0);
  }
}

TEST_CASE("family words classify as intended") {
  for (int g = 1; g <= 4; ++g) {
    const auto cls = classify(corpus::orientable_family(g));
    REQUIRE(std::holds_alternative<Orientable>(cls.kind));
    CHECK(std::get<Orientable>(cls.kind).genus == g);
  }
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto w = corpus::nonorientable_family(n, k);
      CAPTURE(render_compact(w));
      const auto cls = classify(w);
      REQUIRE(std::holds_alternative<NonOrientable>(cls.kind));
      CHECK(std::get<NonOrientable>(cls.kind).euler_genus == n);
      CHECK(cls.k() == k);
    }
  }
  CHECK(render_compact(corpus::nonorientable_family(2, 2)) == "abba");
  CHECK(render_compact(corpus::nonorientable_family(3, 1)) == "aabcBC");
}

TEST_CASE("quantum isomorphism is an equivalence relation on a random corpus") {
  std::mt19937_64 rng(5);
  std::vector<BoundaryWord> words;
  for (int i = 0; i < 30; ++i) words.push_back(corpus::random_single_vertex_word(1 + i % 4, rng));
  for (const auto& a : words) {
    CHECK(is_isomorphic(a, a, IsoMode::Quantum));
    for (const auto& b : words) {
      const bool ab = is_isomorphic(a, b, IsoMode::Quantum);
      CHECK(ab == is_isomorphic(b, a, IsoMode::Quantum));
      if (!ab) continue;
      for (const auto& c : words) {
        if (is_isomorphic(b, c, IsoMode::Quantum)) CHECK(is_isomorphic(a, c, IsoMode::Quantum));
      }
    }
  }
}

TEST_CASE("vertex count agrees with a corner-graph search") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const auto w = corpus::random_paired_word(1 + i % 9, rng);
    const auto text = render_compact(w);
    CAPTURE(text);
    CHECK(vertex_classes(w).count() == oracle::vertex_count(text));
    CHECK(pair_structure(w).k == oracle::same_exponent_pairs(text));
  }
}
