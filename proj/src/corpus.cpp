#include "qsurf/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "qsurf/curves.hpp"
#include "qsurf/errors.hpp"

namespace qsurf::corpus {

namespace {

void append_cross_cap(std::vector<OrientedLetter>& letters, int& next_id) {
  letters.push_back({next_id, +1});
  letters.push_back({next_id, +1});
  ++next_id;
}

void append_handle(std::vector<OrientedLetter>& letters, int& next_id) {
  const int c = next_id++;
  const int d = next_id++;
  letters.insert(letters.end(), {{c, +1}, {d, +1}, {c, -1}, {d, -1}});
}

}  // namespace

BoundaryWord random_paired_word(int N, std::mt19937_64& rng) {
  if (N < 1) throw InvalidInvariantError("N must be >= 1");
  std::vector<int> positions(2 * N);
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);

  std::bernoulli_distribution coin(0.5);
  std::vector<OrientedLetter> letters(2 * N);
  for (int id = 0; id < N; ++id) {
    letters[positions[2 * id]] = {id, coin(rng) ? +1 : -1};
    letters[positions[2 * id + 1]] = {id, coin(rng) ? +1 : -1};
  }
  return BoundaryWord::from_letters(std::move(letters));
}

BoundaryWord random_single_vertex_word(int N, std::mt19937_64& rng) {
  for (;;) {
    BoundaryWord w = random_paired_word(N, rng);
    const SurfaceClass cls = classify(w);
    if (cls.vertex_count == 1) return w;
  }
}

BoundaryWord orientable_family(int g) {
  return arc_parametrization(ArcFamily::Orientable, g).word;
}

BoundaryWord nonorientable_family(int n, int k) {
  if (k < 1 || k > n) throw InvalidInvariantError("need 1 <= k <= n");
  if (k == n) return arc_parametrization(ArcFamily::NonOrientable, n).word;

  std::vector<OrientedLetter> letters;
  int next_id = 0;
  int cross_caps = k;
  int handles = (n - k) / 2;
  if ((n - k) % 2 != 0) {
    // Klein-bottle handle a b a b^-1: one same-orientation and one opposite pair.
    letters.insert(letters.end(), {{0, +1}, {1, +1}, {0, +1}, {1, -1}});
    next_id = 2;
    cross_caps = k - 1;
    handles = (n - k - 1) / 2;
  }
  for (int i = 0; i < cross_caps; ++i) append_cross_cap(letters, next_id);
  for (int i = 0; i < handles; ++i) append_handle(letters, next_id);
  return BoundaryWord::from_letters(std::move(letters));
}

BoundaryWord sphere_word() { return BoundaryWord::from_letters({{0, +1}, {0, -1}}); }

}  // namespace qsurf::corpus
