#pragma once

// Word generators shared by the verification suite, tests and benchmarks.

#include <cstdint>
#include <random>

#include "qsurf/word.hpp"

namespace qsurf::corpus {

/// Uniformly random pairing of 2N positions with independent random signs.
BoundaryWord random_paired_word(int N, std::mt19937_64& rng);

/// Rejection-samples random_paired_word until the word has one vertex class
/// and is not the sphere pattern.
BoundaryWord random_single_vertex_word(int N, std::mt19937_64& rng);

/// Orientable genus-g representative from the explicit arc layout.
BoundaryWord orientable_family(int g);

/// Single-vertex word with n pairs of which exactly k (1 <= k <= n) are
/// same-orientation pairs.
BoundaryWord nonorientable_family(int n, int k);

BoundaryWord sphere_word();

}  // namespace qsurf::corpus
