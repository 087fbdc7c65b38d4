#pragma once

// Index map, K-groups and K-group generators of closed quantum surfaces,
// obtained from the six-term sequence of the extension by the compacts:
// K0 = Z/Im(ind) + Z[1] and K1 = Ker(ind).

#include <string>
#include <vector>

#include <json.hpp>

#include "qsurf/operators.hpp"
#include "qsurf/smith.hpp"
#include "qsurf/word.hpp"

namespace qsurf {

/// ind[u_j] for the K1 generators u_j of the wedge of circles.
struct IndexMap {
  std::vector<long long> vector;

  IntMatrix as_matrix() const;
  long long apply(const std::vector<long long>& coefficients) const;
};

/// Entry 2 for every same-orientation pair, 0 otherwise, in letter order.
/// Throws UnsupportedWordError unless the word has a single vertex class.
IndexMap index_map(const PairStructure& ps);

/// (2,...,2,0,...,0) with k twos.
IndexMap normal_form_index_map(int N, int k);

struct K0Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  bool has_torsion_relation = false;
};

struct K1Generator {
  std::string label;
  std::vector<BlockSpec> blocks;
  std::vector<long long> symbol_class;  // coefficients on [v_1], ..., [v_N]
};

struct KGroups {
  AbelianGroup k0;
  AbelianGroup k1;
  std::vector<std::string> k0_relations;
  std::vector<K1Generator> k1_generators;
};

inline constexpr const char* kBottShiftRelation = "[1]-[P_Bott]=[1-SS*]";

/// K-groups of an arbitrary index map through the integer Smith reduction.
std::pair<AbelianGroup, AbelianGroup> kgroups_from_index(const IndexMap& ind);

/// Throws UnsupportedWordError for unsupported classes.
KGroups kgroups(const SurfaceClass& cls);

K0Presentation k0_generator_presentation(const SurfaceClass& cls);
std::vector<K1Generator> k1_generator_presentation(const SurfaceClass& cls);

nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const KGroups& kg);

}  // namespace qsurf
