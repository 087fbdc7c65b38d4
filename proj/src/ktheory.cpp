#include "qsurf/ktheory.hpp"

#include <numeric>

#include "qsurf/errors.hpp"

namespace qsurf {

namespace {

void require_supported(const SurfaceClass& cls) {
  if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    throw UnsupportedWordError("unsupported word: " + u->reason);
  }
}

}  // namespace

IntMatrix IndexMap::as_matrix() const {
  IntMatrix m(1, static_cast<Eigen::Index>(vector.size()));
  for (std::size_t j = 0; j < vector.size(); ++j) m(0, static_cast<Eigen::Index>(j)) = vector[j];
  return m;
}

long long IndexMap::apply(const std::vector<long long>& coefficients) const {
  if (coefficients.size() != vector.size()) throw ShapeError("coefficient vector has wrong size");
  return std::inner_product(vector.begin(), vector.end(), coefficients.begin(), 0LL);
}

IndexMap index_map(const PairStructure& ps) {
  if (vertex_classes(ps).count() != 1) {
    throw UnsupportedWordError("index map needs a single-vertex word");
  }
  IndexMap ind;
  for (bool same : ps.same_orientation) ind.vector.push_back(same ? 2 : 0);
  return ind;
}

IndexMap normal_form_index_map(int N, int k) {
  if (k < 0 || k > N) throw InvalidInvariantError("k outside 0..N");
  IndexMap ind;
  ind.vector.assign(N, 0);
  std::fill_n(ind.vector.begin(), k, 2);
  return ind;
}

std::pair<AbelianGroup, AbelianGroup> kgroups_from_index(const IndexMap& ind) {
  const IntMatrix m = ind.as_matrix();
  const AbelianGroup unit{1, {}};
  return {direct_sum(cokernel(m), unit), kernel(m)};
}

K0Presentation k0_generator_presentation(const SurfaceClass& cls) {
  require_supported(cls);
  K0Presentation p;
  p.generators = {"[1]", "[P_Bott]"};
  if (!std::holds_alternative<Sphere>(cls.kind)) {
    const auto [k0, k1] = kgroups_from_index(normal_form_index_map(cls.N, cls.k()));
    for (long long t : k0.torsion) {
      p.relations.push_back(std::to_string(t) + "([P_Bott]-[1])=0");
      p.has_torsion_relation = true;
    }
  }
  p.relations.push_back(kBottShiftRelation);
  return p;
}

std::vector<K1Generator> k1_generator_presentation(const SurfaceClass& cls) {
  require_supported(cls);
  std::vector<K1Generator> out;
  if (std::holds_alternative<Sphere>(cls.kind)) return out;

  const int N = cls.N;
  const int k = cls.k();
  if (k == 0) {
    for (int j = 1; j <= N; ++j) {
      K1Generator g;
      g.label = "U_" + std::to_string(j);
      g.blocks = k1_generator_blocks(N, 0, j);
      g.symbol_class.assign(N, 0);
      g.symbol_class[j - 1] = 1;
      out.push_back(std::move(g));
    }
    return out;
  }

  for (int i = 1; i <= N - 1; ++i) {
    K1Generator g;
    g.label = "V_" + std::to_string(i);
    g.blocks = k1_generator_blocks(N, k, i);
    g.symbol_class.assign(N, 0);
    g.symbol_class[i] = 1;
    // v_{1,i+1} conjugates the first circle only while circle i+1 is a
    // same-orientation circle.
    if (i < k) g.symbol_class[0] = -1;
    out.push_back(std::move(g));
  }
  return out;
}

KGroups kgroups(const SurfaceClass& cls) {
  require_supported(cls);
  KGroups kg;
  if (std::holds_alternative<Sphere>(cls.kind)) {
    // The boundary quotient is an interval, so only the upper row survives.
    kg.k0 = {2, {}};
    kg.k1 = {0, {}};
  } else {
    std::tie(kg.k0, kg.k1) = kgroups_from_index(normal_form_index_map(cls.N, cls.k()));
  }
  kg.k0_relations = k0_generator_presentation(cls).relations;
  kg.k1_generators = k1_generator_presentation(cls);
  return kg;
}

nlohmann::json to_json(const AbelianGroup& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

nlohmann::json to_json(const KGroups& kg) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : kg.k1_generators) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : g.blocks) blocks.push_back(describe(b));
    gens.push_back({{"label", g.label}, {"blocks", blocks}, {"symbol_class", g.symbol_class}});
  }
  return {{"k0", to_json(kg.k0)},
          {"k1", to_json(kg.k1)},
          {"k0_relations", kg.k0_relations},
          {"k1_generators", gens}};
}

}  // namespace qsurf
