#include "qsurf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qsurf/corpus.hpp"
#include "qsurf/curves.hpp"
#include "qsurf/errors.hpp"

namespace qsurf {

std::pair<AbelianGroup, AbelianGroup> classical_kgroups(const SurfaceClass& cls) {
  if (const auto* o = std::get_if<Orientable>(&cls.kind)) {
    return {{2, {}}, {2 * o->genus, {}}};
  }
  if (const auto* p = std::get_if<NonOrientable>(&cls.kind)) {
    return {{1, {2}}, {p->euler_genus - 1, {}}};
  }
  if (std::holds_alternative<Sphere>(cls.kind)) return {{2, {}}, {0, {}}};
  throw UnsupportedWordError("no classical surface for an unsupported word");
}

namespace {

struct Context {
  const VerifyOptions& options;
  std::mt19937_64 rng;
  std::vector<BoundaryWord> single_vertex;  // random, N in 1..6
  std::vector<BoundaryWord> paired;         // random, any vertex count
  std::vector<BoundaryWord> families;       // T^g, P^n_k, sphere
};

using Check = std::function<std::string(Context&)>;  // empty string = pass

std::string fail(const std::string& what, const BoundaryWord& w) {
  return what + " for " + render_compact(w);
}

Matrix random_contraction(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(gauss(rng), gauss(rng));
  std::uniform_real_distribution<double> scale(0.1, 1.0);
  return a * (scale(rng) / spectral_norm(a));
}

// word-model ---------------------------------------------------------------

std::string check_round_trip(Context& ctx) {
  for (const auto& w : ctx.paired) {
    if (parse_word(render(w)) != w) return fail("long-form round trip changed the word", w);
    if (parse_word(render_compact(w)) != w) return fail("compact round trip changed the word", w);
  }
  return {};
}

std::string check_invariant_symmetries(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const QuantumInvariant q = quantum_invariant(w);
    std::vector<int> perm(w.alphabet_size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), ctx.rng);
    const std::size_t shift = ctx.rng() % w.size();
    if (quantum_invariant(relabel(w, perm)) != q) return fail("relabeling changed (N,k)", w);
    if (quantum_invariant(rotate(w, shift)) != q) return fail("rotation changed (N,k)", w);
    if (quantum_invariant(flip_orientation(w)) != q) return fail("flip changed (N,k)", w);
    if (quantum_invariant(reverse(w)) != q) return fail("reversal changed (N,k)", w);
  }
  return {};
}

std::string check_euler_characteristic(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const SurfaceClass cls = classify(w);
    if (cls.euler_characteristic != 2 - cls.N) return fail("chi != 2 - N", w);
    if (cls.k() == 0 && cls.N % 2 != 0) return fail("orientable word with odd N", w);
  }
  return {};
}

std::string check_same_orientation_not_orientable(Context& ctx) {
  for (const auto& w : ctx.paired) {
    if (pair_structure(w).k > 0 && std::holds_alternative<Orientable>(classify(w).kind)) {
      return fail("word with a same-orientation pair classified orientable", w);
    }
  }
  return {};
}

std::string check_iso_equivalence(Context& ctx) {
  const std::size_t n = std::min<std::size_t>(ctx.single_vertex.size(), 24);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rel[a][b] = is_isomorphic(ctx.single_vertex[a], ctx.single_vertex[b], IsoMode::Quantum);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a][a]) return "not reflexive";
    for (std::size_t b = 0; b < n; ++b) {
      if (rel[a][b] != rel[b][a]) return "not symmetric";
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[a][b] && rel[b][c] && !rel[a][c]) return "not transitive";
      }
    }
  }
  return {};
}

// symbol-curves --------------------------------------------------------------

std::string check_zero_winding_oracle(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const WindingResult r = winding_around(zeta_curve(ps, 1024), {0.0, 0.0});
    if (r.winding != circle_windings(ps).around_zero || r.winding != 2 * ps.k) {
      return fail("numeric winding around 0 disagrees with 2k", w);
    }
  }
  return {};
}

std::string check_per_circle_oracle(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const auto numeric = numeric_circle_windings(zeta_curve(ps, 1024), earring(ps.N));
    if (numeric != circle_windings(ps).per_circle) return fail("per-circle windings differ", w);
  }
  return {};
}

std::string check_on_earring(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const EarringGeometry g = earring(ps.N);
    for (const auto& s : zeta_curve(ps, 256).samples) {
      if (g.distance(s.value) > 1e-12) return fail("sample off the earring", w);
    }
  }
  return {};
}

std::string check_winding_additive(Context&) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      SymbolCurve product = power_curve(a, 2048);
      const SymbolCurve second = power_curve(b, 2048);
      for (std::size_t i = 0; i < product.samples.size(); ++i) {
        product.samples[i].value *= second.samples[i].value;
      }
      if (winding_around(product, {0.0, 0.0}).winding != a + b) {
        return "wind(u^" + std::to_string(a) + " u^" + std::to_string(b) + ") != a+b";
      }
    }
  }
  return {};
}

std::string check_sample_doubling(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const auto g = earring(ps.N);
    const auto coarse = zeta_curve(ps, 1024);
    const auto fine = zeta_curve(ps, 2048);
    if (winding_around(coarse, {0.0, 0.0}).winding != winding_around(fine, {0.0, 0.0}).winding ||
        numeric_circle_windings(coarse, g) != numeric_circle_windings(fine, g)) {
      return fail("doubling samples changed a winding", w);
    }
  }
  return {};
}

std::string check_earring_geometry(Context&) {
  const auto g = earring(32);
  for (int j = 1; j <= g.N(); ++j) {
    const Circle& c = g.circle(j);
    if (std::abs(std::abs(Complex(1.0, 0.0) - c.center) - c.radius) > 1e-15) {
      return "circle " + std::to_string(j) + " misses the base point";
    }
    if (!(std::abs(c.center) < c.radius)) return "origin outside circle " + std::to_string(j);
  }
  return {};
}

// operator-models ------------------------------------------------------------

std::string check_bott_projection(Context& ctx) {
  const double tol = std::min(ctx.options.tol, 1e-10);
  std::vector<Matrix> cases = {bergman_tz(ctx.options.dim)};
  for (int i = 0; i < 4; ++i) {
    cases.push_back(random_contraction(std::max(2, std::min(ctx.options.dim, 48) - 8 * i), ctx.rng));
  }
  for (const auto& t : cases) {
    const Matrix p = bott_projection(t);
    const double idem = spectral_norm(p * p - p);
    const double herm = spectral_norm(p - p.adjoint());
    if (idem > tol || herm > 1e-12) {
      std::ostringstream out;
      out << "d=" << t.rows() << " ||P^2-P||=" << idem << " ||P-P*||=" << herm;
      return out.str();
    }
    const Matrix v = bott_isometry(t);
    const double iso = spectral_norm(v.adjoint() * v - Matrix::Identity(t.cols(), t.cols()));
    if (iso > 1e-12) return "isometry defect " + std::to_string(iso);
  }
  return {};
}

std::string check_index_law(Context&) {
  for (int k = -5; k <= 5; ++k) {
    if (fredholm_index(power_curve(k, 4096)) != -k) {
      return "ind(u^" + std::to_string(k) + ") != " + std::to_string(-k);
    }
  }
  return {};
}

std::string check_same_orientation_blocks(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const auto numeric = numeric_circle_windings(zeta_curve(ps, 1024), earring(ps.N));
    for (int j = 0; j < ps.N; ++j) {
      if (!ps.same_orientation[j]) continue;
      if (numeric[j] != 2) return fail("same-orientation circle not wound twice", w);
      if (block_fredholm_index(unilateral_block(j + 1)) != -2) {
        return "unilateral block " + std::to_string(j + 1) + " has index != -2";
      }
    }
  }
  return {};
}

std::string check_circulant_blocks(Context& ctx) {
  const double tol = ctx.options.tol;
  for (auto [N, k] : {std::pair{2, 0}, {3, 1}, {4, 2}}) {
    const TruncatedOperator op = build_generator(N, k, ctx.options.dim);
    for (std::size_t b = static_cast<std::size_t>(k); b < op.block_count(); ++b) {
      const Matrix u = bilateral_shift_circulant(ctx.options.dim);
      const double defect =
          (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
      if (defect > 1e-12) return "circulant not unitary";
    }
    const SpectrumReport report = spectrum_report(op, earring(N));
    if (report.max_deviation > tol) {
      return "(" + std::to_string(N) + "," + std::to_string(k) + ") eigenvalue deviation " +
             std::to_string(report.max_deviation);
    }
    if (report.symbol_max_deviation > 1e-14) return "symbol image off its circle";
  }
  return {};
}

std::string check_bergman_weights(Context& ctx) {
  const int count = 500 + std::max(ctx.options.dim, 64);
  std::vector<double> weights(count);
  for (int n = 0; n < count; ++n) weights[n] = bergman_weight(n);
  if (ctx.options.fault == "bergman-weight") weights[520] = 0.99;

  for (int n = 0; n + 1 < count; ++n) {
    if (!(weights[n] < weights[n + 1])) return "weights not increasing at n=" + std::to_string(n);
    if (!(weights[n] < 1.0)) return "weight >= 1 at n=" + std::to_string(n);
  }
  for (int n = 500; n < count; ++n) {
    if (!(1.0 - weights[n] < 1e-3)) return "1 - w(n) >= 1e-3 at n=" + std::to_string(n);
  }
  return {};
}

std::string check_k1_blocks(Context&) {
  for (int N = 1; N <= 5; ++N) {
    for (int k = 0; k <= N; ++k) {
      const int count = k == 0 ? N : N - 1;
      std::set<std::vector<std::string>> distinct;
      for (int i = 1; i <= count; ++i) {
        const auto blocks = k1_generator_blocks(N, k, i);
        std::vector<std::string> labels;
        int non_identity = 0;
        for (const auto& b : blocks) {
          labels.push_back(describe(b));
          non_identity += b.kind != BlockKind::Identity;
        }
        const int expected = (k >= 1 && i < k) ? 2 : 1;
        if (non_identity != expected) return "wrong non-identity block count";
        distinct.insert(labels);
      }
      if (static_cast<int>(distinct.size()) != count) return "generator block lists not distinct";
    }
  }
  return {};
}

// k-theory -------------------------------------------------------------------

std::string check_family_table(Context& ctx) {
  for (const auto& w : ctx.families) {
    const SurfaceClass cls = classify(w);
    const KGroups kg = kgroups(cls);
    const auto [k0, k1] = classical_kgroups(cls);
    if (kg.k0 != k0 || kg.k1 != k1) return fail("K-groups differ from the table", w);
  }
  return {};
}

std::string check_duality(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const IndexMap ind = index_map(ps);
    const auto [k0, k1] = kgroups_from_index(ind);
    const int rank = smith_normal_form(ind.as_matrix()).rank;
    if (k1.free_rank + rank != ps.N) return fail("rank(K1) + rank(ind) != N", w);
    long long g = 0;
    for (long long x : ind.vector) g = std::gcd(g, x);
    const std::vector<long long> expected = g >= 2 ? std::vector<long long>{g} : std::vector<long long>{};
    if (k0.torsion != expected) return fail("K0 torsion != gcd(ind)", w);
  }
  return {};
}

std::string check_symbol_classes(Context& ctx) {
  for (const auto& w : ctx.families) {
    const SurfaceClass cls = classify(w);
    if (std::holds_alternative<Sphere>(cls.kind)) continue;
    const IndexMap ind = normal_form_index_map(cls.N, cls.k());
    for (const auto& g : k1_generator_presentation(cls)) {
      if (ind.apply(g.symbol_class) != 0) return fail(g.label + " symbol class not in Ker(ind)", w);
    }
  }
  return {};
}

std::string check_index_against_windings(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const PairStructure ps = pair_structure(w);
    const SymbolCurve zeta = zeta_curve(ps, 1024);
    const IndexMap ind = index_map(ps);
    for (int j = 1; j <= ps.N; ++j) {
      const int wind = winding_around(pullback_generator(zeta, j), {0.0, 0.0}).winding;
      if (wind != ind.vector[j - 1]) return fail("index map != pullback winding", w);
    }
  }
  return {};
}

std::string check_iso_implies_kgroups(Context& ctx) {
  const std::size_t n = std::min<std::size_t>(ctx.single_vertex.size(), 24);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& wa = ctx.single_vertex[a];
      const auto& wb = ctx.single_vertex[b];
      if (!is_isomorphic(wa, wb, IsoMode::Quantum)) continue;
      const KGroups ka = kgroups(classify(wa));
      const KGroups kb = kgroups(classify(wb));
      if (ka.k0 != kb.k0 || ka.k1 != kb.k1) return fail("isomorphic words with different K", wa);
    }
  }
  return {};
}

std::string check_classical_agreement(Context& ctx) {
  for (const auto& w : ctx.single_vertex) {
    const SurfaceClass cls = classify(w);
    const KGroups kg = kgroups(cls);
    const auto [k0, k1] = classical_kgroups(cls);
    if (kg.k0 != k0 || kg.k1 != k1) return fail("quantum and classical K-groups differ", w);
  }
  return {};
}

std::string check_smith_certificate(Context& ctx) {
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(dim(ctx.rng), dim(ctx.rng));
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = entry(ctx.rng);
    const SmithForm s = smith_normal_form(a);
    if (s.left * a * s.right != s.diagonal) return "U A V != D";
    const auto det = [](const IntMatrix& m) {
      return std::llround(m.cast<double>().determinant());
    };
    if (std::llabs(det(s.left)) != 1 || std::llabs(det(s.right)) != 1) return "not unimodular";
    const auto f = s.invariant_factors();
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (f[i] % f[i - 1] != 0) return "invariant factors do not divide";
    }
  }
  return {};
}

struct NamedCheck {
  const char* module;
  const char* name;
  Check run;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.dim < 4) throw InvalidInvariantError("verify needs dim >= 4");

  Context ctx{options, std::mt19937_64(options.seed), {}, {}, {}};
  for (int i = 0; i < 60; ++i) {
    ctx.single_vertex.push_back(corpus::random_single_vertex_word(1 + i % 6, ctx.rng));
    ctx.paired.push_back(corpus::random_paired_word(1 + i % 7, ctx.rng));
  }
  for (int g = 1; g <= 3; ++g) ctx.families.push_back(corpus::orientable_family(g));
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) ctx.families.push_back(corpus::nonorientable_family(n, k));
  }
  ctx.families.push_back(corpus::sphere_word());

  const std::vector<NamedCheck> checks = {
      {"word-model", "parse/render round trip", check_round_trip},
      {"word-model", "(N,k) invariant under relabel/rotate/flip/reverse", check_invariant_symmetries},
      {"word-model", "single vertex => chi = 2 - N, k=0 => N even", check_euler_characteristic},
      {"word-model", "same-orientation pair => not orientable", check_same_orientation_not_orientable},
      {"word-model", "quantum isomorphism is an equivalence", check_iso_equivalence},
      {"symbol-curves", "numeric winding around 0 = 2k", check_zero_winding_oracle},
      {"symbol-curves", "numeric per-circle windings = |s1+s2|", check_per_circle_oracle},
      {"symbol-curves", "zeta samples lie on X_N", check_on_earring},
      {"symbol-curves", "winding additive under products", check_winding_additive},
      {"symbol-curves", "doubling samples keeps windings", check_sample_doubling},
      {"symbol-curves", "earring circles share base point 1", check_earring_geometry},
      {"operator-models", "Bott projection P^2=P=P*, V*V=I", check_bott_projection},
      {"operator-models", "ind(u^k) = -k", check_index_law},
      {"operator-models", "same-orientation circles wind twice, Ind(S^2) = -2", check_same_orientation_blocks},
      {"operator-models", "circulant blocks unitary, spectra on X_N", check_circulant_blocks},
      {"operator-models", "Bergman weights increase to 1", check_bergman_weights},
      {"operator-models", "K1 generator block lists", check_k1_blocks},
      {"k-theory", "K-group table for family words", check_family_table},
      {"k-theory", "ker/coker duality", check_duality},
      {"k-theory", "K1 symbol classes lie in Ker(ind)", check_symbol_classes},
      {"k-theory", "index map = pullback windings", check_index_against_windings},
      {"k-theory", "isomorphic words share K-groups", check_iso_implies_kgroups},
      {"k-theory", "quantum K-groups = classical K-groups", check_classical_agreement},
      {"k-theory", "Smith form certificate", check_smith_certificate},
  };

  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    CheckResult r{c.module, c.name, false, {}};
    try {
      r.detail = c.run(ctx);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace qsurf
