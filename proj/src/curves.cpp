#include "qsurf/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "qsurf/errors.hpp"
#include "qsurf/kernels.hpp"

namespace qsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_single_vertex(const PairStructure& ps) {
  const auto vp = vertex_classes(ps);
  if (vp.count() != 1) {
    throw UnsupportedWordError("word has " + std::to_string(vp.count()) +
                               " vertex classes; a wedge of circles needs exactly one");
  }
}

}  // namespace

double EarringGeometry::distance(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : circles) best = std::min(best, std::abs(std::abs(z - c.center) - c.radius));
  return best;
}

EarringGeometry earring(int N) {
  if (N < 1) throw InvalidInvariantError("earring needs at least one circle");
  EarringGeometry g;
  for (int j = 1; j <= N; ++j) {
    g.circles.push_back({Complex(-1.0 / j, 0.0), static_cast<double>(j + 1) / j});
  }
  return g;
}

std::vector<Complex> SymbolCurve::values() const {
  std::vector<Complex> v(samples.size());
  std::transform(samples.begin(), samples.end(), v.begin(),
                 [](const CurveSample& s) { return s.value; });
  return v;
}

double SymbolCurve::max_step() const { return kernels::omp::max_step(values()); }

SymbolCurve zeta_curve(const PairStructure& ps, int samples_per_arc) {
  if (samples_per_arc < 16) throw InvalidInvariantError("samples_per_arc must be >= 16");
  require_single_vertex(ps);

  const EarringGeometry geometry = earring(ps.N);
  std::vector<kernels::ArcTraversal> arcs(ps.word_length());
  for (int id = 0; id < ps.N; ++id) {
    const Circle& c = geometry.circle(id + 1);
    for (const Occurrence& occ : ps.occurrences[id]) {
      // Same-orientation pairs are flipped to (+,+) by the circle homeomorphism.
      const int sign = ps.same_orientation[id] ? +1 : occ.sign;
      arcs[occ.position] = {id + 1, sign, c.center, c.radius};
    }
  }

  const auto sampled = kernels::omp::sample_arcs(arcs, samples_per_arc);
  SymbolCurve curve;
  curve.samples.resize(sampled.values.size());
  for (std::size_t i = 0; i < sampled.values.size(); ++i) {
    curve.samples[i] = {sampled.t[i], sampled.values[i], sampled.tags[i]};
  }
  return curve;
}

SymbolCurve power_curve(int power, int samples) {
  if (samples < 2) throw InvalidInvariantError("power_curve needs at least 2 samples");
  SymbolCurve curve;
  curve.samples.reserve(samples);
  for (int m = 0; m < samples; ++m) {
    const double t = static_cast<double>(m) / samples;
    curve.samples.push_back({t, std::polar(1.0, kTwoPi * power * t), 0});
  }
  return curve;
}

SymbolCurve pullback_generator(const SymbolCurve& zeta, int j) {
  SymbolCurve out = zeta;
  for (auto& s : out.samples) {
    if (s.circle != j) {
      s.value = Complex(1.0, 0.0);
      s.circle = 0;
    }
  }
  return out;
}

WindingResult winding_around(const SymbolCurve& curve, Complex point) {
  const auto values = curve.values();
  if (values.empty()) throw InvalidInvariantError("empty curve");

  const double step = kernels::omp::max_step(values);
  const double gap = kernels::omp::min_distance(values, point);
  if (!(gap > 10.0 * step)) {
    throw NearZeroError("curve comes within " + std::to_string(gap) + " of the point (step " +
                        std::to_string(step) + ")");
  }

  const double turns = kernels::omp::argument_increment_sum(values, point) / kTwoPi;
  WindingResult r;
  r.winding = static_cast<int>(std::lround(turns));
  r.residual = std::abs(turns - r.winding);
  if (r.residual >= kIntegralityTolerance) {
    throw NonIntegralError("winding residual " + std::to_string(r.residual));
  }
  return r;
}

std::vector<int> numeric_circle_windings(const SymbolCurve& curve,
                                         const EarringGeometry& geometry) {
  const auto values = curve.values();
  std::vector<int> tags(curve.samples.size());
  std::transform(curve.samples.begin(), curve.samples.end(), tags.begin(),
                 [](const CurveSample& s) { return s.circle; });

  std::vector<int> out;
  for (int j = 1; j <= geometry.N(); ++j) {
    const double turns =
        kernels::omp::tagged_argument_increment_sum(values, tags, j, geometry.circle(j).center) /
        kTwoPi;
    const long w = std::lround(turns);
    if (std::abs(turns - static_cast<double>(w)) >= kIntegralityTolerance) {
      throw NonIntegralError("circle " + std::to_string(j) + " winding residual " +
                             std::to_string(std::abs(turns - static_cast<double>(w))));
    }
    out.push_back(static_cast<int>(w));
  }
  return out;
}

WindingVector circle_windings(const PairStructure& ps) {
  require_single_vertex(ps);
  WindingVector wv;
  for (const auto& [a, b] : ps.occurrences) wv.per_circle.push_back(std::abs(a.sign + b.sign));
  wv.around_zero = 2 * ps.k;
  return wv;
}

ArcLayout arc_parametrization(ArcFamily family, int genus) {
  if (genus < 1) throw InvalidInvariantError("genus must be >= 1");
  const double pi = std::numbers::pi;

  struct Arc {
    int letter;
    double start, end;
  };
  std::vector<Arc> arcs;
  if (family == ArcFamily::Orientable) {
    const double m = 2.0 * genus;
    for (int k = 1; k <= 2 * genus; ++k) {
      arcs.push_back({k - 1, pi * (k - 1) / m, pi * k / m});
      arcs.push_back({k - 1, pi * (m + k) / m, pi * (m + k - 1) / m});
    }
  } else {
    const double n = genus;
    for (int k = 1; k <= genus; ++k) {
      arcs.push_back({k - 1, pi * (k - 1) / n, pi * k / n});
      arcs.push_back({k - 1, pi * (-k) / n, pi * (-k + 1) / n});
    }
  }

  const auto position = [&](const Arc& a) {
    double lo = std::min(a.start, a.end);
    lo = std::fmod(lo, 2.0 * pi);
    if (lo < 0) lo += 2.0 * pi;
    return lo;
  };
  std::sort(arcs.begin(), arcs.end(),
            [&](const Arc& a, const Arc& b) { return position(a) < position(b); });

  std::vector<OrientedLetter> letters;
  for (const Arc& a : arcs) letters.push_back({a.letter, a.end > a.start ? +1 : -1});

  ArcLayout layout;
  layout.word = BoundaryWord::from_letters(letters);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    layout.arcs.push_back(
        {layout.word[i].letter_id, layout.word[i].sign, arcs[i].start, arcs[i].end});
  }
  return layout;
}

void write_curve_csv(std::ostream& out, const SymbolCurve& curve) {
  const auto old_precision = out.precision(17);
  out << "t,re,im,circle\n";
  for (const auto& s : curve.samples) {
    out << s.t << ',' << s.value.real() << ',' << s.value.imag() << ',' << s.circle << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qsurf
