#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qsurf/kernels.hpp"

namespace qsurf::kernels::omp {

namespace {

inline double increment(Complex a, Complex b) { return std::arg(b * std::conj(a)); }

}  // namespace

double argument_increment_sum(std::span<const Complex> values, Complex point) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::ptrdiff_t m = 0; m < n; ++m) {
    sum += increment(values[m] - point, values[(m + 1) % n] - point);
  }
  return sum;
}

double tagged_argument_increment_sum(std::span<const Complex> values,
                                     std::span<const int> tags, int tag, Complex point) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::ptrdiff_t m = 0; m < n; ++m) {
    if (tags[m] == tag) sum += increment(values[m] - point, values[(m + 1) % n] - point);
  }
  return sum;
}

double min_distance(std::span<const Complex> values, Complex point) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::ptrdiff_t m = 0; m < n; ++m) best = std::min(best, std::abs(values[m] - point));
  return best;
}

double max_step(std::span<const Complex> values) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
  double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::ptrdiff_t m = 0; m < n; ++m) {
    best = std::max(best, std::abs(values[(m + 1) % n] - values[m]));
  }
  return best;
}

SampledArcs sample_arcs(std::span<const ArcTraversal> arcs, int samples_per_arc) {
  const std::ptrdiff_t arc_total = static_cast<std::ptrdiff_t>(arcs.size());
  const std::size_t total = arcs.size() * static_cast<std::size_t>(samples_per_arc);
  const double arc_count = static_cast<double>(arcs.size());
  SampledArcs out;
  out.t.resize(total);
  out.values.resize(total);
  out.tags.resize(total);
  // Arcs write disjoint slices, so the result is concatenated in word order.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < arc_total; ++p) {
    const ArcTraversal& arc = arcs[p];
    for (int m = 0; m < samples_per_arc; ++m) {
      const std::size_t idx = static_cast<std::size_t>(p) * samples_per_arc + m;
      const double local = static_cast<double>(m) / samples_per_arc;
      out.t[idx] = (static_cast<double>(p) + local) / arc_count;
      out.values[idx] =
          arc.center + std::polar(arc.radius, 2.0 * std::numbers::pi * arc.sign * local);
      out.tags[idx] = arc.circle;
    }
  }
  return out;
}

std::vector<Eigen::VectorXcd> block_eigenvalues(std::span<const Eigen::MatrixXcd> blocks) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(blocks.size());
  std::vector<Eigen::VectorXcd> out(blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t b = 0; b < count; ++b) {
    if (is_lower_triangular(blocks[b])) {
      out[b] = blocks[b].diagonal();
    } else {
      out[b] = general_eigenvalues(blocks[b]);
    }
  }
  return out;
}

}  // namespace qsurf::kernels::omp
