#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qsurf/kernels.hpp"

namespace qsurf::kernels {

bool is_lower_triangular(const Eigen::MatrixXcd& m) {
  for (Eigen::Index col = 1; col < m.cols(); ++col) {
    for (Eigen::Index row = 0; row < std::min(col, m.rows()); ++row) {
      if (m(row, col) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m.real(), false);
    return solver.eigenvalues();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  return solver.eigenvalues();
}

namespace serial {

namespace {

inline double increment(Complex a, Complex b) { return std::arg(b * std::conj(a)); }

}  // namespace

double argument_increment_sum(std::span<const Complex> values, Complex point) {
  const std::size_t n = values.size();
  double sum = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    sum += increment(values[m] - point, values[(m + 1) % n] - point);
  }
  return sum;
}

double tagged_argument_increment_sum(std::span<const Complex> values,
                                     std::span<const int> tags, int tag, Complex point) {
  const std::size_t n = values.size();
  double sum = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    if (tags[m] != tag) continue;
    sum += increment(values[m] - point, values[(m + 1) % n] - point);
  }
  return sum;
}

double min_distance(std::span<const Complex> values, Complex point) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : values) best = std::min(best, std::abs(v - point));
  return best;
}

double max_step(std::span<const Complex> values) {
  const std::size_t n = values.size();
  double best = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    best = std::max(best, std::abs(values[(m + 1) % n] - values[m]));
  }
  return best;
}

SampledArcs sample_arcs(std::span<const ArcTraversal> arcs, int samples_per_arc) {
  const std::size_t total = arcs.size() * static_cast<std::size_t>(samples_per_arc);
  const double arc_count = static_cast<double>(arcs.size());
  SampledArcs out;
  out.t.resize(total);
  out.values.resize(total);
  out.tags.resize(total);
  for (std::size_t p = 0; p < arcs.size(); ++p) {
    const ArcTraversal& arc = arcs[p];
    for (int m = 0; m < samples_per_arc; ++m) {
      const std::size_t idx = p * samples_per_arc + m;
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
  std::vector<Eigen::VectorXcd> out(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (is_lower_triangular(blocks[b])) {
      out[b] = blocks[b].diagonal();
    } else {
      out[b] = general_eigenvalues(blocks[b]);
    }
  }
  return out;
}

}  // namespace serial
}  // namespace qsurf::kernels
