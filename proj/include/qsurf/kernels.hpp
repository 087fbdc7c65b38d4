#pragma once

// Data-parallel inner loops. Every kernel exists twice: an OpenMP version used
// by the library and a plain serial reference that tests and benchmarks
// compare against. Both take the same arguments and return the same values up
// to floating-point summation order.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qsurf::kernels {

using Complex = std::complex<double>;

/// One arc of the boundary curve: traverse circle `circle` (1-based) with
/// orientation `sign`.
struct ArcTraversal {
  int circle = 0;
  int sign = +1;
  Complex center;
  double radius = 0.0;
};

struct SampledArcs {
  std::vector<double> t;
  std::vector<Complex> values;
  std::vector<int> tags;
};

namespace serial {

/// Sum of principal-branch argument increments of (v - point) around the
/// closed polygon v[0], ..., v[n-1], v[0]. Radians.
double argument_increment_sum(std::span<const Complex> values, Complex point);

/// Same sum restricted to segments (m, m+1 mod n) whose start carries `tag`.
double tagged_argument_increment_sum(std::span<const Complex> values,
                                     std::span<const int> tags, int tag, Complex point);

double min_distance(std::span<const Complex> values, Complex point);
double max_step(std::span<const Complex> values);

SampledArcs sample_arcs(std::span<const ArcTraversal> arcs, int samples_per_arc);

/// Eigenvalues of each matrix. Lower-triangular inputs return the diagonal.
std::vector<Eigen::VectorXcd> block_eigenvalues(std::span<const Eigen::MatrixXcd> blocks);

}  // namespace serial

namespace omp {

double argument_increment_sum(std::span<const Complex> values, Complex point);
double tagged_argument_increment_sum(std::span<const Complex> values,
                                     std::span<const int> tags, int tag, Complex point);
double min_distance(std::span<const Complex> values, Complex point);
double max_step(std::span<const Complex> values);
SampledArcs sample_arcs(std::span<const ArcTraversal> arcs, int samples_per_arc);
std::vector<Eigen::VectorXcd> block_eigenvalues(std::span<const Eigen::MatrixXcd> blocks);

}  // namespace omp

/// Shared helper: true if every entry above the diagonal is exactly zero.
bool is_lower_triangular(const Eigen::MatrixXcd& m);

/// Eigenvalues by the real Schur form when every entry is real, by the
/// complex Schur form otherwise.
Eigen::VectorXcd general_eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace qsurf::kernels
