#include "qsurf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qsurf/errors.hpp"
#include "qsurf/kernels.hpp"

namespace qsurf {

namespace {

void require_dim(int d, int minimum) {
  if (d < minimum) {
    throw ShapeError("dimension " + std::to_string(d) + " below minimum " +
                     std::to_string(minimum));
  }
}

// Formats a real number as an integer or a reduced fraction with a small
// denominator, falling back to decimal.
std::string format_real(double x) {
  for (long den = 1; den <= 1000; ++den) {
    const double scaled = x * static_cast<double>(den);
    const double num = std::round(scaled);
    if (std::abs(scaled - num) < 1e-9 * static_cast<double>(den)) {
      const long n = static_cast<long>(num);
      if (den == 1) return std::to_string(n);
      return std::to_string(n) + "/" + std::to_string(den);
    }
  }
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string format_coefficient(Complex c) {
  if (std::abs(c.imag()) > 1e-15) {
    std::ostringstream out;
    out.precision(17);
    out << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    return out.str();
  }
  if (c.real() == 1.0) return "";
  const std::string s = format_real(c.real());
  return s.find('/') != std::string::npos || c.real() < 0 ? "(" + s + ")" : s;
}

int symbol_power(const BlockSpec& spec) {
  switch (spec.kind) {
    case BlockKind::UnilateralShiftPower:
    case BlockKind::BergmanTz:
      return spec.adjoint ? -spec.power : spec.power;
    case BlockKind::BilateralShift:
      return spec.adjoint ? -1 : 1;
    case BlockKind::Identity:
      return 0;
  }
  return 0;
}

}  // namespace

Matrix unilateral_shift(int d) {
  require_dim(d, 2);
  Matrix s = Matrix::Zero(d, d);
  for (int n = 0; n + 1 < d; ++n) s(n + 1, n) = 1.0;
  return s;
}

double bergman_weight(int n) {
  return std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n + 2));
}

Matrix bergman_tz(int d) {
  require_dim(d, 2);
  Matrix t = Matrix::Zero(d, d);
  for (int n = 0; n + 1 < d; ++n) t(n + 1, n) = bergman_weight(n);
  return t;
}

Matrix bilateral_shift_circulant(int d) {
  require_dim(d, 2);
  Matrix u = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) u((i + 1) % d, i) = 1.0;
  return u;
}

BlockSpec unilateral_block(int j) {
  return {BlockKind::UnilateralShiftPower, 2, false, Complex(static_cast<double>(j + 1) / j, 0.0),
          Complex(-1.0 / j, 0.0)};
}

BlockSpec bilateral_block(int j) {
  return {BlockKind::BilateralShift, 1, false, Complex(static_cast<double>(j + 1) / j, 0.0),
          Complex(-1.0 / j, 0.0)};
}

BlockSpec identity_block() { return {}; }

std::string describe(const BlockSpec& spec) {
  if (spec.kind == BlockKind::Identity) {
    const Complex c = spec.scale + spec.offset;
    return c == Complex(1.0, 0.0) ? "Id" : format_coefficient(c) + "Id";
  }

  std::string base;
  switch (spec.kind) {
    case BlockKind::UnilateralShiftPower:
      base = spec.adjoint ? "S*" : "S";
      if (spec.power != 1) base += "^" + std::to_string(spec.power);
      break;
    case BlockKind::BergmanTz:
      base = spec.adjoint ? "T_z*" : "T_z";
      if (spec.power != 1) base += "^" + std::to_string(spec.power);
      break;
    case BlockKind::BilateralShift:
      base = spec.adjoint ? "U*" : "U";
      break;
    case BlockKind::Identity:
      break;
  }

  std::string out = format_coefficient(spec.scale) + base;
  if (spec.offset != Complex(0.0, 0.0)) {
    if (std::abs(spec.offset.imag()) <= 1e-15) {
      out += spec.offset.real() < 0 ? " - " : " + ";
      out += format_real(std::abs(spec.offset.real()));
    } else {
      out += " + " + format_coefficient(spec.offset);
    }
  }
  return out;
}

Matrix materialize(const BlockSpec& spec, int d) {
  Matrix base;
  switch (spec.kind) {
    case BlockKind::UnilateralShiftPower:
    case BlockKind::BergmanTz: {
      const Matrix one = spec.kind == BlockKind::BergmanTz ? bergman_tz(d) : unilateral_shift(d);
      base = Matrix::Identity(d, d);
      for (int p = 0; p < spec.power; ++p) base = one * base;
      if (spec.adjoint) base = base.adjoint().eval();
      break;
    }
    case BlockKind::BilateralShift:
      base = bilateral_shift_circulant(d);
      if (spec.adjoint) base = base.adjoint().eval();
      break;
    case BlockKind::Identity:
      require_dim(d, 1);
      base = Matrix::Identity(d, d);
      break;
  }
  return spec.scale * base + spec.offset * Matrix::Identity(d, d);
}

SymbolCurve block_symbol(const BlockSpec& spec, int samples, int block) {
  SymbolCurve curve = power_curve(symbol_power(spec), samples);
  for (auto& s : curve.samples) {
    s.value = spec.scale * s.value + spec.offset;
    s.circle = block;
  }
  return curve;
}

int fredholm_index(const SymbolCurve& symbol, Complex point) {
  return -winding_around(symbol, point).winding;
}

int block_fredholm_index(const BlockSpec& spec) {
  if (spec.kind == BlockKind::BilateralShift || spec.kind == BlockKind::Identity) return 0;
  return fredholm_index(block_symbol(spec, 4096));
}

Matrix TruncatedOperator::dense() const {
  const Eigen::Index d = block_dim;
  const Eigen::Index n = d * static_cast<Eigen::Index>(blocks.size());
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.block(static_cast<Eigen::Index>(b) * d, static_cast<Eigen::Index>(b) * d, d, d) =
        blocks[b].matrix;
  }
  return out;
}

TruncatedOperator build_generator(int N, int k, int d) {
  if (N < 1) throw InvalidInvariantError("N must be >= 1");
  if (k < 0 || k > N) {
    throw InvalidInvariantError("k=" + std::to_string(k) + " outside 0..N=" + std::to_string(N));
  }
  if (d < 4) throw InvalidInvariantError("block dimension must be >= 4");

  TruncatedOperator op;
  op.block_dim = d;
  for (int j = 1; j <= N; ++j) {
    const BlockSpec spec = j <= k ? unilateral_block(j) : bilateral_block(j);
    op.blocks.push_back({spec, materialize(spec, d)});
  }
  return op;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

namespace {

void require_contraction(const Matrix& t) {
  if (t.rows() != t.cols()) throw ShapeError("contraction must be square");
  const double norm = spectral_norm(t);
  if (norm > 1.0 + 1e-12) {
    throw NotContractionError("operator norm " + std::to_string(norm) + " exceeds 1");
  }
}

Matrix isometry_defect_root(const Matrix& t) {
  const Matrix defect = Matrix::Identity(t.cols(), t.cols()) - t.adjoint() * t;
  return hermitian_sqrt(defect);
}

}  // namespace

Matrix bott_isometry(const Matrix& t) {
  require_contraction(t);
  const Eigen::Index d = t.rows();
  Matrix v(2 * d, d);
  v.topRows(d) = t;
  v.bottomRows(d) = isometry_defect_root(t);
  return v;
}

Matrix bott_projection(const Matrix& t) {
  require_contraction(t);
  const Eigen::Index d = t.rows();
  const Matrix root = isometry_defect_root(t);
  Matrix p(2 * d, 2 * d);
  p.topLeftCorner(d, d) = t * t.adjoint();
  p.topRightCorner(d, d) = t * root;
  p.bottomLeftCorner(d, d) = root * t.adjoint();
  p.bottomRightCorner(d, d) = Matrix::Identity(d, d) - t.adjoint() * t;
  return p;
}

SpectrumReport spectrum_report(const TruncatedOperator& op, const EarringGeometry& target,
                               int symbol_samples) {
  if (static_cast<int>(op.block_count()) != target.N()) {
    throw ShapeError("operator has " + std::to_string(op.block_count()) + " blocks, target has " +
                     std::to_string(target.N()) + " circles");
  }

  std::vector<Matrix> matrices;
  matrices.reserve(op.block_count());
  for (const auto& b : op.blocks) matrices.push_back(b.matrix);
  const auto eigenvalues = kernels::omp::block_eigenvalues(matrices);

  SpectrumReport report;
  report.target = target;
  for (std::size_t b = 0; b < op.block_count(); ++b) {
    const int j = static_cast<int>(b) + 1;
    const Circle& circle = target.circle(j);
    const auto deviation = [&](Complex z) {
      return std::abs(std::abs(z - circle.center) - circle.radius);
    };
    const BlockSpec& spec = op.blocks[b].spec;

    if (spec.kind == BlockKind::BilateralShift) {
      for (Eigen::Index i = 0; i < eigenvalues[b].size(); ++i) {
        const Complex z = eigenvalues[b](i);
        const double dev = deviation(z);
        report.entries.push_back({z, j, dev, SpectrumEntryKind::Eigenvalue});
        report.max_deviation = std::max(report.max_deviation, dev);
      }
      continue;
    }

    if (spec.kind == BlockKind::UnilateralShiftPower) {
      for (const auto& s : block_symbol(spec, symbol_samples, j).samples) {
        const double dev = deviation(s.value);
        report.entries.push_back({s.value, j, dev, SpectrumEntryKind::Symbol});
        report.symbol_max_deviation = std::max(report.symbol_max_deviation, dev);
      }
    }
    for (Eigen::Index i = 0; i < eigenvalues[b].size(); ++i) {
      const Complex z = eigenvalues[b](i);
      report.entries.push_back({z, j, deviation(z), SpectrumEntryKind::Artifact});
    }
  }
  return report;
}

std::vector<BlockSpec> k1_generator_blocks(int N, int k, int i) {
  if (k < 0 || k > N) throw InvalidInvariantError("k outside 0..N");
  std::vector<BlockSpec> blocks(N, identity_block());

  if (k == 0) {
    if (i < 1 || i > N) {
      throw IndexRangeError("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(N));
    }
    blocks[i - 1] = bilateral_block(i);
    return blocks;
  }

  if (i < 1 || i > N - 1) {
    throw IndexRangeError("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(N - 1));
  }
  if (i < k) {
    blocks[0] = {BlockKind::UnilateralShiftPower, 2, true, Complex(2.0, 0.0), Complex(-1.0, 0.0)};
    blocks[i] = unilateral_block(i + 1);
  } else {
    blocks[i] = bilateral_block(i + 1);
  }
  return blocks;
}

std::string to_string(SpectrumEntryKind kind) {
  switch (kind) {
    case SpectrumEntryKind::Eigenvalue:
      return "eigenvalue";
    case SpectrumEntryKind::Symbol:
      return "symbol";
    case SpectrumEntryKind::Artifact:
      return "artifact";
  }
  return "unknown";
}

}  // namespace qsurf
