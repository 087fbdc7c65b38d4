#pragma once

// Finite truncations of the shift-operator generators of the quantum surface
// algebras, their spectra and Fredholm indices, and the Bott projection.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsurf/curves.hpp"

namespace qsurf {

using Matrix = Eigen::MatrixXcd;

/// d x d truncation of S e_n = e_{n+1}.
Matrix unilateral_shift(int d);

/// Weight of T_z e_n = w(n) e_{n+1} on the Bergman basis: sqrt((n+1)/(n+2)).
double bergman_weight(int n);
Matrix bergman_tz(int d);

/// Cyclic permutation e_i -> e_{i+1 mod d}: the unitary bilateral shift with
/// periodic boundary.
Matrix bilateral_shift_circulant(int d);

enum class BlockKind { UnilateralShiftPower, BilateralShift, BergmanTz, Identity };

/// The operator scale * B + offset * I, where B is S^power (or S*^power when
/// adjoint is set), U, T_z or I.
struct BlockSpec {
  BlockKind kind = BlockKind::Identity;
  int power = 1;
  bool adjoint = false;
  Complex scale{1.0, 0.0};
  Complex offset{0.0, 0.0};

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// ((j+1)/j) S^2 - 1/j
BlockSpec unilateral_block(int j);
/// ((j+1)/j) U - 1/j
BlockSpec bilateral_block(int j);
BlockSpec identity_block();

/// Human-readable form such as "(3/2)U - 1/2" or "2S*^2 - 1".
std::string describe(const BlockSpec& spec);

Matrix materialize(const BlockSpec& spec, int d);

/// Boundary symbol t -> scale * e^{2 pi i p t} + offset (p negative for
/// adjoints, 0 for the identity), tagged with `block`.
SymbolCurve block_symbol(const BlockSpec& spec, int samples, int block = 0);

/// Index of the infinite block operator: -winding of the symbol for
/// unilateral and Bergman blocks; 0 for bilateral and identity blocks, whose
/// operators are invertible on l2(Z) and l2(N0) respectively.
int block_fredholm_index(const BlockSpec& spec);

struct OperatorBlock {
  BlockSpec spec;
  Matrix matrix;
};

struct TruncatedOperator {
  std::vector<OperatorBlock> blocks;
  int block_dim = 0;

  std::size_t block_count() const { return blocks.size(); }
  Matrix dense() const;
};

/// Direct sum of k blocks ((j+1)/j)S^2 - 1/j and N-k blocks ((j+1)/j)U - 1/j.
/// Throws InvalidInvariantError unless 0 <= k <= N and d >= 4.
TruncatedOperator build_generator(int N, int k, int d);

/// Minus the winding of the symbol around the point.
int fredholm_index(const SymbolCurve& symbol, Complex point = {0.0, 0.0});

double spectral_norm(const Matrix& m);

/// Principal square root of a Hermitian positive semidefinite matrix; negative
/// eigenvalues from rounding are clamped to zero.
Matrix hermitian_sqrt(const Matrix& m);

/// The column (T; sqrt(I - T*T)), an isometry for every contraction T.
Matrix bott_isometry(const Matrix& t);

/// [[T T*, T D], [D T*, I - T*T]] with D = sqrt(I - T*T).
/// Throws NotContractionError when ||T|| > 1 + 1e-12.
Matrix bott_projection(const Matrix& t);

enum class SpectrumEntryKind { Eigenvalue, Symbol, Artifact };

struct SpectrumEntry {
  Complex value;
  int block = 0;  // 1-based
  double deviation = 0.0;
  SpectrumEntryKind kind = SpectrumEntryKind::Eigenvalue;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  EarringGeometry target;
  double max_deviation = 0.0;         // circulant eigenvalues only
  double symbol_max_deviation = 0.0;  // unilateral symbol images
};

/// Bilateral blocks contribute circulant eigenvalues with their distance to
/// the assigned circle; unilateral blocks contribute their symbol image plus
/// the eigenvalues of the truncation, flagged as artifacts.
/// Throws ShapeError if the block count differs from target.N().
SpectrumReport spectrum_report(const TruncatedOperator& op, const EarringGeometry& target,
                               int symbol_samples = 1024);

/// Block lists of the K1 generator lifts, up to compact perturbation.
/// k = 0: generator i in 1..N has ((i+1)/i)U - 1/i in block i.
/// k >= 1: generator i in 1..N-1 has 2S*^2 - 1 in block 1 and
/// ((i+2)/(i+1))S^2 - 1/(i+1) in block i+1 when i < k, and
/// ((i+2)/(i+1))U - 1/(i+1) in block i+1 otherwise.
std::vector<BlockSpec> k1_generator_blocks(int N, int k, int i);

/// Sparse triplets row,col,re,im of the nonzero entries, 17 digits.
void write_matrix_csv(std::ostream& out, const Matrix& m);

/// re,im,block,deviation,kind rows.
void write_spectrum_csv(std::ostream& out, const SpectrumReport& report);

std::string to_string(SpectrumEntryKind kind);

}  // namespace qsurf
