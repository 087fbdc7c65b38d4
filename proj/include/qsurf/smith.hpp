#pragma once

// Smith normal form over the integers and the finitely generated abelian
// groups it produces.

#include <string>
#include <vector>

#include <Eigen/Core>

namespace qsurf {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Z^free_rank + Z/t_1 + ... with t_1 | t_2 | ... and every t_i >= 2.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<long long> torsion;

  /// Drops unit factors, folds zero factors into the free rank and brings
  /// the rest into invariant-factor form.
  static AbelianGroup from_diagonal(int extra_free_rank, std::vector<long long> factors);

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// left * a * right == diagonal, with left and right unimodular and the
/// diagonal entries d_1 | d_2 | ... | d_rank > 0 followed by zeros.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  int rank = 0;

  std::vector<long long> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Columns form a Z-basis of {x in Z^n : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows / a Z^cols.
AbelianGroup cokernel(const IntMatrix& a);

/// Kernel of a as an abstract group (always free).
AbelianGroup kernel(const IntMatrix& a);

}  // namespace qsurf
