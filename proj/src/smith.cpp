#include "qsurf/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qsurf {

AbelianGroup AbelianGroup::from_diagonal(int extra_free_rank, std::vector<long long> factors) {
  AbelianGroup g;
  g.free_rank = extra_free_rank;
  std::vector<long long> finite;
  for (long long f : factors) {
    f = std::llabs(f);
    if (f == 0) {
      ++g.free_rank;
    } else if (f > 1) {
      finite.push_back(f);
    }
  }
  // Re-diagonalize so the factors divide each other.
  if (!finite.empty()) {
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(finite.size()),
                                  static_cast<Eigen::Index>(finite.size()));
    for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
    for (long long f : smith_normal_form(d).invariant_factors()) {
      if (f > 1) g.torsion.push_back(f);
    }
  }
  return g;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long long t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (free_rank > 0) {
    out << (first ? "" : " + ") << "Z";
    if (free_rank > 1) out << '^' << free_rank;
  }
  return out.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> factors = a.torsion;
  factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::from_diagonal(a.free_rank + b.free_rank, std::move(factors));
}

std::vector<long long> SmithForm::invariant_factors() const {
  std::vector<long long> out;
  for (int i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::Identity(a.rows(), a.rows())),
        v_(IntMatrix::Identity(a.cols(), a.cols())) {}

  SmithForm run() {
    const Eigen::Index m = d_.rows();
    const Eigen::Index n = d_.cols();
    int rank = 0;
    for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
      if (!move_smallest_to(t)) break;
      reduce_pivot(t);
      if (d_(t, t) < 0) negate_row(t);
      ++rank;
    }
    return {u_, d_, v_, rank};
  }

 private:
  // Moves the nonzero entry of least magnitude in the trailing block to (t,t).
  bool move_smallest_to(Eigen::Index t) {
    Eigen::Index best_r = -1, best_c = -1;
    long long best = 0;
    for (Eigen::Index r = t; r < d_.rows(); ++r) {
      for (Eigen::Index c = t; c < d_.cols(); ++c) {
        const long long x = std::llabs(d_(r, c));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void reduce_pivot(Eigen::Index t) {
    for (;;) {
      bool changed = false;
      for (Eigen::Index r = t + 1; r < d_.rows(); ++r) {
        if (d_(r, t) == 0) continue;
        add_row(r, t, -(d_(r, t) / d_(t, t)));
        if (d_(r, t) != 0) {
          swap_rows(t, r);
          changed = true;
        }
      }
      for (Eigen::Index c = t + 1; c < d_.cols(); ++c) {
        if (d_(t, c) == 0) continue;
        add_col(c, t, -(d_(t, c) / d_(t, t)));
        if (d_(t, c) != 0) {
          swap_cols(t, c);
          changed = true;
        }
      }
      if (changed) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      bool divides = true;
      for (Eigen::Index r = t + 1; r < d_.rows() && divides; ++r) {
        for (Eigen::Index c = t + 1; c < d_.cols(); ++c) {
          if (d_(r, c) % d_(t, t) != 0) {
            add_row(t, r, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return;
    }
  }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d_.row(a).swap(d_.row(b));
    u_.row(a).swap(u_.row(b));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d_.col(a).swap(d_.col(b));
    v_.col(a).swap(v_.col(b));
  }
  // row[dst] += factor * row[src]
  void add_row(Eigen::Index dst, Eigen::Index src, long long factor) {
    d_.row(dst) += factor * d_.row(src);
    u_.row(dst) += factor * u_.row(src);
  }
  void add_col(Eigen::Index dst, Eigen::Index src, long long factor) {
    d_.col(dst) += factor * d_.col(src);
    v_.col(dst) += factor * v_.col(src);
  }
  void negate_row(Eigen::Index r) {
    d_.row(r) *= -1;
    u_.row(r) *= -1;
  }

  IntMatrix d_, u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return Reducer(a).run(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  return s.right.rightCols(a.cols() - s.rank);
}

AbelianGroup cokernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  return AbelianGroup::from_diagonal(static_cast<int>(a.rows()) - s.rank, s.invariant_factors());
}

AbelianGroup kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  return {static_cast<int>(a.cols()) - s.rank, {}};
}

}  // namespace qsurf
