#include <ostream>

#include "qsurf/operators.hpp"

namespace qsurf {

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  const auto old_precision = out.precision(17);
  out << "row,col,re,im\n";
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      const Complex z = m(row, col);
      if (z == Complex(0.0, 0.0)) continue;
      out << row << ',' << col << ',' << z.real() << ',' << z.imag() << '\n';
    }
  }
  out.precision(old_precision);
}

void write_spectrum_csv(std::ostream& out, const SpectrumReport& report) {
  const auto old_precision = out.precision(17);
  out << "re,im,block,deviation,kind\n";
  for (const auto& e : report.entries) {
    out << e.value.real() << ',' << e.value.imag() << ',' << e.block << ',' << e.deviation << ','
        << to_string(e.kind) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qsurf
