#pragma once

// The finite Hawaiian earring X_N, the boundary curve zeta_N that collapses
// the identified arcs onto it, and winding numbers by the discrete argument
// principle.

#include <complex>
#include <iosfwd>
#include <vector>

#include "qsurf/word.hpp"

namespace qsurf {

using Complex = std::complex<double>;

struct Circle {
  Complex center;
  double radius = 0.0;
};

/// Circle j (1-based) has center -1/j and radius (j+1)/j; all of them pass
/// through the base point 1 and enclose the origin.
struct EarringGeometry {
  std::vector<Circle> circles;

  int N() const { return static_cast<int>(circles.size()); }
  const Circle& circle(int j) const { return circles.at(j - 1); }
  /// Distance from z to the union of circles.
  double distance(Complex z) const;
};

EarringGeometry earring(int N);

struct CurveSample {
  double t = 0.0;
  Complex value;
  int circle = 0;  // 1-based circle tag, 0 on constant segments
};

/// Closed curve sampled on [0,1); the segment from the last sample back to
/// the first closes it.
struct SymbolCurve {
  std::vector<CurveSample> samples;

  std::vector<Complex> values() const;
  /// Largest distance between consecutive samples, wrap-around included.
  double max_step() const;
};

/// Boundary curve of a single-vertex word: arc p of 2N traverses the circle of
/// its letter once, positively or negatively, from the base point back to it.
/// Same-orientation pairs are normalized to positive traversals.
/// Throws UnsupportedWordError unless the pair structure has one vertex class.
SymbolCurve zeta_curve(const PairStructure& ps, int samples_per_arc);

/// u^power sampled uniformly on the unit circle.
SymbolCurve power_curve(int power, int samples);

/// Pullback of v_j: the curve itself on segments tagged j, 1 elsewhere.
SymbolCurve pullback_generator(const SymbolCurve& zeta, int j);

struct WindingResult {
  int winding = 0;
  double residual = 0.0;  // |raw turns - winding|
};

inline constexpr double kIntegralityTolerance = 0.01;

/// Throws NearZeroError when the curve comes within 10 sampling steps of the
/// point and NonIntegralError when the turn count is not within 0.01 of an
/// integer.
WindingResult winding_around(const SymbolCurve& curve, Complex point);

/// Per-circle windings measured numerically: argument increments of
/// value - center_j over the segments tagged j.
std::vector<int> numeric_circle_windings(const SymbolCurve& curve,
                                         const EarringGeometry& geometry);

struct WindingVector {
  std::vector<int> per_circle;
  int around_zero = 0;
};

/// Combinatorial windings: |s1 + s2| per letter, 2k around the origin.
WindingVector circle_windings(const PairStructure& ps);

enum class ArcFamily { Orientable, NonOrientable };

struct ArcAngles {
  int letter_id = 0;
  int sign = +1;
  double start_angle = 0.0;  // at t = 0, radians
  double end_angle = 0.0;    // at t = 1
};

struct ArcLayout {
  BoundaryWord word;
  std::vector<ArcAngles> arcs;  // counterclockwise order
};

/// Explicit arc families: orientable(g) with arcs e^{pi i (k-1+t)/(2g)} and
/// e^{pi i (2g+k-t)/(2g)}, nonorientable(n) with e^{pi i (k-1+t)/n} and
/// e^{pi i (-k+t)/n}. The word is read off by sorting the arcs by position.
ArcLayout arc_parametrization(ArcFamily family, int genus);

/// CSV with header t,re,im,circle and 17 significant digits.
void write_curve_csv(std::ostream& out, const SymbolCurve& curve);

}  // namespace qsurf
