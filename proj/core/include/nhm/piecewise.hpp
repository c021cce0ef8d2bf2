#ifndef NHM_PIECEWISE_HPP
#define NHM_PIECEWISE_HPP

#include <map>
#include <string>
#include <vector>

#include "nhm/rational.hpp"

namespace nhm {

/// A continuous piecewise-affine function on the whole line, exact rational:
/// linear interpolation between knots, constant slopes beyond the first and
/// last knot. Continuity holds by construction.
class PiecewiseAffine {
 public:
  /// knots must be nonempty with strictly increasing x. Throws Error("parse").
  PiecewiseAffine(std::vector<std::pair<Rational, Rational>> knots, Rational left_slope,
                  Rational right_slope);

  static PiecewiseAffine affine(const Rational& slope, const Rational& offset) {
    return PiecewiseAffine({{0, offset}}, slope, slope);
  }

  Rational eval(const Rational& x) const;

  /// Knot abscissas: the only places the slope may change.
  std::vector<Rational> breakpoints() const;

  const std::vector<std::pair<Rational, Rational>>& knots() const { return knots_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  bool operator==(const PiecewiseAffine& o) const = default;

 private:
  std::vector<std::pair<Rational, Rational>> knots_;
  Rational left_slope_, right_slope_;
};

/// A real-valued test map on the manifold: one piecewise-affine function per
/// chart parameter.
using TestMap = std::map<std::string, PiecewiseAffine>;

}  // namespace nhm

#endif
