#ifndef NHM_FOLIATION_HPP
#define NHM_FOLIATION_HPP

#include <vector>

#include "nhm/presentation.hpp"

namespace nhm {

/// A vertical obstacle segment at abscissa x, spanning [ylo, yhi]; finite
/// ends are closed, infinite ends turn it into a ray or full line.
struct VSegment {
  Rational x;
  ExtRat ylo, yhi;

  bool operator==(const VSegment& o) const = default;
};

/// A finite closed obstacle set Q in the plane: the leaf space of the
/// horizontal foliation of the complement is a 1-manifold presented by
/// compile().
struct ObstacleSet {
  std::vector<std::pair<Rational, Rational>> points;
  std::vector<VSegment> vsegments;

  bool operator==(const ObstacleSet& o) const = default;
};

/// Throws Error("parse") if some segment has ylo > yhi.
void validate(const ObstacleSet& q);

/// One sample abscissa per gap between distinct obstacle x-coordinates:
/// x1 - 1, midpoints, xk + 1. A single sample 0 when Q is empty.
std::vector<Rational> sample_columns(const ObstacleSet& q);

/// Charts c1..c(k+1), one full line of y-parameters per sample column, with
/// identity gluings between consecutive charts away from the closed y-shadow
/// of the obstacle column separating them.
Presentation compile(const ObstacleSet& q);

}  // namespace nhm

#endif
