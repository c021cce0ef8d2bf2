#ifndef NHM_ORACLE_HPP
#define NHM_ORACLE_HPP

#include <string>

#include "nhm/groupoid.hpp"

namespace nhm {

/// Outcome of the ε-refinement semi-decision: SEPARATED(k) proves the points
/// separable with ε = 2^-k witnesses; UNRESOLVED(K) is consistent with
/// inseparability but never a proof of it.
struct OracleVerdict {
  bool separated = false;
  int k = 0;  // separating exponent, or the exhausted depth

  bool operator==(const OracleVerdict& o) const = default;
  std::string str() const;
};

/// Brute-force cross-check of the separation module: for k = 1..max_depth
/// saturates the ε-neighbourhoods of a and b under one pass of the (already
/// saturated) groupoid and intersects them per chart. Throws
/// Error("same_point") when a and b denote one point.
OracleVerdict insep_semidecide(const Presentation& p, const TransitionGroupoid& g,
                               const PointRef& a, const PointRef& b, int max_depth = 12);

}  // namespace nhm

#endif
