#ifndef NHM_PRESENTATION_HPP
#define NHM_PRESENTATION_HPP

#include <compare>
#include <string>
#include <vector>

#include "nhm/affine.hpp"

namespace nhm {

/// A maximal coordinate patch: an interval of parameters. A closed end marks
/// a boundary point of the manifold and must be finite.
struct Chart {
  std::string id;
  Interval extent = Interval::whole();

  bool operator==(const Chart& o) const = default;
};

/// One gluing homeomorphism between open subsets of chart interiors.
struct GluingGenerator {
  std::string from;
  std::string to;
  PartialAffine map;

  bool operator==(const GluingGenerator& o) const = default;
};

/// A point of the manifold named through one chart. Several PointRefs may
/// denote the same point; the transition groupoid decides identity.
struct PointRef {
  std::string chart;
  Rational param;

  std::strong_ordering operator<=>(const PointRef& o) const {
    if (auto c = chart <=> o.chart; c != 0) return c;
    return cmp(param, o.param) <=> 0;
  }
  bool operator==(const PointRef& o) const = default;

  std::string str() const { return "(" + chart + "," + rational_str(param) + ")"; }
};

/// Finitely many charts glued along open subsets: the manifold A.
class Presentation {
 public:
  Presentation() = default;
  /// Validates structure: unique ids, nonempty non-singleton extents, finite
  /// closed ends, gluing domains/images open and inside chart interiors.
  /// Throws Error("parse") on violation.
  Presentation(std::vector<Chart> charts, std::vector<GluingGenerator> gluings);

  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<GluingGenerator>& gluings() const { return gluings_; }

  const Chart& chart(const std::string& id) const;
  bool in_extent(const PointRef& p) const;

  /// Adds the inverse of every generator that is missing. Idempotent.
  Presentation symmetrized() const;

  /// Chart ids grouped into connected components of the gluing graph,
  /// each group sorted, groups ordered by least member.
  std::vector<std::vector<std::string>> components() const;

  bool operator==(const Presentation& o) const = default;

 private:
  std::vector<Chart> charts_;
  std::vector<GluingGenerator> gluings_;
};

}  // namespace nhm

#endif
