#ifndef NHM_GROUPOID_HPP
#define NHM_GROUPOID_HPP

#include <map>
#include <utility>
#include <vector>

#include "nhm/presentation.hpp"

namespace nhm {

/// The saturated set of composite transition maps between charts, in
/// disjoint-domain normal form per ordered chart pair. Identity maps on full
/// chart extents are implicit; self-maps other than identity restrictions are
/// rejected during saturation.
class TransitionGroupoid {
 public:
  using ChartPair = std::pair<std::string, std::string>;
  using MapTable = std::map<ChartPair, std::vector<PartialAffine>>;

  const MapTable& maps() const { return maps_; }
  const std::vector<PartialAffine>& maps_between(const std::string& from,
                                                 const std::string& to) const;

  std::size_t map_count() const;
  int rounds_used() const { return rounds_used_; }

  /// All chart representatives of the point, including the point itself.
  /// Sorted; finite by saturation.
  std::vector<PointRef> orbit(const PointRef& p) const;

  /// Lexicographically least representative; the canonical name of a point
  /// of the manifold.
  PointRef canonical(const PointRef& p) const;

  bool same_point(const PointRef& a, const PointRef& b) const;

  friend TransitionGroupoid saturate(const Presentation& p, int depth_limit);

 private:
  MapTable maps_;
  int rounds_used_ = 0;
};

/// Closes the (symmetrized) gluing generators under composition, inversion
/// and same-coefficient domain merging. Throws Error("not_injective") when a
/// non-identity self-map arises or two transitions between one chart pair
/// disagree on overlapping domains, and Error("not_tame") when no fixpoint
/// is reached within depth_limit rounds.
TransitionGroupoid saturate(const Presentation& p, int depth_limit = 16);

/// True iff a and b denote the same point of the manifold. Throws
/// Error("parse") when a parameter lies outside its chart extent.
bool same_point(const Presentation& p, const TransitionGroupoid& g, const PointRef& a,
                const PointRef& b);

}  // namespace nhm

#endif
