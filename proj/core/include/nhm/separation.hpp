#ifndef NHM_SEPARATION_HPP
#define NHM_SEPARATION_HPP

#include <string>
#include <vector>

#include "nhm/groupoid.hpp"

namespace nhm {

/// Two distinct points every pair of whose neighbourhoods intersect. The
/// witness records the transition whose one-sided limit certifies it: b is
/// the affine extension of the witness map at the domain-component endpoint a.
struct InseparablePair {
  PointRef a;  // canonical
  PointRef b;  // canonical
  struct Witness {
    std::string from, to;
    Rational slope, offset;
    Interval component = Interval::whole();
    bool at_upper_end = false;  // endpoint of the component the pair arises at
  } witness;

  bool operator==(const InseparablePair& o) const { return a == o.a && b == o.b; }
  bool operator<(const InseparablePair& o) const {
    return a < o.a || (a == o.a && b < o.b);
  }
};

/// All inseparable pairs, deduplicated up to orbit and symmetry; each stored
/// with a < b on canonical representatives.
std::vector<InseparablePair> inseparable_pairs(const Presentation& p,
                                               const TransitionGroupoid& g);

/// hcl(x) = {x} plus its inseparability partners, as canonical points.
/// x is a branch point iff the result has at least two entries.
std::vector<PointRef> hausdorff_closure(const Presentation& p, const TransitionGroupoid& g,
                                        const PointRef& x);

/// Branch points and boundary points, canonical, sorted: the set Avrt whose
/// classes become the quotient's vertices.
std::vector<PointRef> vertex_candidates(const Presentation& p, const TransitionGroupoid& g,
                                        const std::vector<InseparablePair>& pairs);

/// Chain-inseparability classes of the vertex candidates.
class ChainPartition {
 public:
  ChainPartition() = default;
  ChainPartition(std::vector<PointRef> candidates, const std::vector<InseparablePair>& pairs);

  const std::vector<PointRef>& candidates() const { return candidates_; }
  /// Member lists, each sorted; classes ordered by least member.
  const std::vector<std::vector<PointRef>>& classes() const { return classes_; }

  /// Index into classes() for a canonical candidate; -1 if not a candidate.
  int class_of(const PointRef& canonical_point) const;

 private:
  std::vector<PointRef> candidates_;
  std::vector<std::vector<PointRef>> classes_;
};

ChainPartition chain_partition(const Presentation& p, const TransitionGroupoid& g,
                               const std::vector<InseparablePair>& pairs);

struct GraphLikeReport {
  bool graph_like = true;
  std::size_t candidate_points = 0;
  std::vector<std::pair<std::string, std::size_t>> per_chart_counts;
  std::string note;
};

/// Confirms the graph-like conditions. Always passes for accepted inputs:
/// a tame finite presentation has finitely many candidate parameters per
/// chart and trivially countable bases; the report documents the counts.
GraphLikeReport check_graph_like(const Presentation& p, const TransitionGroupoid& g,
                                 const ChainPartition& partition);

/// The shared pipeline state every later stage consumes.
struct Analysis {
  Presentation presentation;  // symmetrized
  TransitionGroupoid groupoid;
  std::vector<InseparablePair> pairs;
  ChainPartition partition;
};

/// symmetrize + saturate + pairs + partition. Propagates
/// Error("not_tame")/Error("not_injective").
Analysis analyze(const Presentation& p, int depth_limit = 16);

}  // namespace nhm

#endif
