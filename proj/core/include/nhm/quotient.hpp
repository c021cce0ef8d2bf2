#ifndef NHM_QUOTIENT_HPP
#define NHM_QUOTIENT_HPP

#include <string>
#include <vector>

#include "nhm/piecewise.hpp"
#include "nhm/separation.hpp"

namespace nhm {

/// A maximal open sub-interval of a chart containing no vertex-candidate
/// parameter: the chart-local shard of one edge.
struct Piece {
  std::string chart;
  Interval span = Interval::whole();  // open

  std::strong_ordering operator<=>(const Piece& o) const {
    if (auto c = chart <=> o.chart; c != 0) return c;
    if (auto c = span.lb() <=> o.span.lb(); c != 0) return c;
    return span.ub() <=> o.span.ub();
  }
  bool operator==(const Piece& o) const = default;

  std::string str() const { return chart + span.str(); }
};

/// One end of an edge: attached to a vertex or open. Attached ends carry the
/// limit set, whose points all lie in the attached class.
struct EdgeEnd {
  std::string vertex;                  // empty = OPEN
  std::vector<PointRef> limit_points;  // canonical, sorted; empty iff OPEN

  bool open() const { return vertex.empty(); }
  bool operator==(const EdgeEnd& o) const = default;
};

struct QuotientVertex {
  std::string id;
  std::vector<PointRef> members;  // one chain-inseparability class, sorted

  bool operator==(const QuotientVertex& o) const = default;
};

struct QuotientEdge {
  std::string id;
  std::vector<Piece> pieces;  // sorted member set
  std::vector<Piece> chain;   // traversal order from end0 to end1
  EdgeEnd end0, end1;         // end0 at the lower end of the least piece

  bool operator==(const QuotientEdge& o) const = default;
};

/// One connected component of the quotient: an open topological graph, or a
/// circle (which carries no canonical CW structure and is reported as such).
struct QuotientComponent {
  std::vector<std::string> charts;  // sorted
  bool circle = false;
  std::vector<QuotientVertex> vertices;
  std::vector<QuotientEdge> edges;  // empty when circle

  bool operator==(const QuotientComponent& o) const = default;
};

/// The minimal Hausdorff quotient X = A/~ as an open 1-D CW complex,
/// per connected component.
struct QuotientGraph {
  std::vector<QuotientComponent> components;

  const QuotientVertex& vertex(const std::string& id) const;
  bool operator==(const QuotientGraph& o) const = default;
};

/// Per chart, the open spans between sorted vertex parameters and chart
/// ends. Sorted; closed chart ends are vertex parameters and excluded.
std::vector<Piece> split_pieces(const Analysis& a);

/// Pieces grouped into edges (sorted groups); attachment data comes from
/// build_quotient.
std::vector<std::vector<Piece>> trace_edges(const Analysis& a);

QuotientGraph build_quotient(const Analysis& a);
QuotientGraph build_quotient(const Presentation& p, int depth_limit = 16);

struct AtlasReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Re-checks the CW-atlas conditions on a built (or hand-made) graph:
/// vertex/edge-interior disjointness, per-chart piece disjointness, piece
/// coverage, end attachment consistency, vertex discreteness.
AtlasReport verify_atlas(const QuotientGraph& qg, const Analysis& a);

enum class SegmentClass { ClosedInterval, HalfOpen, OpenInterval, Circle, NotApplicable };

std::string segment_class_str(SegmentClass c);

/// Classification of a branch-point-free component per the Hausdorff
/// 1-manifold classification; NotApplicable when branch points exist.
SegmentClass classify_hausdorff(const QuotientComponent& component);

/// The unique factorization f-hat of a continuous test map through the
/// quotient: class-constant vertex values plus the per-chart data the edges
/// carry. Throws Error("not_continuous") with a witness point when the test
/// map disagrees on a glued domain.
struct FactoredMap {
  std::vector<std::pair<std::string, Rational>> vertex_values;  // by vertex id
  TestMap chart_functions;
};

FactoredMap universal_factor(const Analysis& a, const QuotientGraph& qg,
                             const TestMap& testmap);

/// True iff the two points have the same image in the quotient (same vertex,
/// or same edge and same manifold point).
bool same_quotient_image(const QuotientGraph& qg, const Analysis& a, const PointRef& x,
                         const PointRef& y);

}  // namespace nhm

#endif
