#include "nhm/quotient.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "nhm/error.hpp"

namespace nhm {

namespace {

using CutTable = std::map<std::string, std::vector<Rational>>;

/// Vertex-candidate parameters per chart: every orbit representative of
/// every candidate point.
CutTable cut_params(const Analysis& a) {
  CutTable cuts;
  for (const Chart& c : a.presentation.charts()) cuts[c.id];
  for (const PointRef& cand : a.partition.candidates())
    for (const PointRef& rep : a.groupoid.orbit(cand)) cuts.at(rep.chart).push_back(rep.param);
  for (auto& [id, params] : cuts) {
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
  }
  return cuts;
}

std::vector<Piece> pieces_from_cuts(const Presentation& p, const CutTable& cuts) {
  std::vector<Piece> out;
  for (const Chart& c : p.charts()) {
    ExtRat lo = c.extent.lo();
    for (const Rational& cut : cuts.at(c.id)) {
      if (lo < ExtRat(cut)) out.push_back({c.id, Interval::open(lo, cut)});
      lo = ExtRat(cut);
    }
    if (lo < c.extent.hi()) out.push_back({c.id, Interval::open(lo, c.extent.hi())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational open_interval_sample(const Interval& iv) {
  if (iv.lo().is_finite() && iv.hi().is_finite())
    return (iv.lo().value() + iv.hi().value()) / 2;
  if (iv.lo().is_finite()) return iv.lo().value() + 1;
  if (iv.hi().is_finite()) return iv.hi().value() - 1;
  return 0;
}

struct Landing {
  PointRef point;      // raw representative in the target chart
  PointRef canonical;  // M-point name
  int dir;             // travel direction in the target chart
};

class Builder {
 public:
  explicit Builder(const Analysis& a)
      : a_(a), cuts_(cut_params(a)), pieces_(pieces_from_cuts(a.presentation, cuts_)) {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      by_chart_[pieces_[i].chart].push_back(i);
    parent_.resize(pieces_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
    unify_glued_pieces();
  }

  QuotientGraph build();

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::optional<std::size_t> piece_at(const std::string& chart, const Rational& param) const {
    auto it = by_chart_.find(chart);
    if (it == by_chart_.end()) return std::nullopt;
    for (std::size_t i : it->second)
      if (pieces_[i].span.contains(param)) return i;
    return std::nullopt;
  }

  bool is_cut(const std::string& chart, const ExtRat& c) const {
    if (!c.is_finite()) return false;
    const auto& params = cuts_.at(chart);
    return std::binary_search(params.begin(), params.end(), c.value());
  }

  void unify_glued_pieces() {
    for (const auto& [pair, maps] : a_.groupoid.maps())
      for (const PartialAffine& m : maps)
        for (const Interval& component : m.domain().parts())
          for (std::size_t i : by_chart_[pair.first]) {
            IntervalSet overlap =
                IntervalSet(pieces_[i].span).intersect(IntervalSet(component));
            for (const Interval& part : overlap.parts()) {
              Rational w = open_interval_sample(part);
              auto target = piece_at(pair.second, m.apply(w));
              if (!target)
                throw internal_error("glued image of a piece interior hit a vertex parameter");
              parent_[find(i)] = find(*target);
            }
          }
  }

  std::vector<Landing> landings(const std::string& chart, const ExtRat& c, int dir) const {
    std::vector<Landing> out;
    for (const auto& [pair, maps] : a_.groupoid.maps()) {
      if (pair.first != chart) continue;
      for (const PartialAffine& m : maps)
        for (const Interval& component : m.domain().parts()) {
          const ExtRat& end = dir > 0 ? component.hi() : component.lo();
          if (end != c) continue;
          ExtRat s = m.apply_ext(c);
          if (!s.is_finite()) continue;
          PointRef q{pair.second, s.value()};
          if (!a_.presentation.in_extent(q)) continue;
          out.push_back({q, a_.groupoid.canonical(q), m.slope() > 0 ? dir : -dir});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Landing& x, const Landing& y) { return x.point < y.point; });
    return out;
  }

  struct WalkEnd {
    enum Kind { Vertex, Open, Circle } kind = Open;
    int cls = -1;
    std::vector<PointRef> limits;
    std::vector<Piece> trail;  // pieces entered after the start, in order
  };

  WalkEnd walk(std::size_t start, int dir) const {
    WalkEnd end;
    std::set<std::pair<std::size_t, int>> visited{{start, dir}};
    std::size_t cur = start;
    for (;;) {
      const Piece& piece = pieces_[cur];
      ExtRat c = dir > 0 ? piece.span.hi() : piece.span.lo();

      if (is_cut(piece.chart, c)) {
        PointRef vp{piece.chart, c.value()};
        PointRef canon = a_.groupoid.canonical(vp);
        end.kind = WalkEnd::Vertex;
        end.cls = a_.partition.class_of(canon);
        if (end.cls < 0) throw internal_error("vertex parameter is not a candidate");
        std::set<PointRef> limits{canon};
        for (const Landing& l : landings(piece.chart, c, dir)) {
          if (a_.partition.class_of(l.canonical) != end.cls)
            throw internal_error("limit points of one edge end fall in different classes");
          limits.insert(l.canonical);
        }
        end.limits.assign(limits.begin(), limits.end());
        return end;
      }

      // Open chart end: continue through a landing point, attach, or stop.
      std::vector<Landing> land = landings(piece.chart, c, dir);
      if (land.empty()) {
        end.kind = WalkEnd::Open;
        return end;
      }
      std::set<PointRef> canonicals;
      for (const Landing& l : land) canonicals.insert(l.canonical);
      int cls = a_.partition.class_of(*canonicals.begin());
      if (cls >= 0) {
        end.kind = WalkEnd::Vertex;
        end.cls = cls;
        for (const PointRef& cp : canonicals)
          if (a_.partition.class_of(cp) != cls)
            throw internal_error("limit points of one edge end fall in different classes");
        end.limits.assign(canonicals.begin(), canonicals.end());
        return end;
      }
      if (canonicals.size() > 1)
        throw internal_error("distinct non-candidate limit points at one edge end");

      const Landing& next = land.front();
      auto target = piece_at(next.point.chart, next.point.param);
      if (!target) throw internal_error("edge continuation landed on a vertex parameter");
      if (!visited.insert({*target, next.dir}).second) {
        end.kind = WalkEnd::Circle;
        return end;
      }
      cur = *target;
      dir = next.dir;
      end.trail.push_back(pieces_[cur]);
    }
  }

  const Analysis& a_;
  CutTable cuts_;
  std::vector<Piece> pieces_;
  std::map<std::string, std::vector<std::size_t>> by_chart_;
  std::vector<std::size_t> parent_;
};

QuotientGraph Builder::build() {
  // Edge groups: union-find classes, each sorted, ordered by least piece.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pieces_.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> edge_groups;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    edge_groups.push_back(std::move(members));
  }
  std::sort(edge_groups.begin(), edge_groups.end(),
            [this](const auto& x, const auto& y) { return pieces_[x[0]] < pieces_[y[0]]; });

  // Vertices: one per partition class, ordered by least member.
  std::vector<QuotientVertex> vertices;
  for (std::size_t i = 0; i < a_.partition.classes().size(); ++i)
    vertices.push_back({"v" + std::to_string(i + 1), a_.partition.classes()[i]});

  std::set<std::string> circle_charts;
  std::vector<QuotientEdge> edges;
  int edge_no = 0;
  for (const auto& group : edge_groups) {
    std::size_t start = group[0];
    WalkEnd left = walk(start, -1);
    WalkEnd right = walk(start, +1);
    if (left.kind == WalkEnd::Circle || right.kind == WalkEnd::Circle) {
      circle_charts.insert(pieces_[start].chart);
      continue;
    }
    QuotientEdge e;
    e.id = "e" + std::to_string(++edge_no);
    for (std::size_t i : group) e.pieces.push_back(pieces_[i]);
    e.chain.assign(left.trail.rbegin(), left.trail.rend());
    e.chain.push_back(pieces_[start]);
    e.chain.insert(e.chain.end(), right.trail.begin(), right.trail.end());
    auto to_end = [&vertices](const WalkEnd& w) {
      EdgeEnd end;
      if (w.kind == WalkEnd::Vertex) {
        end.vertex = vertices[w.cls].id;
        end.limit_points = w.limits;
      }
      return end;
    };
    e.end0 = to_end(left);
    e.end1 = to_end(right);
    edges.push_back(std::move(e));
  }

  QuotientGraph qg;
  for (const auto& chart_group : a_.presentation.components()) {
    QuotientComponent comp;
    comp.charts = chart_group;
    auto in_comp = [&chart_group](const std::string& chart) {
      return std::binary_search(chart_group.begin(), chart_group.end(), chart);
    };
    comp.circle = std::any_of(circle_charts.begin(), circle_charts.end(), in_comp);
    for (const QuotientVertex& v : vertices)
      if (in_comp(v.members.front().chart)) comp.vertices.push_back(v);
    for (const QuotientEdge& e : edges)
      if (in_comp(e.pieces.front().chart)) comp.edges.push_back(e);
    if (comp.circle && (!comp.vertices.empty() || !comp.edges.empty()))
      throw internal_error("circle component carries vertices or traced edges");
    qg.components.push_back(std::move(comp));
  }
  return qg;
}

}  // namespace

const QuotientVertex& QuotientGraph::vertex(const std::string& id) const {
  for (const QuotientComponent& comp : components)
    for (const QuotientVertex& v : comp.vertices)
      if (v.id == id) return v;
  throw internal_error("unknown vertex id '" + id + "'");
}

std::vector<Piece> split_pieces(const Analysis& a) {
  return pieces_from_cuts(a.presentation, cut_params(a));
}

std::vector<std::vector<Piece>> trace_edges(const Analysis& a) {
  QuotientGraph qg = build_quotient(a);
  std::vector<std::vector<Piece>> out;
  for (const QuotientComponent& comp : qg.components)
    for (const QuotientEdge& e : comp.edges) out.push_back(e.pieces);
  std::sort(out.begin(), out.end());
  return out;
}

QuotientGraph build_quotient(const Analysis& a) { return Builder(a).build(); }

QuotientGraph build_quotient(const Presentation& p, int depth_limit) {
  return build_quotient(analyze(p, depth_limit));
}

AtlasReport verify_atlas(const QuotientGraph& qg, const Analysis& a) {
  AtlasReport report;
  auto violation = [&report](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  std::vector<Piece> all_edge_pieces;
  std::set<PointRef> seen_members;
  for (const QuotientComponent& comp : qg.components) {
    for (const QuotientEdge& e : comp.edges)
      all_edge_pieces.insert(all_edge_pieces.end(), e.pieces.begin(), e.pieces.end());
    for (const QuotientVertex& v : comp.vertices)
      for (const PointRef& m : v.members)
        if (!seen_members.insert(m).second)
          violation("vertex member " + m.str() + " appears in two vertices");
  }

  // (1) vertex images and edge interiors are disjoint.
  for (const QuotientComponent& comp : qg.components)
    for (const QuotientVertex& v : comp.vertices)
      for (const PointRef& m : v.members) {
        if (a.partition.class_of(a.groupoid.canonical(m)) < 0)
          violation("vertex member " + m.str() + " is not a vertex candidate");
        for (const PointRef& rep : a.groupoid.orbit(m))
          for (const Piece& piece : all_edge_pieces)
            if (piece.chart == rep.chart && piece.span.contains(rep.param))
              violation("vertex member " + m.str() + " lies inside edge piece " +
                        piece.str());
      }

  // (2) edge interiors are injective: per chart, piece spans are disjoint.
  std::map<std::string, std::vector<Interval>> spans;
  for (const Piece& piece : all_edge_pieces) spans[piece.chart].push_back(piece.span);
  for (const auto& [chart, list] : spans)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (!IntervalSet(list[i]).intersect(IntervalSet(list[j])).empty())
          violation("overlapping edge pieces in chart '" + chart + "'");

  // Pieces of non-circle components tile chart-minus-candidates exactly once.
  std::set<std::string> circle_charts;
  for (const QuotientComponent& comp : qg.components)
    if (comp.circle) circle_charts.insert(comp.charts.begin(), comp.charts.end());
  std::vector<Piece> expected;
  for (const Piece& piece : split_pieces(a))
    if (!circle_charts.count(piece.chart)) expected.push_back(piece);
  std::vector<Piece> actual = all_edge_pieces;
  std::sort(actual.begin(), actual.end());
  if (actual != expected) violation("edge pieces do not tile the chart interiors exactly once");

  // (3) every vertex is hit by an edge end.
  for (const QuotientComponent& comp : qg.components)
    for (const QuotientVertex& v : comp.vertices) {
      bool hit = false;
      for (const QuotientEdge& e : comp.edges)
        hit = hit || e.end0.vertex == v.id || e.end1.vertex == v.id;
      if (!hit) violation("vertex " + v.id + " has no incident edge end");
    }

  // (4)+(5) finite vertex set is immediate; end attachments are consistent:
  // limit points of an attached end are members of the attached class.
  for (const QuotientComponent& comp : qg.components)
    for (const QuotientEdge& e : comp.edges)
      for (const EdgeEnd* end : {&e.end0, &e.end1}) {
        if (end->open()) {
          if (!end->limit_points.empty())
            violation("open end of " + e.id + " carries limit points");
          continue;
        }
        if (end->limit_points.empty())
          violation("attached end of " + e.id + " has no limit points");
        const QuotientVertex& v = qg.vertex(end->vertex);
        for (const PointRef& lp : end->limit_points)
          if (!std::binary_search(v.members.begin(), v.members.end(), lp))
            violation("limit point " + lp.str() + " of " + e.id +
                      " is not a member of vertex " + v.id);
      }

  return report;
}

std::string segment_class_str(SegmentClass c) {
  switch (c) {
    case SegmentClass::ClosedInterval: return "closed-interval";
    case SegmentClass::HalfOpen: return "half-open-interval";
    case SegmentClass::OpenInterval: return "open-interval";
    case SegmentClass::Circle: return "circle";
    case SegmentClass::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

SegmentClass classify_hausdorff(const QuotientComponent& component) {
  if (component.circle) return SegmentClass::Circle;
  for (const QuotientVertex& v : component.vertices)
    if (v.members.size() > 1) return SegmentClass::NotApplicable;  // branch points
  if (component.edges.size() != 1) return SegmentClass::NotApplicable;
  switch (component.vertices.size()) {
    case 2: return SegmentClass::ClosedInterval;
    case 1: return SegmentClass::HalfOpen;
    case 0: return SegmentClass::OpenInterval;
    default: return SegmentClass::NotApplicable;
  }
}

namespace {

Rational eval_testmap(const TestMap& tm, const PointRef& p) {
  auto it = tm.find(p.chart);
  if (it == tm.end()) throw parse_error("test map missing chart '" + p.chart + "'");
  return it->second.eval(p.param);
}

/// Checks f_from == f_to ∘ m on one domain component, exactly: probes twice
/// inside every cell on which both sides are affine.
void check_component_continuity(const std::string& from, const std::string& to,
                                const PartialAffine& m, const Interval& component,
                                const PiecewiseAffine& f_from, const PiecewiseAffine& f_to) {
  std::set<Rational> division;
  auto add_if_inside = [&](const Rational& x) {
    if (component.contains(x)) division.insert(x);
  };
  for (const Rational& bp : f_from.breakpoints()) add_if_inside(bp);
  for (const Rational& bp : f_to.breakpoints()) add_if_inside((bp - m.offset()) / m.slope());

  std::vector<Rational> probes(division.begin(), division.end());
  ExtRat prev = component.lo();
  auto add_cell_probes = [&probes](const ExtRat& lo, const ExtRat& hi) {
    if (lo.is_finite() && hi.is_finite()) {
      Rational span = hi.value() - lo.value();
      probes.push_back(lo.value() + span / 3);
      probes.push_back(lo.value() + span * 2 / 3);
    } else if (lo.is_finite()) {
      probes.push_back(lo.value() + 1);
      probes.push_back(lo.value() + 2);
    } else if (hi.is_finite()) {
      probes.push_back(hi.value() - 2);
      probes.push_back(hi.value() - 1);
    } else {
      probes.push_back(-1);
      probes.push_back(1);
    }
  };
  for (const Rational& d : division) {
    add_cell_probes(prev, ExtRat(d));
    prev = ExtRat(d);
  }
  add_cell_probes(prev, component.hi());

  for (const Rational& x : probes) {
    Rational lhs = f_from.eval(x);
    Rational rhs = f_to.eval(m.apply(x));
    if (lhs != rhs)
      throw Error("not_continuous",
                  "test map disagrees on glued point (" + from + "," + rational_str(x) +
                      "): " + rational_str(lhs) + " vs " + rational_str(rhs) + " via " +
                      to);
  }
}

}  // namespace

FactoredMap universal_factor(const Analysis& a, const QuotientGraph& qg,
                             const TestMap& testmap) {
  for (const Chart& c : a.presentation.charts())
    if (!testmap.count(c.id)) throw parse_error("test map missing chart '" + c.id + "'");

  for (const GluingGenerator& g : a.presentation.gluings())
    for (const Interval& component : g.map.domain().parts())
      check_component_continuity(g.from, g.to, g.map, component, testmap.at(g.from),
                                 testmap.at(g.to));

  FactoredMap out;
  out.chart_functions = testmap;
  for (const QuotientComponent& comp : qg.components)
    for (const QuotientVertex& v : comp.vertices) {
      Rational value = eval_testmap(testmap, v.members.front());
      for (const PointRef& m : v.members)
        if (eval_testmap(testmap, m) != value)
          throw internal_error("vertex values not class-constant at " + m.str());
      out.vertex_values.emplace_back(v.id, value);
    }
  return out;
}

namespace {

// kind: 0 vertex, 1 edge, 2 circle component
struct Location {
  int kind = -1;
  std::string id;
  bool operator==(const Location&) const = default;
};

Location locate(const QuotientGraph& qg, const Analysis& a, const PointRef& x) {
  PointRef cx = a.groupoid.canonical(x);
  for (const QuotientComponent& comp : qg.components) {
    for (const QuotientVertex& v : comp.vertices)
      if (std::binary_search(v.members.begin(), v.members.end(), cx)) return {0, v.id};
    for (const QuotientEdge& e : comp.edges)
      for (const Piece& piece : e.pieces)
        if (piece.chart == cx.chart && piece.span.contains(cx.param)) return {1, e.id};
    if (comp.circle &&
        std::binary_search(comp.charts.begin(), comp.charts.end(), cx.chart))
      return {2, comp.charts.front()};
  }
  throw internal_error("point " + x.str() + " not located in the quotient");
}

}  // namespace

bool same_quotient_image(const QuotientGraph& qg, const Analysis& a, const PointRef& x,
                         const PointRef& y) {
  Location lx = locate(qg, a, x);
  Location ly = locate(qg, a, y);
  if (!(lx == ly)) return false;
  if (lx.kind == 0) return true;
  return a.groupoid.canonical(x) == a.groupoid.canonical(y);
}

}  // namespace nhm
