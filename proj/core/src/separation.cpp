#include "nhm/separation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nhm/error.hpp"

namespace nhm {

namespace {

/// Emits the pair at one finite endpoint of one domain component, if any.
void emit_pair(const Presentation& p, const TransitionGroupoid& g, const std::string& from,
               const std::string& to, const PartialAffine& m, const Interval& component,
               bool upper, std::vector<InseparablePair>& out) {
  const ExtRat& end = upper ? component.hi() : component.lo();
  if (!end.is_finite()) return;
  PointRef a{from, end.value()};
  if (!p.in_extent(a)) return;
  PointRef b{to, m.apply(end.value())};
  if (!p.in_extent(b)) return;  // extension escapes past an open chart end
  if (g.same_point(a, b)) return;
  PointRef ca = g.canonical(a), cb = g.canonical(b);
  InseparablePair pair{std::min(ca, cb), std::max(ca, cb),
                       {from, to, m.slope(), m.offset(), component, upper}};
  out.push_back(pair);
}

}  // namespace

std::vector<InseparablePair> inseparable_pairs(const Presentation& p,
                                               const TransitionGroupoid& g) {
  std::vector<InseparablePair> out;
  for (const auto& [pair, maps] : g.maps())
    for (const PartialAffine& m : maps)
      for (const Interval& component : m.domain().parts()) {
        emit_pair(p, g, pair.first, pair.second, m, component, false, out);
        emit_pair(p, g, pair.first, pair.second, m, component, true, out);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PointRef> hausdorff_closure(const Presentation& p, const TransitionGroupoid& g,
                                        const PointRef& x) {
  if (!p.in_extent(x)) throw parse_error("point " + x.str() + " outside chart extent");
  PointRef cx = g.canonical(x);
  std::set<PointRef> closure{cx};
  for (const PointRef& rep : g.orbit(x)) {
    for (const auto& [pair, maps] : g.maps()) {
      if (pair.first != rep.chart) continue;
      for (const PartialAffine& m : maps)
        for (const Interval& component : m.domain().parts())
          for (bool upper : {false, true}) {
            const ExtRat& end = upper ? component.hi() : component.lo();
            if (!end.is_finite() || end.value() != rep.param) continue;
            PointRef partner{pair.second, m.apply(rep.param)};
            if (p.in_extent(partner) && !g.same_point(rep, partner))
              closure.insert(g.canonical(partner));
          }
    }
  }
  return {closure.begin(), closure.end()};
}

std::vector<PointRef> vertex_candidates(const Presentation& p, const TransitionGroupoid& g,
                                        const std::vector<InseparablePair>& pairs) {
  std::set<PointRef> out;
  for (const InseparablePair& pr : pairs) {
    out.insert(pr.a);
    out.insert(pr.b);
  }
  for (const Chart& c : p.charts()) {
    if (c.extent.lo_closed()) out.insert(g.canonical({c.id, c.extent.lo().value()}));
    if (c.extent.hi_closed()) out.insert(g.canonical({c.id, c.extent.hi().value()}));
  }
  return {out.begin(), out.end()};
}

ChainPartition::ChainPartition(std::vector<PointRef> candidates,
                               const std::vector<InseparablePair>& pairs)
    : candidates_(std::move(candidates)) {
  std::map<PointRef, std::size_t> index;
  for (std::size_t i = 0; i < candidates_.size(); ++i) index[candidates_[i]] = i;

  std::vector<std::size_t> parent(candidates_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const InseparablePair& pr : pairs) {
    auto ia = index.find(pr.a), ib = index.find(pr.b);
    if (ia == index.end() || ib == index.end())
      throw internal_error("inseparable pair member missing from candidates");
    parent[find(ia->second)] = find(ib->second);
  }

  std::map<std::size_t, std::vector<PointRef>> groups;
  for (std::size_t i = 0; i < candidates_.size(); ++i)
    groups[find(i)].push_back(candidates_[i]);
  for (auto& [root, members] : groups) classes_.push_back(std::move(members));
  std::sort(classes_.begin(), classes_.end());
}

int ChainPartition::class_of(const PointRef& canonical_point) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (std::binary_search(classes_[i].begin(), classes_[i].end(), canonical_point))
      return static_cast<int>(i);
  return -1;
}

ChainPartition chain_partition(const Presentation& p, const TransitionGroupoid& g,
                               const std::vector<InseparablePair>& pairs) {
  return ChainPartition(vertex_candidates(p, g, pairs), pairs);
}

Analysis analyze(const Presentation& p, int depth_limit) {
  Analysis a;
  a.presentation = p.symmetrized();
  a.groupoid = saturate(a.presentation, depth_limit);
  a.pairs = inseparable_pairs(a.presentation, a.groupoid);
  a.partition = chain_partition(a.presentation, a.groupoid, a.pairs);
  return a;
}

GraphLikeReport check_graph_like(const Presentation& p, const TransitionGroupoid& g,
                                 const ChainPartition& partition) {
  GraphLikeReport report;
  std::map<std::string, std::set<Rational, bool (*)(const Rational&, const Rational&)>> per_chart;
  auto less = [](const Rational& a, const Rational& b) { return a < b; };
  for (const Chart& c : p.charts()) per_chart.emplace(c.id, less);
  for (const PointRef& cand : partition.candidates())
    for (const PointRef& rep : g.orbit(cand)) per_chart.at(rep.chart).insert(rep.param);
  for (const auto& [id, params] : per_chart)
    report.per_chart_counts.emplace_back(id, params.size());
  report.candidate_points = partition.candidates().size();
  report.note =
      "finite tame presentation: candidate parameter sets are finite per chart, "
      "hence locally finite; components of the edge part are intervals with "
      "countable bases";
  return report;
}

}  // namespace nhm
