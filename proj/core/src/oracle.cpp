#include "nhm/oracle.hpp"

#include <map>

#include "nhm/error.hpp"

namespace nhm {

std::string OracleVerdict::str() const {
  return (separated ? "SEPARATED(" : "UNRESOLVED(") + std::to_string(k) + ")";
}

namespace {

using Neighbourhood = std::map<std::string, IntervalSet>;

Neighbourhood basis_neighbourhood(const Presentation& p, const TransitionGroupoid& g,
                                  const PointRef& x, const Rational& eps) {
  Interval ball = Interval::open(Rational(x.param - eps), Rational(x.param + eps));
  Neighbourhood nb;
  nb[x.chart] = IntervalSet(ball).intersect(IntervalSet(p.chart(x.chart).extent));
  // One pass suffices: composite transitions are present as single maps.
  for (const auto& [pair, maps] : g.maps()) {
    auto it = nb.find(pair.first);
    if (it == nb.end() || pair.first != x.chart) continue;
    for (const PartialAffine& m : maps)
      nb[pair.second] = nb[pair.second].unite(m.apply_set(it->second));
  }
  return nb;
}

bool disjoint(const Neighbourhood& u, const Neighbourhood& v) {
  for (const auto& [chart, set] : u) {
    auto it = v.find(chart);
    if (it != v.end() && !set.intersect(it->second).empty()) return false;
  }
  return true;
}

}  // namespace

OracleVerdict insep_semidecide(const Presentation& p, const TransitionGroupoid& g,
                               const PointRef& a, const PointRef& b, int max_depth) {
  if (!p.in_extent(a)) throw parse_error("point " + a.str() + " outside chart extent");
  if (!p.in_extent(b)) throw parse_error("point " + b.str() + " outside chart extent");
  if (g.same_point(a, b))
    throw Error("same_point",
                "oracle requires distinct points, got " + a.str() + " = " + b.str());

  Rational eps = 1;
  for (int k = 1; k <= max_depth; ++k) {
    eps /= 2;
    Neighbourhood na = basis_neighbourhood(p, g, a, eps);
    Neighbourhood nb = basis_neighbourhood(p, g, b, eps);
    if (disjoint(na, nb)) return {true, k};
  }
  return {false, max_depth};
}

}  // namespace nhm
