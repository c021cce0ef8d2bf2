#include "nhm/foliation.hpp"

#include <algorithm>
#include <map>

#include "nhm/error.hpp"

namespace nhm {

void validate(const ObstacleSet& q) {
  for (const VSegment& s : q.vsegments)
    if (s.yhi < s.ylo) throw parse_error("vertical segment with ylo > yhi");
}

namespace {

std::vector<Rational> obstacle_columns(const ObstacleSet& q) {
  std::vector<Rational> xs;
  for (const auto& [x, y] : q.points) xs.push_back(x);
  for (const VSegment& s : q.vsegments) xs.push_back(s.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// Closed y-shadow of all obstacles at one abscissa.
IntervalSet column_shadow(const ObstacleSet& q, const Rational& x) {
  std::vector<Interval> parts;
  for (const auto& [px, py] : q.points)
    if (px == x) parts.push_back(Interval::singleton(py));
  for (const VSegment& s : q.vsegments)
    if (s.x == x)
      parts.push_back(Interval::make(s.ylo, s.yhi, s.ylo.is_finite(), s.yhi.is_finite()));
  return IntervalSet::of(std::move(parts));
}

}  // namespace

std::vector<Rational> sample_columns(const ObstacleSet& q) {
  std::vector<Rational> xs = obstacle_columns(q);
  if (xs.empty()) return {Rational(0)};
  std::vector<Rational> samples;
  samples.push_back(xs.front() - 1);
  for (std::size_t i = 1; i < xs.size(); ++i)
    samples.push_back((xs[i - 1] + xs[i]) / 2);
  samples.push_back(xs.back() + 1);
  return samples;
}

Presentation compile(const ObstacleSet& q) {
  validate(q);
  std::vector<Rational> xs = obstacle_columns(q);

  std::vector<Chart> charts;
  for (std::size_t i = 0; i <= xs.size(); ++i)
    charts.push_back({"c" + std::to_string(i + 1), Interval::whole()});

  std::vector<GluingGenerator> gluings;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    IntervalSet domain =
        IntervalSet::complement_within(Interval::whole(), column_shadow(q, xs[i]));
    if (domain.empty()) continue;
    gluings.push_back({charts[i].id, charts[i + 1].id, PartialAffine::identity(domain)});
  }
  return Presentation(std::move(charts), std::move(gluings));
}

}  // namespace nhm
