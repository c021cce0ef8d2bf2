#include "nhm/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nhm/error.hpp"

namespace nhm {

namespace {

IntervalSet interior_set(const Interval& extent) {
  return IntervalSet(extent.interior());
}

}  // namespace

Presentation::Presentation(std::vector<Chart> charts, std::vector<GluingGenerator> gluings)
    : charts_(std::move(charts)), gluings_(std::move(gluings)) {
  std::set<std::string> ids;
  for (const Chart& c : charts_) {
    if (!ids.insert(c.id).second) throw parse_error("duplicate chart id '" + c.id + "'");
    if (c.extent.is_singleton())
      throw parse_error("chart '" + c.id + "' has a singleton extent");
    // Interval::make already rejects closed infinite ends.
  }
  for (const GluingGenerator& g : gluings_) {
    if (!ids.count(g.from)) throw parse_error("unknown chart id '" + g.from + "'");
    if (!ids.count(g.to)) throw parse_error("unknown chart id '" + g.to + "'");
    if (!g.map.domain().all_open()) throw parse_error("gluing domain must be open");
    IntervalSet from_int = interior_set(chart(g.from).extent);
    IntervalSet to_int = interior_set(chart(g.to).extent);
    if (g.map.domain().intersect(from_int) != g.map.domain())
      throw parse_error("gluing domain must lie inside the interior of chart '" +
                        g.from + "'");
    if (g.map.image().intersect(to_int) != g.map.image())
      throw parse_error("gluing image must lie inside the interior of chart '" +
                        g.to + "'");
  }
}

const Chart& Presentation::chart(const std::string& id) const {
  for (const Chart& c : charts_)
    if (c.id == id) return c;
  throw internal_error("unknown chart id '" + id + "'");
}

bool Presentation::in_extent(const PointRef& p) const {
  return chart(p.chart).extent.contains(p.param);
}

Presentation Presentation::symmetrized() const {
  std::vector<GluingGenerator> out = gluings_;
  auto present = [&out](const GluingGenerator& g) {
    return std::find(out.begin(), out.end(), g) != out.end();
  };
  for (const GluingGenerator& g : gluings_) {
    GluingGenerator inv{g.to, g.from, g.map.inverse()};
    if (!present(inv)) out.push_back(inv);
  }
  return Presentation(charts_, std::move(out));
}

std::vector<std::vector<std::string>> Presentation::components() const {
  std::map<std::string, std::string> parent;
  for (const Chart& c : charts_) parent[c.id] = c.id;
  auto find = [&parent](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const GluingGenerator& g : gluings_) parent[find(g.from)] = find(g.to);

  std::map<std::string, std::vector<std::string>> groups;
  for (const Chart& c : charts_) groups[find(c.id)].push_back(c.id);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nhm
