#include "nhm/groupoid.hpp"

#include <algorithm>

#include "nhm/error.hpp"

namespace nhm {

namespace {

using MapTable = TransitionGroupoid::MapTable;

/// Disjoint-domain normal form: merge maps with equal coefficients by
/// unioning domains, drop empty maps and identity self-maps (implicit),
/// reject disagreeing overlaps and non-identity self-maps.
MapTable normalize(const MapTable& raw) {
  MapTable out;
  for (const auto& [pair, maps] : raw) {
    std::vector<PartialAffine> merged;
    for (const PartialAffine& m : maps) {
      if (m.is_empty()) continue;
      if (pair.first == pair.second) {
        if (!m.is_identity())
          throw Error("not_injective",
                      "gluings identify distinct points of chart '" + pair.first +
                          "' via " + m.str());
        continue;  // identity restrictions are stored implicitly
      }
      auto same = std::find_if(merged.begin(), merged.end(), [&m](const PartialAffine& o) {
        return o.slope() == m.slope() && o.offset() == m.offset();
      });
      if (same != merged.end())
        *same = PartialAffine(m.slope(), m.offset(), same->domain().unite(m.domain()));
      else
        merged.push_back(m);
    }
    for (std::size_t i = 0; i < merged.size(); ++i)
      for (std::size_t j = i + 1; j < merged.size(); ++j)
        if (!merged[i].domain().intersect(merged[j].domain()).empty())
          throw Error("not_injective",
                      "transitions " + pair.first + "->" + pair.second +
                          " disagree on overlapping domains: " + merged[i].str() +
                          " vs " + merged[j].str());
    if (merged.empty()) continue;
    std::sort(merged.begin(), merged.end());
    out[pair] = std::move(merged);
  }
  return out;
}

}  // namespace

const std::vector<PartialAffine>& TransitionGroupoid::maps_between(
    const std::string& from, const std::string& to) const {
  static const std::vector<PartialAffine> kEmpty;
  auto it = maps_.find({from, to});
  return it == maps_.end() ? kEmpty : it->second;
}

std::size_t TransitionGroupoid::map_count() const {
  std::size_t n = 0;
  for (const auto& [pair, maps] : maps_) n += maps.size();
  return n;
}

std::vector<PointRef> TransitionGroupoid::orbit(const PointRef& p) const {
  std::vector<PointRef> out{p};
  for (const auto& [pair, maps] : maps_) {
    if (pair.first != p.chart) continue;
    for (const PartialAffine& m : maps)
      if (m.domain().contains(p.param)) out.push_back({pair.second, m.apply(p.param)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointRef TransitionGroupoid::canonical(const PointRef& p) const {
  return orbit(p).front();
}

bool TransitionGroupoid::same_point(const PointRef& a, const PointRef& b) const {
  if (a == b) return true;
  auto reps = orbit(a);
  return std::binary_search(reps.begin(), reps.end(), b);
}

TransitionGroupoid saturate(const Presentation& p, int depth_limit) {
  MapTable gens;
  Presentation sym = p.symmetrized();
  for (const GluingGenerator& g : sym.gluings()) gens[{g.from, g.to}].push_back(g.map);

  TransitionGroupoid out;
  out.maps_ = normalize(gens);
  gens = out.maps_;

  std::vector<std::size_t> growth{out.map_count()};
  for (int round = 1; round <= depth_limit; ++round) {
    MapTable next = out.maps_;
    for (const auto& [mp, maps] : out.maps_) {
      for (const auto& [gp, gmaps] : gens) {
        // g after m : (from, to) = (mp.first, gp.second)
        if (gp.first == mp.second)
          for (const PartialAffine& m : maps)
            for (const PartialAffine& g : gmaps)
              next[{mp.first, gp.second}].push_back(PartialAffine::compose(g, m));
        // m after g : (from, to) = (gp.first, mp.second)
        if (mp.first == gp.second)
          for (const PartialAffine& m : maps)
            for (const PartialAffine& g : gmaps)
              next[{gp.first, mp.second}].push_back(PartialAffine::compose(m, g));
      }
    }
    next = normalize(next);
    if (next == out.maps_) {
      out.rounds_used_ = round;
      return out;
    }
    out.maps_ = std::move(next);
    growth.push_back(out.map_count());
  }

  std::string counts;
  for (std::size_t n : growth) counts += (counts.empty() ? "" : ", ") + std::to_string(n);
  throw Error("not_tame", "no saturation fixpoint within " + std::to_string(depth_limit) +
                              " rounds; map counts per round: " + counts);
}

bool same_point(const Presentation& p, const TransitionGroupoid& g, const PointRef& a,
                const PointRef& b) {
  if (!p.in_extent(a)) throw parse_error("point " + a.str() + " outside chart extent");
  if (!p.in_extent(b)) throw parse_error("point " + b.str() + " outside chart extent");
  return g.same_point(a, b);
}

}  // namespace nhm
