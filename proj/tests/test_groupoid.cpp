#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nhm;
using namespace nhm::testing;

namespace {

Interval op(long lo, long hi) { return Interval::open(ExtRat(lo), ExtRat(hi)); }

/// Treats a saturated groupoid as its own generator set; saturating it again
/// must change nothing.
Presentation as_presentation(const Presentation& p, const TransitionGroupoid& g) {
  std::vector<GluingGenerator> gluings;
  for (const auto& [pair, maps] : g.maps())
    for (const PartialAffine& m : maps) gluings.push_back({pair.first, pair.second, m});
  return Presentation(p.charts(), std::move(gluings));
}

}  // namespace

TEST_CASE("two-origin line saturates in one round") {
  TransitionGroupoid g = saturate(presentation_L());
  CHECK(g.rounds_used() == 1);
  CHECK(g.map_count() == 2);
  CHECK(g.maps_between("A", "B").size() == 1);
  CHECK(g.maps_between("B", "A").size() == 1);
  CHECK(g.maps_between("A", "A").empty());  // identity restrictions are implicit
}

TEST_CASE("letter X groupoid carries the two composite transitions") {
  TransitionGroupoid g = saturate(compile(obstacles_X()));
  CHECK(g.map_count() == 10);

  REQUIRE(g.maps_between("c1", "c3").size() == 1);
  CHECK(g.maps_between("c1", "c3")[0].domain() ==
        IntervalSet::of({op(0, 1), Interval::open(ExtRat(1), ExtRat::pos_inf())}));
  REQUIRE(g.maps_between("c2", "c4").size() == 1);
  CHECK(g.maps_between("c2", "c4")[0].domain() ==
        IntervalSet(Interval::open(ExtRat::neg_inf(), ExtRat(0l))));
  CHECK(g.maps_between("c1", "c4").empty());  // shadows block the full crossing
}

TEST_CASE("orbits") {
  TransitionGroupoid g = saturate(compile(obstacles_X()));
  CHECK(g.orbit({"c2", Rational(1, 2)}) ==
        std::vector<PointRef>{{"c1", Rational(1, 2)}, {"c2", Rational(1, 2)}, {"c3", Rational(1, 2)}});
  CHECK(g.canonical({"c3", Rational(1, 2)}) == PointRef{"c1", Rational(1, 2)});

  TransitionGroupoid gl = saturate(presentation_L());
  CHECK(gl.orbit({"A", 0}) == std::vector<PointRef>{{"A", 0}});

  Presentation isolated({{"A", Interval::whole()}}, {});
  CHECK(saturate(isolated).orbit({"A", 3}) == std::vector<PointRef>{{"A", 3}});
}

TEST_CASE("saturation is idempotent and self-maps are identities") {
  RandomPresentations gen(90210);
  for (int trial = 0; trial < 12; ++trial) {
    Presentation p = gen.next();
    TransitionGroupoid g = saturate(p);
    TransitionGroupoid again = saturate(as_presentation(p, g));
    CHECK(again.maps() == g.maps());
    for (const auto& [pair, maps] : g.maps()) CHECK(pair.first != pair.second);

    // every map really is a same-point witness
    for (const auto& [pair, maps] : g.maps())
      for (const PartialAffine& m : maps)
        for (const Interval& part : m.domain().parts()) {
          Rational w = 0;
          if (part.lo().is_finite() && part.hi().is_finite())
            w = (part.lo().value() + part.hi().value()) / 2;
          else if (part.lo().is_finite())
            w = part.lo().value() + 1;
          else if (part.hi().is_finite())
            w = part.hi().value() - 1;
          CHECK(g.same_point({pair.first, w}, {pair.second, m.apply(w)}));
        }
  }
}

TEST_CASE("self-gluing by translation is rejected") {
  CHECK_THROWS_AS(saturate(presentation_selfglue()), Error);
  try {
    saturate(presentation_selfglue());
  } catch (const Error& e) {
    CHECK(e.code() == "not_injective");
  }
}

TEST_CASE("disagreeing overlapping transitions are rejected") {
  Presentation p({{"A", Interval::whole()}, {"B", Interval::whole()}},
                 {{"A", "B", PartialAffine::identity(IntervalSet(op(0, 2)))},
                  {"A", "B", PartialAffine(1, 1, IntervalSet(op(1, 3)))}});
  try {
    saturate(p);
    FAIL("expected not_injective");
  } catch (const Error& e) {
    CHECK(e.code() == "not_injective");
  }
}

TEST_CASE("long chains exhaust the round limit") {
  // spans grow one chart per round, so 21 charts need 20 rounds
  CHECK(saturate(presentation_long_chain(10)).rounds_used() == 9);
  try {
    saturate(presentation_long_chain(21));
    FAIL("expected not_tame");
  } catch (const Error& e) {
    CHECK(e.code() == "not_tame");
    CHECK(std::string(e.what()).find("map counts per round") != std::string::npos);
  }
  CHECK(saturate(presentation_long_chain(21), 32).rounds_used() == 20);
}
