#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace nhm;
using namespace nhm::testing;

TEST_CASE("a point obstacle compiles to the two-origin line") {
  Presentation p = compile(obstacles_L());
  REQUIRE(p.charts().size() == 2);
  CHECK(p.charts()[0].id == "c1");
  CHECK(p.charts()[1].id == "c2");
  REQUIRE(p.gluings().size() == 1);
  CHECK(p.gluings()[0].map.is_identity());
  CHECK(p.gluings()[0].map.domain() ==
        IntervalSet::of({Interval::open(ExtRat::neg_inf(), ExtRat(0l)),
                         Interval::open(ExtRat(0l), ExtRat::pos_inf())}));
}

TEST_CASE("an upward ray compiles to the letter Y") {
  Presentation p = compile(obstacles_Y());
  REQUIRE(p.charts().size() == 2);
  REQUIRE(p.gluings().size() == 1);
  CHECK(p.gluings()[0].map.domain() ==
        IntervalSet(Interval::open(ExtRat::neg_inf(), ExtRat(0l))));
}

TEST_CASE("the three-obstacle set compiles to the letter X presentation") {
  Presentation p = compile(obstacles_X());
  REQUIRE(p.charts().size() == 4);
  REQUIRE(p.gluings().size() == 3);
  CHECK(p.gluings()[0].from == "c1");
  CHECK(p.gluings()[0].map.domain() ==
        IntervalSet(Interval::open(ExtRat(0l), ExtRat::pos_inf())));
  CHECK(p.gluings()[1].map.domain() ==
        IntervalSet::of({Interval::open(ExtRat::neg_inf(), ExtRat(1)),
                         Interval::open(ExtRat(1), ExtRat::pos_inf())}));
  CHECK(p.gluings()[2].map.domain() ==
        IntervalSet(Interval::open(ExtRat::neg_inf(), ExtRat(0l))));
}

TEST_CASE("degenerate obstacle sets") {
  CHECK(compile(ObstacleSet{}).charts().size() == 1);
  CHECK(compile(ObstacleSet{}).gluings().empty());

  // full-line obstacle: shadow is everything, charts disconnect
  ObstacleSet wall{{}, {{0, ExtRat::neg_inf(), ExtRat::pos_inf()}}};
  Presentation p = compile(wall);
  CHECK(p.charts().size() == 2);
  CHECK(p.gluings().empty());
  CHECK(p.components().size() == 2);

  // obstacles sharing one column merge their shadows into one gluing
  ObstacleSet stacked{{{0, 5}}, {{0, ExtRat(0l), ExtRat(1)}}};
  Presentation q = compile(stacked);
  REQUIRE(q.gluings().size() == 1);
  CHECK(q.gluings()[0].map.domain().parts().size() == 3);

  CHECK_THROWS_AS(validate(ObstacleSet{{}, {{0, ExtRat(2), ExtRat(1)}}}), Error);
}

TEST_CASE("sample columns interleave obstacle abscissas") {
  CHECK(sample_columns(obstacles_X()) ==
        std::vector<Rational>{-2, Rational(-1, 2), Rational(1, 2), 2});
  CHECK(sample_columns(ObstacleSet{}) == std::vector<Rational>{0});
}

TEST_CASE("leaf counts match the obstacle geometry") {
  RandomPresentations gen(1337);
  for (int trial = 0; trial < 25; ++trial) {
    ObstacleSet q = gen.obstacle_set();
    Presentation p = compile(q);
    TransitionGroupoid g = saturate(p);

    std::set<Rational> columns;
    for (const VSegment& s : q.vsegments) columns.insert(s.x);
    for (const auto& [x, y] : q.points) columns.insert(x);
    CHECK(p.charts().size() == columns.size() + 1);
    CHECK(g.rounds_used() <= static_cast<int>(columns.size()) + 1);

    for (int probe = 0; probe < 10; ++probe) {
      Rational y(gen.int_in(-40, 40), 7);  // denominator 7 avoids obstacle y-values
      y.canonicalize();
      if (y.get_den() == 1) continue;
      std::set<Rational> blocking;
      for (const VSegment& s : q.vsegments)
        if (ExtRat(y) >= s.ylo && ExtRat(y) <= s.yhi) blocking.insert(s.x);
      std::size_t expected = 1 + blocking.size();

      std::set<PointRef> leaves;
      for (const Chart& c : p.charts()) leaves.insert(g.canonical({c.id, y}));
      CHECK(leaves.size() == expected);
    }
  }
}
