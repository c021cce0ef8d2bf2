#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nhm;
using namespace nhm::testing;

namespace {

Interval op(long lo, long hi) { return Interval::open(ExtRat(lo), ExtRat(hi)); }

}  // namespace

TEST_CASE("partial affine maps") {
  PartialAffine m(2, -1, IntervalSet(op(0, 1)));
  CHECK(m.apply(Rational(1, 2)) == 0);
  CHECK(m.image() == IntervalSet(op(-1, 1)));
  CHECK(m.inverse().apply(Rational(0)) == Rational(1, 2));
  CHECK(m.inverse().domain() == IntervalSet(op(-1, 1)));
  CHECK(m.inverse().inverse() == m);

  PartialAffine flip(-1, 0, IntervalSet(op(0, 4)));
  CHECK(flip.image() == IntervalSet(op(-4, 0)));
  CHECK(flip.apply_ext(ExtRat::pos_inf()).is_neg_inf());

  PartialAffine c = PartialAffine::compose(flip, m);  // x -> 1 - 2x where defined
  CHECK(c.slope() == -2);
  CHECK(c.offset() == 1);
  CHECK(c.domain() == IntervalSet(Interval::open(ExtRat(Rational(1, 2)), ExtRat(1))));

  CHECK_THROWS_AS(PartialAffine(0, 1, IntervalSet(op(0, 1))), Error);
  CHECK_THROWS_AS(PartialAffine(1, 0, IntervalSet(Interval::closed(ExtRat(0l), ExtRat(1)))),
                  Error);
}

TEST_CASE("presentation validation") {
  Chart a{"A", Interval::whole()};

  CHECK_THROWS_WITH_AS(Presentation({a, a}, {}), "duplicate chart id 'A'", Error);
  CHECK_THROWS_AS(Presentation({{"A", Interval::singleton(0)}}, {}), Error);
  CHECK_THROWS_AS(
      Presentation({a}, {{"A", "Z", PartialAffine::identity(IntervalSet(op(0, 1)))}}),
      Error);

  // gluing domains must avoid chart boundary points
  Chart half{"H", Interval::make(ExtRat(0l), ExtRat(4), true, false)};
  CHECK_THROWS_WITH_AS(
      Presentation({half, a}, {{"H", "A", PartialAffine::identity(IntervalSet(op(-1, 1)))}}),
      "gluing domain must lie inside the interior of chart 'H'", Error);
  CHECK_THROWS_AS(
      Presentation({a, half}, {{"A", "H", PartialAffine::identity(IntervalSet(op(-1, 1)))}}),
      Error);
  CHECK_NOTHROW(
      Presentation({half, a}, {{"H", "A", PartialAffine::identity(IntervalSet(op(1, 2)))}}));

  CHECK(Presentation().charts().empty());  // the empty manifold is fine
}

TEST_CASE("symmetrize adds exactly the missing inverses") {
  Presentation one = presentation_L();
  REQUIRE(one.gluings().size() == 1);
  Presentation sym = one.symmetrized();
  CHECK(sym.gluings().size() == 2);
  CHECK(sym.symmetrized() == sym);

  // inverse of a sloped generator lands on the image interval
  Presentation sloped({{"A", Interval::whole()}, {"B", Interval::whole()}},
                      {{"A", "B", PartialAffine(2, 0, IntervalSet(op(0, 1)))}});
  Presentation ssym = sloped.symmetrized();
  REQUIRE(ssym.gluings().size() == 2);
  const GluingGenerator& inv = ssym.gluings()[1];
  CHECK(inv.from == "B");
  CHECK(inv.to == "A");
  CHECK(inv.map.slope() == Rational(1, 2));
  CHECK(inv.map.domain() == IntervalSet(op(0, 2)));
}

TEST_CASE("connected components of the gluing graph") {
  Presentation p({{"A", Interval::whole()},
                  {"B", Interval::whole()},
                  {"C", op(0, 1)}},
                 {{"A", "B", PartialAffine::identity(IntervalSet(op(0, 1)))}});
  CHECK(p.components() ==
        std::vector<std::vector<std::string>>{{"A", "B"}, {"C"}});
  CHECK(compile(obstacles_X()).components().size() == 1);
}

TEST_CASE("point identity in the glued manifold") {
  Presentation x = compile(obstacles_X());
  TransitionGroupoid g = saturate(x.symmetrized());

  CHECK(same_point(x, g, {"c2", 0}, {"c3", 0}));   // both name branch point b
  CHECK(same_point(x, g, {"c1", 5}, {"c3", 5}));   // composite c1 -> c3
  CHECK(!same_point(x, g, {"c1", 0}, {"c2", 0}));  // a and b stay distinct
  CHECK(same_point(x, g, {"c1", 1}, {"c1", 1}));
  CHECK_THROWS_AS(same_point(x, g, {"c9", 0}, {"c1", 0}), Error);

  Presentation l = presentation_L();
  TransitionGroupoid gl = saturate(l.symmetrized());
  CHECK(!same_point(l, gl, {"A", 0}, {"B", 0}));
  CHECK(same_point(l, gl, {"A", 7}, {"B", 7}));
}

TEST_CASE("same_point is an equivalence on sampled points") {
  RandomPresentations gen(7021);
  for (int trial = 0; trial < 8; ++trial) {
    Analysis a = analyze(gen.next());
    std::vector<PointRef> pts = sample_points(a, gen.rng());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(a.groupoid.same_point(pts[i], pts[i]));
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(a.groupoid.same_point(pts[i], pts[j]) ==
              a.groupoid.same_point(pts[j], pts[i]));
    }
    // transitivity through the canonical representative
    for (const PointRef& pt : pts)
      CHECK(a.groupoid.same_point(pt, a.groupoid.canonical(pt)));
  }
}
