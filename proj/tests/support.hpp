#ifndef NHM_TESTS_SUPPORT_HPP
#define NHM_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "nhm/error.hpp"
#include "nhm/foliation.hpp"
#include "nhm/quotient.hpp"

namespace nhm::testing {

// The running examples: the line with two origins, the non-Hausdorff letter
// Y, and the letter X, each both as an obstacle set and as the presentation
// its compilation yields.

inline ObstacleSet obstacles_L() { return {{{0, 0}}, {}}; }

inline ObstacleSet obstacles_Y() {
  return {{}, {{0, ExtRat(0l), ExtRat::pos_inf()}}};
}

inline ObstacleSet obstacles_X() {
  return {{{0, 1}},
          {{-1, ExtRat::neg_inf(), ExtRat(0l)}, {1, ExtRat(0l), ExtRat::pos_inf()}}};
}

/// Two copies of the line glued by the identity away from the origin,
/// written directly (chart ids A and B rather than c1/c2).
inline Presentation presentation_L() {
  IntervalSet punctured = IntervalSet::of({Interval::open(ExtRat::neg_inf(), ExtRat(0l)),
                                           Interval::open(ExtRat(0l), ExtRat::pos_inf())});
  return Presentation({{"A", Interval::whole()}, {"B", Interval::whole()}},
                      {{"A", "B", PartialAffine::identity(punctured)}});
}

/// Two unit charts glued crosswise by shifts: a circle.
inline Presentation presentation_circle() {
  Interval unit = Interval::open(ExtRat(0l), ExtRat(1));
  return Presentation(
      {{"A", unit}, {"B", unit}},
      {{"A", "B", PartialAffine(1, Rational(3, 4), Interval::open(ExtRat(0l), ExtRat(Rational(1, 4))))},
       {"A", "B", PartialAffine(1, Rational(-3, 4), Interval::open(ExtRat(Rational(3, 4)), ExtRat(1)))}});
}

/// A chain of n full-line charts glued by the identity on (i, inf): every
/// extra chart forces one more composition round, so a long chain honestly
/// exceeds the default saturation depth.
inline Presentation presentation_long_chain(int n) {
  std::vector<Chart> charts;
  std::vector<GluingGenerator> gluings;
  for (int i = 1; i <= n; ++i) charts.push_back({"k" + std::to_string(i), Interval::whole()});
  for (int i = 1; i < n; ++i)
    gluings.push_back({"k" + std::to_string(i), "k" + std::to_string(i + 1),
                       PartialAffine::identity(Interval::open(ExtRat(long(i)), ExtRat::pos_inf()))});
  return Presentation(std::move(charts), std::move(gluings));
}

inline Presentation presentation_selfglue() {
  return Presentation({{"A", Interval::whole()}},
                      {{"A", "A", PartialAffine(1, 1, IntervalSet::whole())}});
}

/// Deterministic random tame presentations with at most six charts, mixing
/// three flavours: compiled obstacle sets, identity-overlap chart chains
/// (possibly with boundary ends), and random affine gluings on full lines
/// (rejection-filtered through analyze).
class RandomPresentations {
 public:
  explicit RandomPresentations(unsigned seed) : rng_(seed) {}

  Rational small_rational() {
    Rational q(int_in(-12, 12), int_in(1, 4));
    q.canonicalize();
    return q;
  }

  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  ObstacleSet obstacle_set() {
    ObstacleSet q;
    int columns = static_cast<int>(int_in(1, 4));
    for (int c = 0; c < columns; ++c) {
      Rational x(int_in(-5, 5), int_in(1, 2));
      x.canonicalize();
      if (int_in(0, 1) == 0) {
        q.points.emplace_back(x, small_rational());
      } else {
        Rational ylo = small_rational();
        switch (int_in(0, 2)) {
          case 0: q.vsegments.push_back({x, ExtRat(ylo), ExtRat(Rational(ylo + int_in(0, 6)))}); break;
          case 1: q.vsegments.push_back({x, ExtRat::neg_inf(), ExtRat(ylo)}); break;
          default: q.vsegments.push_back({x, ExtRat(ylo), ExtRat::pos_inf()}); break;
        }
      }
    }
    return q;
  }

  /// Charts (a_i, a_i + 2) overlapping by identity on (a_i + 1, a_i + 2);
  /// the quotient is one interval. Outer ends are closed half the time.
  Presentation overlap_chain() {
    int n = static_cast<int>(int_in(1, 5));
    bool close_lo = int_in(0, 1) == 1, close_hi = int_in(0, 1) == 1;
    std::vector<Chart> charts;
    std::vector<GluingGenerator> gluings;
    for (int i = 0; i < n; ++i) {
      ExtRat lo{Rational(i)}, hi{Rational(i + 2)};
      charts.push_back({"k" + std::to_string(i + 1),
                        Interval::make(lo, hi, close_lo && i == 0, close_hi && i == n - 1)});
    }
    for (int i = 0; i + 1 < n; ++i)
      gluings.push_back(
          {charts[i].id, charts[i + 1].id,
           PartialAffine::identity(Interval::open(ExtRat(Rational(i + 1)), ExtRat(Rational(i + 2))))});
    return Presentation(std::move(charts), std::move(gluings));
  }

  Presentation affine_lines() {
    int n = static_cast<int>(int_in(2, 6));
    std::vector<Chart> charts;
    for (int i = 0; i < n; ++i)
      charts.push_back({"k" + std::to_string(i + 1), Interval::whole()});
    std::vector<GluingGenerator> gluings;
    const Rational slopes[] = {1, 1, 2, Rational(1, 2), -1};
    for (int i = 0; i + 1 < n; ++i) {
      Rational a = small_rational();
      Rational len(int_in(1, 8));
      std::vector<Interval> parts{Interval::open(ExtRat(a), ExtRat(Rational(a + len)))};
      switch (int_in(0, 2)) {
        case 0: parts.push_back(Interval::open(ExtRat(Rational(a + len)), ExtRat::pos_inf())); break;
        case 1: parts.push_back(Interval::open(ExtRat::neg_inf(), ExtRat(a))); break;
        default: break;
      }
      gluings.push_back({charts[i].id, charts[i + 1].id,
                         PartialAffine(slopes[int_in(0, 4)], small_rational(),
                                       IntervalSet::of(std::move(parts)))});
    }
    return Presentation(std::move(charts), std::move(gluings));
  }

  /// Next tame presentation; flavours cycle, untame or non-injective draws
  /// are discarded and retried.
  Presentation next() {
    for (;;) {
      Presentation p;
      switch (counter_++ % 3) {
        case 0: p = compile(obstacle_set()); break;
        case 1: p = overlap_chain(); break;
        default: p = affine_lines(); break;
      }
      try {
        analyze(p);
        return p;
      } catch (const Error&) {
        continue;
      }
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  int counter_ = 0;
};

/// Parameters worth sampling in one chart: candidate orbit values, piece
/// midpoints and a few fixed offsets, clamped to the extent.
inline std::vector<PointRef> sample_points(const Analysis& a, std::mt19937& rng) {
  std::vector<PointRef> out;
  for (const PointRef& cand : a.partition.candidates())
    for (const PointRef& rep : a.groupoid.orbit(cand)) out.push_back(rep);
  for (const Piece& piece : split_pieces(a)) {
    const Interval& s = piece.span;
    Rational mid;
    if (s.lo().is_finite() && s.hi().is_finite())
      mid = (s.lo().value() + s.hi().value()) / 2;
    else if (s.lo().is_finite())
      mid = s.lo().value() + 1;
    else if (s.hi().is_finite())
      mid = s.hi().value() - 1;
    out.push_back({piece.chart, mid});
  }
  std::uniform_int_distribution<long> num(-20, 20);
  for (const Chart& c : a.presentation.charts()) {
    for (int t = 0; t < 3; ++t) {
      Rational x(num(rng), 3);
      x.canonicalize();
      if (c.extent.contains(x)) out.push_back({c.id, x});
    }
  }
  return out;
}

}  // namespace nhm::testing

#endif
