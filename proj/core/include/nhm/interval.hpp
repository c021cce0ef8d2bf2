#ifndef NHM_INTERVAL_HPP
#define NHM_INTERVAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "nhm/rational.hpp"

namespace nhm {

/// One endpoint of an interval, ordered on the "doubled" line: eps = -1 sits
/// just below x, +1 just above. A lower bound of an open interval is (x,+1),
/// of a closed one (x,0); dually for upper bounds. Gives exact sweep-based
/// set operations without case analysis on flags.
struct Bound {
  ExtRat x;
  int eps = 0;

  std::strong_ordering operator<=>(const Bound& o) const {
    if (auto c = x <=> o.x; c != 0) return c;
    return eps <=> o.eps;
  }
  bool operator==(const Bound& o) const = default;
};

class Interval {
 public:
  /// Validates: lo < hi, or a finite singleton with both ends closed;
  /// infinite ends are never closed. Throws Error("parse") otherwise.
  static Interval make(ExtRat lo, ExtRat hi, bool lo_closed, bool hi_closed);
  static Interval open(ExtRat lo, ExtRat hi) { return make(lo, hi, false, false); }
  static Interval closed(ExtRat lo, ExtRat hi) { return make(lo, hi, true, true); }
  static Interval singleton(const Rational& x) { return make(x, x, true, true); }
  static Interval whole() { return open(ExtRat::neg_inf(), ExtRat::pos_inf()); }

  const ExtRat& lo() const { return lo_; }
  const ExtRat& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  Bound lb() const { return {lo_, lo_closed_ ? 0 : +1}; }
  Bound ub() const { return {hi_, hi_closed_ ? 0 : -1}; }

  bool is_open() const { return !lo_closed_ && !hi_closed_; }
  bool is_singleton() const { return lo_ == hi_; }

  bool contains(const Rational& x) const;
  bool contains(const Interval& other) const;

  /// (lo,hi) with the closed ends dropped; throws if that is empty.
  Interval interior() const;

  bool operator==(const Interval& o) const = default;

  std::string str() const;

 private:
  Interval(ExtRat lo, ExtRat hi, bool lc, bool hc)
      : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lc), hi_closed_(hc) {}

  ExtRat lo_, hi_;
  bool lo_closed_, hi_closed_;
};

/// A finite union of intervals in canonical form: sorted, pairwise disjoint,
/// no two parts mergeable into one interval. Equality of canonical forms is
/// set equality.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& single) : parts_{single} {}

  /// Normalizes an arbitrary collection of intervals.
  static IntervalSet of(std::vector<Interval> parts);
  static IntervalSet whole() { return IntervalSet(Interval::whole()); }

  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }

  bool contains(const Rational& x) const;
  bool all_open() const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet subtract(const IntervalSet& o) const;

  /// universe \ s.
  static IntervalSet complement_within(const Interval& universe, const IntervalSet& s);

  bool operator==(const IntervalSet& o) const = default;
  std::strong_ordering operator<=>(const IntervalSet& o) const;

  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace nhm

#endif
