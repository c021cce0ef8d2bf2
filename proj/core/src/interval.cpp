#include "nhm/interval.hpp"

#include <algorithm>

#include "nhm/error.hpp"

namespace nhm {

namespace {

Interval from_bounds(const Bound& lb, const Bound& ub) {
  return Interval::make(lb.x, ub.x, lb.eps == 0, ub.eps == 0);
}

// Lower bound of the gap just above an upper bound, and dually.
Bound flip_ub(const Bound& ub) { return {ub.x, ub.eps + 1}; }
Bound flip_lb(const Bound& lb) { return {lb.x, lb.eps - 1}; }

bool bounds_mergeable(const Bound& cur_ub, const Bound& next_lb) {
  if (next_lb <= cur_ub) return true;  // overlap
  return next_lb.x == cur_ub.x && next_lb.eps == cur_ub.eps + 1;  // adjacent
}

}  // namespace

Interval Interval::make(ExtRat lo, ExtRat hi, bool lo_closed, bool hi_closed) {
  if ((lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()))
    throw parse_error("infinite interval end cannot be closed");
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
    throw parse_error("empty interval: " + lo.str() + ".." + hi.str());
  return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

bool Interval::contains(const Rational& x) const {
  Bound p{ExtRat(x), 0};
  return lb() <= p && p <= ub();
}

bool Interval::contains(const Interval& other) const {
  return lb() <= other.lb() && other.ub() <= ub();
}

Interval Interval::interior() const { return make(lo_, hi_, false, false); }

std::string Interval::str() const {
  return std::string(lo_closed_ ? "[" : "(") + lo_.str() + "," + hi_.str() +
         (hi_closed_ ? "]" : ")");
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (auto c = a.lb() <=> b.lb(); c != 0) return c < 0;
    return a.ub() < b.ub();
  });
  IntervalSet out;
  for (const Interval& part : parts) {
    if (!out.parts_.empty() && bounds_mergeable(out.parts_.back().ub(), part.lb())) {
      Bound ub = std::max(out.parts_.back().ub(), part.ub());
      out.parts_.back() = from_bounds(out.parts_.back().lb(), ub);
    } else {
      out.parts_.push_back(part);
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const Interval& part : parts_)
    if (part.contains(x)) return true;
  return false;
}

bool IntervalSet::all_open() const {
  for (const Interval& part : parts_)
    if (!part.is_open()) return false;
  return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return of(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = o.parts_[j];
    Bound lb = std::max(a.lb(), b.lb());
    Bound ub = std::min(a.ub(), b.ub());
    if (lb <= ub) out.push_back(from_bounds(lb, ub));
    if (a.ub() < b.ub())
      ++i;
    else
      ++j;
  }
  return of(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
  return intersect(complement_within(Interval::whole(), o));
}

IntervalSet IntervalSet::complement_within(const Interval& universe, const IntervalSet& s) {
  std::vector<Interval> gaps;
  Bound lo{ExtRat::neg_inf(), +1};
  for (const Interval& part : s.parts_) {
    Bound hi = flip_lb(part.lb());
    if (lo <= hi) gaps.push_back(from_bounds(lo, hi));
    lo = flip_ub(part.ub());
  }
  Bound hi{ExtRat::pos_inf(), -1};
  if (lo <= hi) gaps.push_back(from_bounds(lo, hi));
  return IntervalSet(universe).intersect(of(std::move(gaps)));
}

std::strong_ordering IntervalSet::operator<=>(const IntervalSet& o) const {
  std::size_t n = std::min(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = parts_[i].lb() <=> o.parts_[i].lb(); c != 0) return c;
    if (auto c = parts_[i].ub() <=> o.parts_[i].ub(); c != 0) return c;
  }
  return parts_.size() <=> o.parts_.size();
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const Interval& part : parts_) {
    if (!out.empty()) out += " u ";
    out += part.str();
  }
  return out;
}

}  // namespace nhm
