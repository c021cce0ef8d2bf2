#include "nhm/affine.hpp"

#include "nhm/error.hpp"

namespace nhm {

PartialAffine::PartialAffine(Rational slope, Rational offset, IntervalSet domain)
    : slope_(std::move(slope)), offset_(std::move(offset)), domain_(std::move(domain)) {
  if (slope_ == 0) throw parse_error("affine map must have nonzero slope");
  if (!domain_.all_open()) throw parse_error("affine map domain must be open");
}

ExtRat PartialAffine::apply_ext(const ExtRat& x) const {
  if (x.is_finite()) return ExtRat(apply(x.value()));
  bool pos = x.is_pos_inf() == (slope_ > 0);
  return pos ? ExtRat::pos_inf() : ExtRat::neg_inf();
}

Interval PartialAffine::apply(const Interval& iv) const {
  ExtRat a = apply_ext(iv.lo());
  ExtRat b = apply_ext(iv.hi());
  if (slope_ > 0) return Interval::make(a, b, iv.lo_closed(), iv.hi_closed());
  return Interval::make(b, a, iv.hi_closed(), iv.lo_closed());
}

IntervalSet PartialAffine::apply_set(const IntervalSet& s) const {
  std::vector<Interval> out;
  IntervalSet clipped = s.intersect(domain_);
  for (const Interval& part : clipped.parts()) out.push_back(apply(part));
  return IntervalSet::of(std::move(out));
}

PartialAffine PartialAffine::inverse() const {
  return PartialAffine(1 / slope_, -offset_ / slope_, image());
}

PartialAffine PartialAffine::compose(const PartialAffine& g, const PartialAffine& h) {
  IntervalSet dom = h.domain_.intersect(h.inverse().apply_set(g.domain_));
  return PartialAffine(g.slope_ * h.slope_, g.slope_ * h.offset_ + g.offset_,
                       std::move(dom));
}

std::strong_ordering PartialAffine::operator<=>(const PartialAffine& o) const {
  if (int c = cmp(slope_, o.slope_); c != 0) return c <=> 0;
  if (int c = cmp(offset_, o.offset_); c != 0) return c <=> 0;
  return domain_ <=> o.domain_;
}

std::string PartialAffine::str() const {
  return "x -> " + rational_str(slope_) + "*x + " + rational_str(offset_) + " on " +
         domain_.str();
}

}  // namespace nhm
