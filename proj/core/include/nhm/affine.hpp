#ifndef NHM_AFFINE_HPP
#define NHM_AFFINE_HPP

#include <string>

#include "nhm/interval.hpp"

namespace nhm {

/// x |-> slope*x + offset restricted to an open domain. Realizes chart
/// transition maps; injective since slope != 0. Infinite interval ends map
/// by the sign of the slope.
class PartialAffine {
 public:
  /// Throws Error("parse") if slope == 0 or the domain has a non-open part.
  PartialAffine(Rational slope, Rational offset, IntervalSet domain);

  static PartialAffine identity(IntervalSet domain) {
    return PartialAffine(1, 0, std::move(domain));
  }

  const Rational& slope() const { return slope_; }
  const Rational& offset() const { return offset_; }
  const IntervalSet& domain() const { return domain_; }

  bool is_identity() const { return slope_ == 1 && offset_ == 0; }
  bool is_empty() const { return domain_.empty(); }

  Rational apply(const Rational& x) const { return slope_ * x + offset_; }
  ExtRat apply_ext(const ExtRat& x) const;

  Interval apply(const Interval& iv) const;
  /// Image of s ∩ domain.
  IntervalSet apply_set(const IntervalSet& s) const;
  IntervalSet image() const { return apply_set(domain_); }

  PartialAffine inverse() const;
  PartialAffine restricted(const IntervalSet& s) const {
    return PartialAffine(slope_, offset_, domain_.intersect(s));
  }

  /// g∘h with domain h.domain ∩ h⁻¹(g.domain); empty-domain result when the
  /// domains do not meet.
  static PartialAffine compose(const PartialAffine& g, const PartialAffine& h);

  bool operator==(const PartialAffine& o) const = default;
  std::strong_ordering operator<=>(const PartialAffine& o) const;

  std::string str() const;

 private:
  Rational slope_, offset_;
  IntervalSet domain_;
};

}  // namespace nhm

#endif
