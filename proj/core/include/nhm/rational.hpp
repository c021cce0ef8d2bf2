#ifndef NHM_RATIONAL_HPP
#define NHM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace nhm {

using Rational = mpq_class;

/// Parses "p/q" or "n" (q > 0 after canonicalization). Throws Error("parse").
Rational parse_rational(const std::string& text);

/// Canonical "p/q" or "n" form.
std::string rational_str(const Rational& q);

/// A rational extended with -inf/+inf. Coordinates of chart and gluing data.
/// Arithmetic is only defined on finite values; infinities participate in the
/// total order and as interval ends.
class ExtRat {
 public:
  ExtRat() : sign_(0) {}
  ExtRat(const Rational& v) : sign_(0), value_(v) {}
  ExtRat(long v) : sign_(0), value_(v) {}

  static ExtRat neg_inf() { return ExtRat(-1, Rational()); }
  static ExtRat pos_inf() { return ExtRat(+1, Rational()); }

  bool is_finite() const { return sign_ == 0; }
  bool is_neg_inf() const { return sign_ < 0; }
  bool is_pos_inf() const { return sign_ > 0; }

  /// Finite value; throws Error("internal") on infinities.
  const Rational& value() const;

  std::strong_ordering operator<=>(const ExtRat& o) const;
  bool operator==(const ExtRat& o) const { return (*this <=> o) == 0; }

  std::string str() const;

  /// Accepts "p/q", "n", "inf", "+inf", "-inf". Throws Error("parse").
  static ExtRat parse(const std::string& text);

 private:
  ExtRat(int sign, Rational v) : sign_(sign), value_(std::move(v)) {}

  int sign_;        // -1, 0, +1: -inf, finite, +inf
  Rational value_;  // meaningful only when sign_ == 0
};

}  // namespace nhm

#endif
