#include "nhm/piecewise.hpp"

#include "nhm/error.hpp"

namespace nhm {

PiecewiseAffine::PiecewiseAffine(std::vector<std::pair<Rational, Rational>> knots,
                                 Rational left_slope, Rational right_slope)
    : knots_(std::move(knots)),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
  if (knots_.empty()) throw parse_error("piecewise-affine map needs at least one knot");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (!(knots_[i - 1].first < knots_[i].first))
      throw parse_error("piecewise-affine knots must be strictly increasing");
}

Rational PiecewiseAffine::eval(const Rational& x) const {
  if (x <= knots_.front().first)
    return knots_.front().second + left_slope_ * (x - knots_.front().first);
  if (x >= knots_.back().first)
    return knots_.back().second + right_slope_ * (x - knots_.back().first);
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (x <= knots_[i].first) {
      const auto& [x0, y0] = knots_[i - 1];
      const auto& [x1, y1] = knots_[i];
      return y0 + (y1 - y0) / (x1 - x0) * (x - x0);
    }
  }
  throw internal_error("piecewise-affine eval fell through");
}

std::vector<Rational> PiecewiseAffine::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& [x, y] : knots_) out.push_back(x);
  return out;
}

}  // namespace nhm
