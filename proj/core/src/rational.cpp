#include "nhm/rational.hpp"

#include <cctype>

#include "nhm/error.hpp"

namespace nhm {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw parse_error("malformed rational: '" + text + "'");
  Rational q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw parse_error("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();
  return canonical.get_str();
}

const Rational& ExtRat::value() const {
  if (sign_ != 0) throw internal_error("arithmetic on infinite value");
  return value_;
}

std::strong_ordering ExtRat::operator<=>(const ExtRat& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  if (sign_ != 0) return std::strong_ordering::equal;
  int c = cmp(value_, o.value_);
  return c <=> 0;
}

std::string ExtRat::str() const {
  if (sign_ < 0) return "-inf";
  if (sign_ > 0) return "inf";
  return rational_str(value_);
}

ExtRat ExtRat::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRat(parse_rational(text));
}

}  // namespace nhm
