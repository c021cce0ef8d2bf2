#ifndef NHM_ERROR_HPP
#define NHM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nhm {

/// Every user-facing failure carries a stable machine-readable code.
/// Codes currently emitted:
///   "parse"          -- malformed input document or invariant violation on load
///   "not_tame"       -- groupoid saturation did not reach a fixpoint
///   "not_injective"  -- gluings identify distinct points of one chart
///   "not_continuous" -- test map disagrees on a glued domain
///   "same_point"     -- oracle asked about a pair that is a single point
///   "internal"       -- broken invariant that validation should have caught
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Error parse_error(const std::string& msg) { return Error("parse", msg); }
inline Error internal_error(const std::string& msg) { return Error("internal", msg); }

}  // namespace nhm

#endif
