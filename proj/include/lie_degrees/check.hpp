#ifndef LIE_DEGREES_CHECK_HPP
#define LIE_DEGREES_CHECK_HPP

#include <string>
#include <utility>
#include <vector>

namespace lie_degrees {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// One verified statement with its parameters and the exact values behind
/// the verdict. Report-only records never count as failures.
struct CheckRecord {
  std::string id;
  KeyValues params;
  bool pass = true;
  bool asserted = true;
  KeyValues values;
  std::string witness;

  bool failed() const { return asserted && !pass; }
};

inline bool all_pass(const std::vector<CheckRecord>& rs) {
  for (const CheckRecord& r : rs)
    if (r.failed()) return false;
  return true;
}

}  // namespace lie_degrees

#endif  // LIE_DEGREES_CHECK_HPP
