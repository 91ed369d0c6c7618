#include "sudogen/validation.hpp"

#include <algorithm>

namespace sudogen {

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.message;
  }
  return out;
}

}  // namespace sudogen
