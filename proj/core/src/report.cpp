#include "ellgen/report.hpp"

namespace ellgen {

void Report::absorb(const Report& other) {
  for (const auto& v : other.violations)
    violations.push_back(other.name.empty() ? v : other.name + ": " + v);
}

std::ostream& operator<<(std::ostream& os, const Report& r) {
  os << (r.passed() ? "PASS " : "FAIL ") << r.name;
  if (!r.passed()) os << " (" << r.violations.size() << " violations)";
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i)
    os << "\n    " << r.violations[i];
  if (r.violations.size() > kShown) os << "\n    ...";
  return os;
}

}  // namespace ellgen
