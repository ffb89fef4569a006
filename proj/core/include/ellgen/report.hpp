#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ellgen {

/// Outcome of a property check: a named list of violations, empty on pass.
struct Report {
  std::string name;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  /// Appends another report's violations, prefixed with its name.
  void absorb(const Report& other);
};

std::ostream& operator<<(std::ostream& os, const Report& r);

}  // namespace ellgen
