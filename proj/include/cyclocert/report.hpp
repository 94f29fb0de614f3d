#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cyclocert {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a verification: a list of named sub-checks. Failures are data,
/// not exceptions.
class CheckReport {
public:
  CheckReport() = default;
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    items_.push_back({std::move(name), passed, std::move(detail)});
  }

  /// Appends every item of another report, prefixing names.
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& item : other.items_) {
      items_.push_back({prefix + item.name, item.passed, item.detail});
    }
  }

  bool passed() const {
    return std::all_of(items_.begin(), items_.end(),
                       [](const CheckItem& i) { return i.passed; });
  }

  const CheckItem* first_failure() const {
    auto it = std::find_if(items_.begin(), items_.end(),
                           [](const CheckItem& i) { return !i.passed; });
    return it == items_.end() ? nullptr : &*it;
  }

  const std::string& title() const noexcept { return title_; }
  const std::vector<CheckItem>& items() const noexcept { return items_; }

private:
  std::string title_;
  std::vector<CheckItem> items_;
};

inline std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
  if (!r.title().empty()) {
    os << r.title() << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& item : r.items()) {
    os << "  [" << (item.passed ? "ok" : "FAIL") << "] " << item.name;
    if (!item.detail.empty()) {
      os << " (" << item.detail << ')';
    }
    os << '\n';
  }
  return os;
}

} // namespace cyclocert
