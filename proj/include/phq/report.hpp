#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace phq {

/// Outcome of one named verification. `details` lists the violations found
/// (empty when the check passed), in a deterministic order.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string detail) {
    passed = false;
    details.push_back(std::move(detail));
  }
};

/// Ordered collection of checks. Verification routines return a Report
/// instead of throwing so that every violation can be listed at once.
class Report {
 public:
  Report() = default;

  void add(Check check) { checks_.push_back(std::move(check)); }
  void merge(const Report& other);

  bool passed() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }

  /// Throws std::out_of_range if no check has this name.
  const Check& at(std::string_view name) const;
  bool has(std::string_view name) const;

  /// Names of the failed checks, comma separated.
  std::string failed_names() const;
  /// Multi-line "name: PASS|FAIL" listing with details.
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace phq
