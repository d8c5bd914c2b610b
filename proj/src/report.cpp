#include "phq/report.hpp"

#include <stdexcept>

namespace phq {

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const Check& Report::at(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + std::string(name));
}

bool Report::has(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return true;
  return false;
}

std::string Report::failed_names() const {
  std::string out;
  for (const auto& c : checks_) {
    if (c.passed) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.name + ": " + (c.passed ? "PASS" : "FAIL") + "\n";
    for (const auto& d : c.details) out += "  " + d + "\n";
  }
  return out;
}

}  // namespace phq
