#include "coxkit/report.hpp"

#include <algorithm>

namespace coxkit::report {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void VerificationReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), Status::Skipped, std::move(reason)});
}

bool VerificationReport::passed() const { return count(Status::Fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

std::string VerificationReport::render() const {
  std::string out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out += "[" + std::string(to_string(c.status)) + "] " + std::to_string(i + 1) + ". " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  out += section + ": " + std::to_string(count(Status::Pass)) + " passed, " + std::to_string(count(Status::Fail)) +
         " failed, " + std::to_string(count(Status::Skipped)) + " skipped -> " + (passed() ? "PASS" : "FAIL") + '\n';
  return out;
}

std::string VerificationReport::records() const {
  std::string out;
  for (const auto& c : checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), '\t', ' ');
    std::replace(detail.begin(), detail.end(), '\n', ' ');
    out += "check\t" + section + "\t" + c.name + "\t" + std::string(to_string(c.status)) + "\t" + detail + '\n';
  }
  out += "overall\t" + section + "\t" + (passed() ? "pass" : "fail") + '\n';
  return out;
}

}  // namespace coxkit::report
