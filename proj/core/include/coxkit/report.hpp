#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coxkit::report {

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;  // reason for skipped checks, both sides for failures
};

/// Ordered list of named checks. Overall status is pass iff nothing failed.
struct VerificationReport {
  std::string section;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string reason);

  bool passed() const;
  std::size_t count(Status s) const;
  /// One line per check ("[pass] name: detail"), then a summary line.
  std::string render() const;
  /// Line-oriented records: "check<TAB>section<TAB>name<TAB>status<TAB>detail".
  std::string records() const;
};

}  // namespace coxkit::report
