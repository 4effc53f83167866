#pragma once

// Verification reports: named checks, each aggregating many instances and
// keeping the first failing witness.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace aqs {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;  // first failure
};

class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  // The witness is only built on failure.
  void record(bool ok, const std::function<std::string()>& witness = {});
  bool ok() const { return result_.pass; }
  const CheckResult& result() const { return result_; }

private:
  CheckResult result_;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  double seconds = 0;

  void add(const Check& c) { checks.push_back(c.result()); }
  void add(const CheckResult& c) { checks.push_back(c); }
  void add(const std::string& name, bool ok, const std::string& witness = {});
  void absorb(const SuiteReport& other);
  bool passed() const;
  void sort_checks();
};

}  // namespace aqs
