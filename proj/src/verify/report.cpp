#include "aqs/verify/report.hpp"

#include <algorithm>

namespace aqs {

void Check::record(bool ok, const std::function<std::string()>& witness) {
  ++result_.instances;
  if (ok) return;
  ++result_.failures;
  if (result_.pass && witness) result_.witness = witness();
  result_.pass = false;
}

void SuiteReport::add(const std::string& name, bool ok, const std::string& witness) {
  CheckResult c;
  c.name = name;
  c.pass = ok;
  c.instances = 1;
  c.failures = ok ? 0 : 1;
  if (!ok) c.witness = witness;
  checks.push_back(std::move(c));
}

void SuiteReport::absorb(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  seconds += other.seconds;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void SuiteReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

}  // namespace aqs
