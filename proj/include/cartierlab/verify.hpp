#ifndef CARTIERLAB_VERIFY_HPP
#define CARTIERLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cartierlab {

struct CaseFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  long cases = 0;
  std::vector<CaseFailure> failures;
  double wall_ms = 0;
  bool ok() const { return failures.empty(); }
};

struct VerificationReport {
  std::vector<SuiteReport> suites;
  bool ok() const {
    for (const SuiteReport& s : suites)
      if (!s.ok()) return false;
    return true;
  }
  long total_cases() const {
    long n = 0;
    for (const SuiteReport& s : suites) n += s.cases;
    return n;
  }
};

std::vector<std::string> verify_suite_names();

/// Run the named suite (or all when the filter is empty) with the given
/// seed; results are deterministic per seed.
VerificationReport verify_all(uint64_t seed, const std::string& suite_filter = "");

}  // namespace cartierlab

#endif
