#ifndef LIEGEO_REPORT_HPP
#define LIEGEO_REPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "liegeo/rational.hpp"

namespace liegeo {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed; indices and both side values otherwise
};

class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string section) : section_(std::move(section)) {}

  const std::string& section() const { return section_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(std::string name, bool passed, std::string witness = {});
  bool all_passed() const;
  bool passed(std::string_view name) const;  // throws Error if no such check

 private:
  std::string section_;
  std::vector<CheckResult> checks_;
};

// "(i,j)=(1,3) lhs=-1 rhs=0" with 1-based indices, for failure witnesses.
std::string witness_string(std::initializer_list<int> zero_based_indices,
                           const Rational& lhs, const Rational& rhs);

}  // namespace liegeo

#endif
