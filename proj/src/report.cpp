#include "liegeo/report.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

void ValidationReport::add(std::string name, bool passed, std::string witness) {
  checks_.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

bool ValidationReport::passed(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c.passed;
  throw Error("no such check: " + std::string(name));
}

std::string witness_string(std::initializer_list<int> zero_based_indices,
                           const Rational& lhs, const Rational& rhs) {
  std::string s = "(";
  bool first = true;
  for (int i : zero_based_indices) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  s += ") lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
  return s;
}

}  // namespace liegeo
