#include "nilva/report.hpp"

namespace nilva {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Reported:
      return "reported";
  }
  return "unknown";
}

void Comparator::expect_equal(const std::string& location, const Scalar& expected,
                              const Scalar& actual) {
  ++comparisons_;
  if (expected == actual) return;
  ++mismatches_;
  if (!first_) first_ = Counterexample{location, expected, actual};
}

void Comparator::record_mismatch(const std::string& location, const Scalar& expected,
                                 const Scalar& actual) {
  ++mismatches_;
  if (!first_) first_ = Counterexample{location, expected, actual};
}

void Comparator::finish(VerificationReport& r) const {
  r.comparisons += comparisons_;
  if (first_) {
    r.holds = false;
    r.status = Status::Fail;
    if (!r.counterexample) r.counterexample = first_;
  }
}

}  // namespace nilva
