#ifndef NILVA_REPORT_HPP
#define NILVA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilva/scalar.hpp"

namespace nilva {

enum class Status { Pass, Fail, Reported };

std::string to_string(Status s);

struct Counterexample {
  std::string location;
  Scalar expected;
  Scalar actual;
};

/// Outcome of one verification check.
///
/// `holds` records whether the identity under test held; `status` is what the
/// exit code sees.  A `Reported` result never fails a run.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::string variant;
  Status status = Status::Pass;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  std::uint64_t comparisons = 0;
  double seconds = 0.0;

  bool passed() const { return status != Status::Fail; }
  void add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  /// Downgrades a failing outcome to `Reported`, keeping `holds` and the
  /// counterexample.
  void mark_reported() { status = Status::Reported; }
};

/// Collects exact comparisons and keeps the first mismatch.
///
/// Callers are expected to feed locations in a deterministic order.
class Comparator {
 public:
  void expect_equal(const std::string& location, const Scalar& expected, const Scalar& actual);
  void count(std::uint64_t n = 1) { comparisons_ += n; }
  /// Registers a mismatch found by a structural comparison.
  void record_mismatch(const std::string& location, const Scalar& expected, const Scalar& actual);
  bool ok() const { return !first_; }
  std::uint64_t mismatches() const { return mismatches_; }
  std::uint64_t comparisons() const { return comparisons_; }
  const std::optional<Counterexample>& first() const { return first_; }
  /// Writes status, holds, counterexample and comparison count.
  void finish(VerificationReport& r) const;

 private:
  std::optional<Counterexample> first_;
  std::uint64_t mismatches_ = 0;
  std::uint64_t comparisons_ = 0;
};

}  // namespace nilva

#endif
