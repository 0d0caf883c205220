#ifndef NILVA_VERIFIER_HPP
#define NILVA_VERIFIER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilva/lie_structure.hpp"
#include "nilva/report.hpp"

namespace nilva::verifier {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kReportVersion = "1";

enum class VariantChoice { AsWritten, Corrected, Both };

std::string to_string(VariantChoice v);

/// Invalid configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Suite names accepted by `check`, in execution order.
const std::vector<std::string>& suite_names();

/// Every option is optional; unset values fall back to per-suite defaults.
struct SuiteConfig {
  std::vector<std::string> checks;
  /// A single (k, j); either one overrides `params_list`, the other
  /// defaulting to 0.
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> j;
  std::optional<std::vector<Params>> params_list;
  std::optional<int> window;
  int log_degree = 3;
  std::int64_t mode_grid = 4;
  std::int64_t triple_grid = 4;
  std::int64_t monomial_window = 12;
  VariantChoice variant = VariantChoice::Corrected;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string output;
};

/// Parameter sets for a suite after applying overrides.
std::vector<Params> params_for(const SuiteConfig& cfg, const std::string& suite);

/// Parses "lie", "all" or a comma list into suite names.
std::vector<std::string> parse_suites(const std::string& s);
VariantChoice parse_variant(const std::string& s);
/// "0,1;1,1" or "[[0,1],[1,1]]".
std::vector<Params> parse_params_list(const std::string& s);

/// Applies `key = value` lines (`#` comments, optional quotes) to `cfg`.
void apply_config_text(SuiteConfig& cfg, const std::string& text);
void apply_config_file(SuiteConfig& cfg, const std::string& path);

/// Throws ConfigError on inconsistent settings.
void validate(const SuiteConfig& cfg);

struct FixFinding {
  std::string fix;
  std::vector<std::string> entries;
  std::string description;
  /// Corrected-minus-this-fix results that fail.
  std::vector<VerificationReport> required_by;
};

struct RunResult {
  std::vector<VerificationReport> results;
  /// Present when the printed table took part in the run.
  std::optional<std::vector<FixFinding>> diff;
  int exit_code = kExitPass;
};

/// Runs the selected suites.  Internal invariant breaches propagate as
/// exceptions.
RunResult run(const SuiteConfig& cfg);

/// Deterministic JSON document {version, config, results, diff}.
std::string render_report(const SuiteConfig& cfg, const RunResult& r);

/// Writes through a temporary file and rename.
void write_atomically(const std::string& path, const std::string& text);

/// Full command: run, print summary lines, write the report.  Maps errors
/// to exit codes.
int run_command(const SuiteConfig& cfg, std::ostream& out, std::ostream& err);

/// Statement and exactness contract for a check; nullopt if unknown.
std::optional<std::string> explain(const std::string& name);
std::vector<std::string> explain_topics();

}  // namespace nilva::verifier

#endif
