// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "nilva/verifier.hpp"

using namespace nilva;
using namespace nilva::verifier;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string param(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.params) {
    if (k == key) return v;
  }
  return "";
}

std::string describe(const VerificationReport& r) {
  std::string s = r.check;
  for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
  if (!r.variant.empty()) s += " [" + r.variant + "]";
  if (r.counterexample) s += " at " + r.counterexample->location;
  return s;
}

SuiteConfig config(std::vector<std::string> checks) {
  SuiteConfig c;
  c.checks = std::move(checks);
  return c;
}

/// Every result passes and the run covered `expected` results.
void all_pass(Outcome& o, const RunResult& r, std::size_t expected) {
  o.require(r.results.size() == expected,
            "expected " + std::to_string(expected) + " results, got " + std::to_string(r.results.size()));
  for (const auto& x : r.results) o.require(x.status == Status::Pass, "failed: " + describe(x));
  o.require(r.exit_code == kExitPass, "exit code " + std::to_string(r.exit_code));
}

Outcome lie_algebra() {
  Outcome o;
  const auto r = run(config({"lie"}));
  all_pass(o, r, 121 * 4);
  std::set<std::string> names;
  for (const auto& x : r.results) names.insert(x.check);
  o.require(names.count("lie.jacobi") && names.count("lie.pairing-invariance"), "missing lie checks");
  return o;
}

Outcome group_law() {
  Outcome o;
  const auto r = run(config({"group"}));
  int symbolic = 0, axioms = 0;
  for (const auto& x : r.results) {
    if (x.check == "group.associativity-symbolic") ++symbolic;
    if (x.check == "group.identity-inverse") {
      ++axioms;
      o.require(x.comparisons > 0, "no identity/inverse comparisons");
    }
    if (x.status == Status::Fail) o.require(false, "failed: " + describe(x));
  }
  o.require(symbolic == 49 && axioms == 49, "expected 49 parameter sets per check");
  o.require(r.exit_code == kExitPass, "nonzero exit");
  return o;
}

Outcome forms() {
  Outcome o;
  const auto r = run(config({"forms"}));
  all_pass(o, r, 49 * 4);
  return o;
}

Outcome kernels() {
  Outcome o;
  const auto r = run(config({"kernels"}));
  o.require(r.results.size() == 12, "expected 12 kernel results");
  std::set<std::string> controls;
  for (const auto& x : r.results) {
    if (x.check == "kernels.negative-control") {
      o.require(x.status == Status::Reported && !x.holds && x.counterexample.has_value(),
                "negative control did not report a counterexample at N=" + param(x, "N"));
      controls.insert(param(x, "N"));
    } else {
      o.require(x.status == Status::Pass, "failed: " + describe(x));
    }
  }
  o.require(controls == std::set<std::string>{"8", "12", "16"}, "negative control missing a window");
  return o;
}

Outcome mode_algebra() {
  Outcome o;
  auto c = config({"modes"});
  c.mode_grid = 4;
  c.triple_grid = 4;
  c.monomial_window = 12;
  const auto r = run(c);
  all_pass(o, r, 6 * 3);
  for (const auto& x : r.results) o.require(x.variant == "corrected", "unexpected variant " + x.variant);
  return o;
}

Outcome field_commutators() {
  Outcome o;
  auto c = config({"fields", "special-cases"});
  c.window = 6;
  const auto r = run(c);
  all_pass(o, r, 5 + 1);
  for (const auto& x : r.results) {
    if (x.check == "fields.commutators") o.require(param(x, "N") == "6" && param(x, "L") == "3", "window not 6/3");
  }
  return o;
}

Outcome currents() {
  Outcome o;
  auto c = config({"currents"});
  c.window = 6;
  const auto r = run(c);
  all_pass(o, r, 5 * 2);
  int square = 0;
  for (const auto& x : r.results) square += x.check == "currents.square";
  o.require(square == 5, "consistency square missing");
  return o;
}

Outcome taylor() {
  Outcome o;
  const auto r = run(config({"taylor"}));
  o.require(r.results.size() == 16, "expected 16 taylor results");
  for (const auto& x : r.results) {
    o.require(x.status == Status::Reported, "status not reported: " + describe(x));
    const int n = std::stoi(param(x, "N"));
    if (x.check == "taylor.factorial") {
      o.require(x.holds, "factorial form fails: " + describe(x));
    } else if (x.check == "taylor.printed") {
      if (n >= 2) o.require(!x.holds && x.counterexample.has_value(), "printed form holds: " + describe(x));
    } else {
      o.require(false, "unexpected check " + x.check);
    }
  }
  return o;
}

Outcome table_adjudication() {
  Outcome o;
  auto c = config({"modes", "fields"});
  c.variant = VariantChoice::Both;
  const auto r = run(c);
  bool printed_fields_fail = false;
  for (const auto& x : r.results) {
    if (x.variant == "corrected") o.require(x.status == Status::Pass, "corrected fails: " + describe(x));
    if (x.variant == "as-written" && x.check == "fields.commutators" && !x.holds) printed_fields_fail = true;
    if (x.variant == "as-written") o.require(x.status != Status::Fail, "printed result not marked reported");
  }
  o.require(printed_fields_fail, "printed table passes the field check");
  o.require(r.exit_code == kExitPass, "nonzero exit");
  o.require(r.diff.has_value(), "no diff section");
  bool localized = false;
  if (r.diff) {
    for (const auto& f : *r.diff) {
      const bool names_entry = std::find(f.entries.begin(), f.entries.end(), "[w2,y3_m]") != f.entries.end();
      if (!names_entry) continue;
      for (const auto& x : f.required_by) {
        if (x.check == "fields.commutators" && x.counterexample &&
            x.counterexample->location.find("[x2(z),y3(w)]") != std::string::npos) {
          localized = true;
        }
      }
    }
  }
  o.require(localized, "diff does not localize a field failure to [w2,y3_m]");
  const std::string doc = render_report(c, r);
  o.require(doc.find("\"[w2,y3_m]\"") != std::string::npos, "report diff does not name [w2,y3_m]");
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    auto c = config(suite_names());
    c.output = (dir / ("nilva_acceptance_" + std::to_string(i) + ".json")).string();
    std::ostringstream out, err;
    const int code = run_command(c, out, err);
    o.require(code == kExitPass, "check all exited " + std::to_string(code) + ": " + err.str());
    reports[i] = slurp(c.output);
    std::filesystem::remove(c.output);
  }
  o.require(!reports[0].empty(), "empty report");
  o.require(reports[0] == reports[1], "reports differ");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 finite Lie algebra", lie_algebra},
      {"2 group law", group_law},
      {"3 invariant forms", forms},
      {"4 kernels", kernels},
      {"5 mode algebra", mode_algebra},
      {"6 field commutators", field_commutators},
      {"7 current algebra", currents},
      {"8 Taylor lemma", taylor},
      {"9 table adjudication", table_adjudication},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", s);
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << secs << ")";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
            << std::endl;
  return failed ? 1 : 0;
}
