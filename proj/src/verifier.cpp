#include "nilva/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nilva/diff_forms.hpp"
#include "nilva/dist_kernels.hpp"
#include "nilva/log_fields.hpp"
#include "nilva/mode_algebra.hpp"
#include "nilva/nil_group.hpp"

namespace nilva::verifier {

using json = nlohmann::ordered_json;
using modes::Fix;
using modes::Variant;

namespace {

const std::set<std::string> kVariantSuites = {"modes", "fields", "currents", "special-cases"};
const std::set<std::string> kFieldSuites = {"fields", "currents", "special-cases", "taylor"};
// Suites whose kernels involve rl or t and need log-degree 3.
const std::set<std::string> kCubicLogSuites = {"kernels", "fields", "currents", "special-cases"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string unquote(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("invalid integer for " + key + ": '" + text + "'");
  }
  if (used != s.size()) throw ConfigError("invalid integer for " + key + ": '" + text + "'");
  return v;
}

std::vector<Params> square(std::int64_t lo, std::int64_t hi) {
  std::vector<Params> out;
  for (std::int64_t k = lo; k <= hi; ++k) {
    for (std::int64_t j = lo; j <= hi; ++j) out.push_back({k, j});
  }
  return out;
}

bool any_selected(const SuiteConfig& cfg, const std::set<std::string>& suites) {
  return std::any_of(cfg.checks.begin(), cfg.checks.end(), [&](const auto& c) { return suites.count(c) > 0; });
}

std::vector<Variant> variants_of(VariantChoice v) {
  switch (v) {
    case VariantChoice::AsWritten: return {Variant::as_written()};
    case VariantChoice::Corrected: return {Variant::corrected()};
    case VariantChoice::Both: return {Variant::as_written(), Variant::corrected()};
  }
  return {};
}

fields::FieldWindow field_window(const SuiteConfig& cfg) {
  fields::FieldWindow w;
  w.N = cfg.window.value_or(6);
  w.L = cfg.log_degree;
  w.monomials = cfg.monomial_window;
  return w;
}

std::vector<int> kernel_windows(const SuiteConfig& cfg) {
  if (cfg.window) return {*cfg.window};
  return {8, 12, 16};
}

using Job = std::function<VerificationReport()>;

/// Jobs for one suite under one table variant.  Variant-independent suites
/// ignore `v`.
void variant_jobs(const SuiteConfig& cfg, const std::string& suite, Variant v, std::vector<Job>& jobs) {
  const auto fw = field_window(cfg);
  modes::JacobiOptions jo;
  jo.grid = cfg.mode_grid;
  jo.window = cfg.monomial_window;
  if (suite == "modes") {
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return modes::check_skew_symmetry(p, jo.grid, jo.window, v); });
      jobs.push_back([=] { return modes::check_jacobi(p, jo, v); });
      modes::JacobiOptions to = jo;
      to.grid = cfg.triple_grid;
      jobs.push_back([=] { return modes::check_jacobi_y1y1y3(p, to, v); });
    }
  } else if (suite == "fields") {
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return fields::verify_theorem_principal(p, fw, v); });
    }
  } else if (suite == "currents") {
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return fields::verify_current_algebra(p, fw, v); });
      jobs.push_back([=] { return fields::check_consistency_square(p, fw, v); });
    }
  } else if (suite == "special-cases") {
    jobs.push_back([=] { return fields::check_special_cases(fw, v); });
  }
}

void plain_jobs(const SuiteConfig& cfg, const std::string& suite, std::vector<Job>& jobs) {
  const std::uint64_t seed = cfg.seed;
  if (suite == "lie") {
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return lie::check_jacobi_finite(p); });
      jobs.push_back([=] { return lie::check_pairing_invariance(p); });
      jobs.push_back([=] { return lie::check_skew_finite(p); });
      jobs.push_back([=] { return lie::check_dorfman_frame(p); });
    }
  } else if (suite == "group") {
    jobs.push_back([] { return group::check_associativity_generic(); });
    jobs.push_back([] {
      auto r = group::check_associativity_generic(group::GroupLaw::AsPrinted);
      r.mark_reported();
      return r;
    });
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return group::check_associativity(p, group::AssocMode::Symbolic); });
      jobs.push_back([=] { return group::check_identity_inverse(p, 100, seed); });
      jobs.push_back([=] { return group::check_heisenberg_embedding(p, 100, seed); });
    }
  } else if (suite == "forms") {
    for (const auto& p : params_for(cfg, suite)) {
      jobs.push_back([=] { return forms::check_left_invariance(p); });
      jobs.push_back([=] { return forms::check_maurer_cartan(p); });
      jobs.push_back([=] { return forms::check_d_squared(p, 100, seed); });
      jobs.push_back([=] { return forms::check_unipotent(p); });
    }
  } else if (suite == "kernels") {
    for (int n : kernel_windows(cfg)) {
      const kernels::Window w{n, cfg.log_degree};
      jobs.push_back([=] { return kernels::check_kernel_identities(w); });
      jobs.push_back([=] { return kernels::check_kernel_symmetries(w); });
      jobs.push_back([=] { return kernels::check_negative_control(w); });
      jobs.push_back([=] { return kernels::check_series_sanity(w); });
    }
  } else if (suite == "taylor") {
    const auto fw = field_window(cfg);
    const Params p = params_for(cfg, suite).front();
    for (int which = 0; which < 2; ++which) {
      for (int n = 0; n <= 3; ++n) {
        for (bool factorial : {true, false}) {
          jobs.push_back([=] {
            // alpha1 and alpha2: log-free currents.
            const auto f = fields::current_fields(p)[which];
            auto r = fields::check_taylor_lemma(f, which == 0 ? "alpha1" : "alpha2", n, fw, factorial);
            r.add_param("k", std::to_string(p.k));
            r.add_param("j", std::to_string(p.j));
            return r;
          });
        }
      }
    }
  }
}

/// Runs jobs on `workers` threads; results keep job order.  The first
/// exception in job order is rethrown.
std::vector<VerificationReport> execute(const std::vector<Job>& jobs, int workers) {
  std::vector<VerificationReport> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
      out[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json scalar_json(const Scalar& s) { return s.fraction(); }

json report_json(const VerificationReport& r, bool with_variant = true) {
  json j;
  j["check"] = r.check;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (with_variant) j["variant"] = r.variant.empty() ? json(nullptr) : json(r.variant);
  j["status"] = to_string(r.status);
  j["holds"] = r.holds;
  if (r.counterexample) {
    j["counterexample"] = {{"location", r.counterexample->location},
                           {"expected", scalar_json(r.counterexample->expected)},
                           {"actual", scalar_json(r.counterexample->actual)}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["comparisons"] = r.comparisons;
  j["notes"] = r.notes;
  return j;
}

std::string params_key(const VerificationReport& r) {
  std::string s = r.check;
  for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
  return s;
}

}  // namespace

std::string to_string(VariantChoice v) {
  switch (v) {
    case VariantChoice::AsWritten: return "as-written";
    case VariantChoice::Corrected: return "corrected";
    case VariantChoice::Both: return "both";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lie",   "group",    "forms",         "kernels", "modes",
                                                 "fields", "currents", "special-cases", "taylor"};
  return names;
}

std::vector<Params> params_for(const SuiteConfig& cfg, const std::string& suite) {
  if (cfg.k || cfg.j) return {{cfg.k.value_or(0), cfg.j.value_or(0)}};
  if (cfg.params_list) return *cfg.params_list;
  if (suite == "lie") return square(-5, 5);
  if (suite == "group" || suite == "forms") return square(-3, 3);
  if (suite == "modes") return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}, {-1, 2}};
  if (suite == "taylor") return {{1, 1}};
  return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}};
}

std::vector<std::string> parse_suites(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item == "all") {
      for (const auto& n : suite_names()) out.push_back(n);
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end()) {
      throw ConfigError("unknown suite '" + item + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError("no suite selected");
  // Execution order is the canonical suite order.
  std::vector<std::string> ordered;
  for (const auto& n : suite_names()) {
    if (std::find(out.begin(), out.end(), n) != out.end()) ordered.push_back(n);
  }
  return ordered;
}

VariantChoice parse_variant(const std::string& s) {
  const std::string t = trim(s);
  if (t == "as-written") return VariantChoice::AsWritten;
  if (t == "corrected") return VariantChoice::Corrected;
  if (t == "both") return VariantChoice::Both;
  throw ConfigError("unknown variant '" + s + "' (expected as-written, corrected or both)");
}

std::vector<Params> parse_params_list(const std::string& s) {
  std::vector<std::int64_t> nums;
  std::string cur;
  std::string shape;
  for (char c : s + ";") {
    if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
      cur += c;
      continue;
    }
    if (!cur.empty()) {
      nums.push_back(parse_int("params", cur));
      cur.clear();
    }
    if (c != ',' && c != ';' && c != '[' && c != ']' && c != '(' && c != ')' && c != ' ' && c != '\t') {
      throw ConfigError("invalid params list '" + s + "'");
    }
  }
  if (nums.empty() || nums.size() % 2 != 0) throw ConfigError("params list needs (k, j) pairs: '" + s + "'");
  std::vector<Params> out;
  for (std::size_t i = 0; i < nums.size(); i += 2) out.push_back({nums[i], nums[i + 1]});
  return out;
}

void apply_config_text(SuiteConfig& cfg, const std::string& text) {
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = unquote(line.substr(eq + 1));
    if (key == "suite" || key == "checks") {
      cfg.checks = parse_suites(value);
    } else if (key == "k") {
      cfg.k = parse_int(key, value);
    } else if (key == "j") {
      cfg.j = parse_int(key, value);
    } else if (key == "params") {
      cfg.params_list = parse_params_list(value);
    } else if (key == "window") {
      cfg.window = static_cast<int>(parse_int(key, value));
    } else if (key == "log-degree") {
      cfg.log_degree = static_cast<int>(parse_int(key, value));
    } else if (key == "mode-grid") {
      cfg.mode_grid = parse_int(key, value);
    } else if (key == "triple-grid") {
      cfg.triple_grid = parse_int(key, value);
    } else if (key == "monomial-window") {
      cfg.monomial_window = parse_int(key, value);
    } else if (key == "variant") {
      cfg.variant = parse_variant(value);
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "report" || key == "output") {
      cfg.output = value;
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(SuiteConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

void validate(const SuiteConfig& cfg) {
  if (cfg.checks.empty()) throw ConfigError("no suite selected");
  for (const auto& c : cfg.checks) {
    if (std::find(suite_names().begin(), suite_names().end(), c) == suite_names().end()) {
      throw ConfigError("unknown suite '" + c + "'");
    }
  }
  if (cfg.window && *cfg.window < 1) throw ConfigError("window must be positive");
  if (cfg.window && *cfg.window > 64) throw ConfigError("window above 64 is not supported");
  if (any_selected(cfg, kFieldSuites) && cfg.window && *cfg.window < 4) {
    throw ConfigError("field and current checks need window >= 4");
  }
  if (cfg.log_degree < 1 || cfg.log_degree > 3) throw ConfigError("log-degree must lie in 1..3");
  if (any_selected(cfg, kCubicLogSuites) && cfg.log_degree != 3) {
    throw ConfigError("checks involving rl or t need log-degree 3");
  }
  if (cfg.mode_grid < 0 || cfg.triple_grid < 0) throw ConfigError("grids must be non-negative");
  if (cfg.monomial_window < 1) throw ConfigError("monomial-window must be positive");
  if (cfg.mode_grid > cfg.monomial_window || cfg.triple_grid > cfg.monomial_window) {
    throw ConfigError("mode grids must not exceed the monomial window");
  }
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
  auto check_params = [](const Params& p) {
    if (p.k < -1000 || p.k > 1000 || p.j < -1000 || p.j > 1000) throw ConfigError("|k|, |j| must be at most 1000");
  };
  if (cfg.params_list) {
    if (cfg.params_list->empty()) throw ConfigError("empty params list");
    for (const auto& p : *cfg.params_list) check_params(p);
  }
  check_params({cfg.k.value_or(0), cfg.j.value_or(0)});
}

RunResult run(const SuiteConfig& cfg) {
  validate(cfg);
  const auto variants = variants_of(cfg.variant);
  std::vector<Job> jobs;
  std::vector<bool> reported;
  for (const auto& suite : cfg.checks) {
    if (kVariantSuites.count(suite)) {
      for (const auto& v : variants) {
        variant_jobs(cfg, suite, v, jobs);
        reported.resize(jobs.size(), v == Variant::as_written());
      }
    } else {
      plain_jobs(cfg, suite, jobs);
      reported.resize(jobs.size(), false);
    }
  }

  // Leave-one-out runs from the corrected table attribute printed-table
  // failures to individual entries.
  const bool audit = cfg.variant != VariantChoice::Corrected && any_selected(cfg, kVariantSuites);
  std::vector<std::size_t> audit_fix;
  const std::size_t main_jobs = jobs.size();
  if (audit) {
    for (int f = 0; f < modes::kFixCount; ++f) {
      for (const auto& suite : cfg.checks) {
        if (!kVariantSuites.count(suite)) continue;
        variant_jobs(cfg, suite, Variant::corrected().without(static_cast<Fix>(f)), jobs);
        audit_fix.resize(jobs.size() - main_jobs, static_cast<std::size_t>(f));
      }
    }
  }

  auto all = execute(jobs, cfg.jobs);
  RunResult out;
  for (std::size_t i = 0; i < main_jobs; ++i) {
    if (reported[i]) all[i].mark_reported();
    if (all[i].status == Status::Fail) out.exit_code = kExitFail;
    out.results.push_back(std::move(all[i]));
  }
  if (audit) {
    std::vector<FixFinding> findings(modes::kFixCount);
    for (int f = 0; f < modes::kFixCount; ++f) {
      findings[f].fix = modes::fix_name(static_cast<Fix>(f));
      findings[f].entries = modes::fix_entries(static_cast<Fix>(f));
      findings[f].description = modes::fix_description(static_cast<Fix>(f));
    }
    for (std::size_t i = main_jobs; i < all.size(); ++i) {
      auto& r = all[i];
      if (r.holds) continue;
      r.mark_reported();
      findings[audit_fix[i - main_jobs]].required_by.push_back(std::move(r));
    }
    out.diff = std::move(findings);
  }
  return out;
}

std::string render_report(const SuiteConfig& cfg, const RunResult& r) {
  json doc;
  doc["version"] = kReportVersion;
  json c;
  c["checks"] = cfg.checks;
  if (cfg.k || cfg.j) {
    c["params"] = json::array({json::array({cfg.k.value_or(0), cfg.j.value_or(0)})});
  } else if (cfg.params_list) {
    json ps = json::array();
    for (const auto& p : *cfg.params_list) ps.push_back(json::array({p.k, p.j}));
    c["params"] = ps;
  } else {
    c["params"] = "suite-defaults";
  }
  c["window"] = cfg.window ? json(*cfg.window) : json("suite-defaults");
  c["log_degree"] = cfg.log_degree;
  c["mode_grid"] = cfg.mode_grid;
  c["triple_grid"] = cfg.triple_grid;
  c["monomial_window"] = cfg.monomial_window;
  c["variant"] = to_string(cfg.variant);
  c["seed"] = cfg.seed;
  doc["config"] = c;

  json results = json::array();
  for (const auto& rep : r.results) results.push_back(report_json(rep));
  doc["results"] = results;

  if (!r.diff) {
    doc["diff"] = nullptr;
  } else {
    json d;
    if (cfg.variant == VariantChoice::Both) {
      // Side-by-side outcomes of checks whose verdict depends on the table.
      std::map<std::string, std::pair<const VerificationReport*, const VerificationReport*>> pairs;
      std::vector<std::string> order;
      for (const auto& rep : r.results) {
        if (rep.variant.empty()) continue;
        const auto key = params_key(rep);
        if (!pairs.count(key)) order.push_back(key);
        auto& slot = pairs[key];
        (rep.variant == "as-written" ? slot.first : slot.second) = &rep;
      }
      json changed = json::array();
      for (const auto& key : order) {
        const auto [aw, co] = pairs[key];
        if (!aw || !co || aw->holds == co->holds) continue;
        json e;
        e["check"] = aw->check;
        json params = json::object();
        for (const auto& [k, v] : aw->params) params[k] = v;
        e["params"] = params;
        e["as_written_holds"] = aw->holds;
        e["corrected_holds"] = co->holds;
        const auto& ce = aw->holds ? co->counterexample : aw->counterexample;
        if (ce) {
          e["counterexample"] = {{"location", ce->location},
                                 {"expected", scalar_json(ce->expected)},
                                 {"actual", scalar_json(ce->actual)}};
        }
        changed.push_back(e);
      }
      d["changed"] = changed;
    }
    json fixes = json::array();
    for (const auto& f : *r.diff) {
      json e;
      e["fix"] = f.fix;
      e["entries"] = f.entries;
      e["description"] = f.description;
      e["required"] = !f.required_by.empty();
      json req = json::array();
      for (const auto& rep : f.required_by) req.push_back(report_json(rep));
      e["failures_without_fix"] = req;
      fixes.push_back(e);
    }
    d["fixes"] = fixes;
    doc["diff"] = d;
  }
  return doc.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write report to '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw ConfigError("cannot write report to '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move report into place at '" + path + "': " + ec.message());
  }
}

int run_command(const SuiteConfig& cfg, std::ostream& out, std::ostream& err) {
  RunResult r;
  try {
    r = run(cfg);
  } catch (const ConfigError& e) {
    err << "nilva: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "nilva: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  for (const auto& rep : r.results) {
    out << to_string(rep.status) << "  " << rep.check;
    for (const auto& [k, v] : rep.params) out << " " << k << "=" << v;
    if (!rep.variant.empty()) out << " [" << rep.variant << "]";
    if (!rep.holds && rep.counterexample) {
      out << "  at " << rep.counterexample->location << ": expected " << rep.counterexample->expected.fraction()
          << ", got " << rep.counterexample->actual.fraction();
    }
    char t[32];
    std::snprintf(t, sizeof t, "  (%.2fs)", rep.seconds);
    out << t << "\n";
  }
  if (r.diff) {
    for (const auto& f : *r.diff) {
      out << "table " << f.fix << ": " << (f.required_by.empty() ? "not required" : "required") << " by "
          << f.required_by.size() << " check(s)";
      if (!f.required_by.empty() && f.required_by.front().counterexample) {
        out << "; first: " << f.required_by.front().check << " at " << f.required_by.front().counterexample->location;
      }
      out << "\n";
    }
  }
  if (!cfg.output.empty()) {
    try {
      write_atomically(cfg.output, render_report(cfg, r));
    } catch (const std::exception& e) {
      err << "nilva: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  return r.exit_code;
}

namespace {

struct Topic {
  const char* name;
  const char* text;
};

const Topic kTopics[] = {
    {"lie",
     "Finite Lie algebra h_{k,j} with basis alpha_1..3, beta_1..3.\n"
     "Checks: Jacobi identity and skew-symmetry on all basis triples, invariance of the pairing\n"
     "<alpha_i, beta_j> = delta_ij, and that the global frame of TN + T*N on the Heisenberg\n"
     "nilmanifold N(k) closes under the H-twisted Dorfman bracket onto the same structure constants.\n"
     "Contract: integer structure constants, exact rational arithmetic, every basis triple."},
    {"group",
     "Group law on the six-dimensional nilpotent group M(k,j).\n"
     "Checks: associativity as a polynomial identity in 18 indeterminates (and with k, j symbolic),\n"
     "identity and inverse axioms on seeded rational points, and embedding of the Heisenberg product.\n"
     "The law with the printed y2 correction term is run as a reported control.\n"
     "Contract: polynomial identities compared coefficientwise over Q."},
    {"forms",
     "Left-invariant coframe of M(k,j).\n"
     "Checks: left-invariance of all six forms under symbolic translation, the Maurer-Cartan equations\n"
     "of the coframe against the structure constants, d^2 = 0, and unipotence of the coframe matrix.\n"
     "Contract: polynomial differential forms with rational coefficients, exact."},
    {"kernels",
     "Two-variable distributions delta(z-w), log(z-w), rl(z,w) and t(z,w).\n"
     "Checks: d_z log = delta-type identities, d_z d_w rl, d_z d_w t and their companions on the\n"
     "window |p| <= N, rl symmetric and t antisymmetric under z <-> w, the closed polylogarithm\n"
     "forms of the coefficients, and a negative control that must fail.\n"
     "Contract: coefficients compared only where the truncated kernels are exact; no tolerance."},
    {"modes",
     "Mode algebra of the logarithmic vertex algebra: generators x^i_n, y^i_n, w_i, p_i.\n"
     "Checks: skew-symmetry of the bracket table and the Jacobi identity on every generator triple\n"
     "with modes in [-grid, grid], plus the (y1_l, y1_n, y3_m) triple, per normal-ordered monomial.\n"
     "Contract: infinite convolution sums are kept symbolic and expanded exactly on the monomial\n"
     "window; no series is truncated before comparison."},
    {"skew", "Skew-symmetry of the mode bracket table: [a,b] = -[b,a] for every generator pair in the grid.\n"
             "Contract: exact per monomial on the monomial window."},
    {"jacobi",
     "Jacobi identity [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 in the enveloping algebra, all ordered\n"
     "triples of generators with modes in [-grid, grid]. Brackets of quadratic terms use the Leibniz rule.\n"
     "Contract: exact per normal-ordered monomial; cubic terms and non-commuting products abort."},
    {"fields",
     "Logarithmic fields x_i(z), y_i(z) of the double M(k,j) built from the modes.\n"
     "Checks: [a(z), b(w)] for every pair of coordinate fields against the closed form in delta,\n"
     "log(z-w), rl and t with field-valued coefficients.\n"
     "Contract: every coefficient of z^p w^q (log z)^a (log w)^b with |p|,|q| <= N, a,b <= 3, and\n"
     "every monomial on the monomial window, compared exactly."},
    {"currents",
     "Currents alpha_i(z), beta_i(z) built from the coordinate fields.\n"
     "Checks: [alpha(z), beta(w)] = [alpha,beta](w) delta(z-w) + <alpha,beta> d_w delta(z-w), and the\n"
     "consistency square: d_z d_w of the coordinate commutators equals the commutators of the\n"
     "differentiated fields.\n"
     "Contract: as for fields."},
    {"special-cases",
     "Parameters (0,0) and (0,1): the field shapes reduce to their closed forms and the commutators\n"
     "reduce to the free case with its log correction and the rl-kernel case.\n"
     "Contract: as for fields."},
    {"taylor",
     "Taylor expansion against derivatives of delta:\n"
     "d_w^N delta(z-w) a(z) = d_w^N delta(z-w) sum_{j<=N} (z-w)^j d^j a(w) c_j.\n"
     "Run with c_j = 1/j! and with c_j = 1; both outcomes are reported and never change the exit code.\n"
     "Contract: exact on the field window."},
    {"determinism",
     "Reports depend only on the configuration: fixed iteration order, seeded samples, ordered merge\n"
     "of parallel work, and no timing in the report file."},
};

}  // namespace

std::optional<std::string> explain(const std::string& name) {
  for (const auto& t : kTopics) {
    if (name == t.name) return std::string(t.text);
  }
  return std::nullopt;
}

std::vector<std::string> explain_topics() {
  std::vector<std::string> out;
  for (const auto& t : kTopics) out.emplace_back(t.name);
  return out;
}

}  // namespace nilva::verifier
