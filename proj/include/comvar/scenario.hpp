#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "comvar/field.hpp"
#include "comvar/groebner.hpp"

namespace comvar {

/// Run configuration. Loaded from a key=value file, then overridden by
/// command-line flags. Keys: field, seed, budget_pairs, budget_seconds, r,
/// include_heavy, certify_q, workers.
struct Config {
  FieldSpec field = FieldSpec::prime(kDefaultPrime);
  std::uint64_t seed = 1;
  std::uint64_t budget_pairs = 1'000'000;
  /// Per Gröbner computation; 0 means the scenario's own default.
  double budget_seconds = 0.0;
  std::optional<int> r;
  bool include_heavy = false;
  bool certify_q = false;
  unsigned workers = 1;

  /// Throws std::invalid_argument naming the key on a bad key or value.
  void set(std::string_view key, std::string_view value);
  /// Lines "key = value"; blank lines and '#' comments are skipped. Throws
  /// std::invalid_argument with the line number on malformed input.
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  nlohmann::json to_json() const;
};

enum class Provenance { Published, Trivial, Derived };
enum class Status { Pass, Fail, Aborted, Error };

std::string to_string(Provenance p);
std::string to_string(Status s);

/// One labelled comparison inside a scenario, e.g. label "r=3".
struct CaseResult {
  std::string label;
  nlohmann::json measured;
  nlohmann::json expected;
  bool passed() const { return measured == expected; }
};

struct Report {
  std::string id;
  std::string claim;
  Status status = Status::Error;
  Provenance provenance = Provenance::Derived;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CaseResult> cases;
  std::vector<std::uint64_t> seeds;
  std::string field;
  /// Sums over every Gröbner computation the scenario ran.
  std::uint64_t pairs = 0;
  std::size_t max_basis_size = 0;
  /// Mismatching cases, the abort reason or the error message.
  std::string detail;
  bool heavy = false;
  /// Result of the rerun over Q when certify_q is set.
  std::optional<Status> certify_q;
  double seconds = 0.0;

  /// Keys are sorted, so equal reports serialize identically. Timing lives
  /// under "timing" and is omitted when with_timing is false.
  nlohmann::json to_json(bool with_timing = true) const;
};

/// Collects measurements and engine statistics while a scenario runs.
class ScenarioContext {
 public:
  explicit ScenarioContext(const Config& config) : config_(config) {}

  const Config& config() const { return config_; }
  const FieldSpec& field() const { return config_.field; }
  std::uint64_t seed() const { return config_.seed; }
  GbBudget budget(double default_seconds = 0.0) const;
  /// r values to run: {config.r} when set, otherwise defaults.
  std::vector<int> r_values(std::vector<int> defaults) const;

  void record(std::string label, nlohmann::json measured, nlohmann::json expected);
  void add_stats(const GbStats& stats);
  void add_seed(std::uint64_t seed);

  /// Budget-checked helpers that add their statistics to the report.
  GroebnerBasis gb(const IdealPresentation& I, double default_seconds = 0.0);
  long dimension(const IdealPresentation& I, double default_seconds = 0.0);

  std::vector<CaseResult>& cases() { return cases_; }
  std::vector<std::uint64_t>& seeds() { return seeds_; }
  std::uint64_t pairs() const { return pairs_; }
  std::size_t max_basis_size() const { return max_basis_; }

 private:
  Config config_;
  std::vector<CaseResult> cases_;
  std::vector<std::uint64_t> seeds_;
  std::uint64_t pairs_ = 0;
  std::size_t max_basis_ = 0;
};

struct Scenario {
  std::string id;
  std::string claim;
  Provenance provenance = Provenance::Derived;
  /// Acceptance criteria (1..11) this scenario covers.
  std::vector<int> criteria;
  /// Excluded from suites unless include_heavy is set; an abort does not
  /// fail a suite.
  bool heavy = false;
  /// Reruns over Q are meaningful (the scenario reads ctx.field()).
  bool field_sensitive = false;
  /// Default per-computation time cap in seconds (0 = none).
  double default_seconds = 0.0;
  std::function<void(ScenarioContext&)> run;
};

const std::vector<Scenario>& registry();
const Scenario* find_scenario(std::string_view id);

/// Glob match with '*' and '?'; an empty filter matches everything.
bool matches_filter(std::string_view filter, std::string_view id);

/// Runs one scenario. Unknown ids throw std::invalid_argument; everything
/// else is reported through the status.
Report run_scenario(std::string_view id, const Config& config);

struct SuiteResult {
  /// Sorted by scenario id.
  std::vector<Report> reports;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

/// Runs every matching scenario (heavy ones only with include_heavy) on
/// config.workers threads. Exit code: 1 if any scenario failed or errored,
/// else 3 if a non-heavy scenario aborted on budget, else 0.
SuiteResult run_suite(std::string_view filter, const Config& config);

/// Exit code for a single report: 0 pass, 1 fail or error, 3 aborted.
int exit_code_for(const Report& report);

nlohmann::json suite_to_json(const SuiteResult& suite, const Config& config,
                             bool with_timing = true);

struct AuditEntry {
  int criterion = 0;
  std::string summary;
  std::vector<std::string> scenarios;
};

/// One entry per acceptance criterion with the scenarios covering it.
std::vector<AuditEntry> audit();

}  // namespace comvar
