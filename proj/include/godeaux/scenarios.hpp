#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace godeaux {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string id;
  std::string anchor;   // formal statement from anchor_registry()
  CheckStatus status = CheckStatus::Skipped;
  std::string witness;  // exact value, or the reason for FAIL / SKIPPED
};

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int total() const { return pass + fail + skipped; }
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  /// Non-default run settings, e.g. {"a", "u"}.
  std::map<std::string, std::string> configuration;
  std::string version;
  std::string timestamp;  // ISO 8601 UTC; the only nondeterministic field

  ReportSummary summary() const;
  /// No FAIL rows.
  bool ok() const { return summary().fail == 0; }
  const Check* find(std::string_view id) const;
};

/// Anchor key -> formal statement of what a check establishes.
const std::map<std::string, std::string, std::less<>>& anchor_registry();
/// Throws InternalError for an unregistered key.
const std::string& anchor(std::string_view key);

struct QuinticSuiteConfig {
  bool perturb_a = false;       // a = u instead of u^2
  bool identity_sigma = false;  // replace sigma by the identity
  bool non_vacuity = true;      // append the perturbed rerun as a check row
};

VerificationReport run_quintic_suite(const QuinticSuiteConfig& config = {});
VerificationReport run_v_lattice_suite();
VerificationReport run_cover_suite();
VerificationReport run_fibre_suite();

/// Suite names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view name);

/// Concatenates the checks; suite names are joined with '+'.
VerificationReport merge_reports(const std::vector<VerificationReport>& reports);

std::string to_json(const VerificationReport& report);
std::string to_markdown(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Lattice declarations of the V-lattice (same content as data/godeaux.lat).
std::string_view v_lattice_declarations();

}  // namespace godeaux
