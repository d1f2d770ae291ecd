#pragma once

#include <string>
#include <vector>

namespace zetalab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic (no timing, 15-significant-digit numbers)
};

struct CertifyOptions {
  bool quick = false;      // reduced sizes, same named checks
  std::string cli_path;    // when set, the determinism check spawns
                           // "<cli_path> certify --quick" twice and compares
                           // report bytes; empty selects an in-process check
};

// Runs every named check; order and names are stable.
std::vector<CheckResult> run_certify(const CertifyOptions& opt);

// One line per check plus a summary line; byte-deterministic.
std::string render_certify_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace zetalab
