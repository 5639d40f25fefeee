#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace symcone {

struct ReportItem {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;
};

struct Report {
  std::vector<ReportItem> items;

  bool all_passed() const;
  std::optional<std::string> first_failure() const;
};

/// Runs every lattice-level check on the built-in models, in a fixed order,
/// and writes one PASS/FAIL block per item with the exact values to `out`.
Report run_paper_report(std::ostream& out);

}  // namespace symcone
