#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kunzlab/refdata.hpp"

namespace kunzlab::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Context {
  Table1 table1;
  Table2 table2;
  unsigned threads = 0;
};

Context load_context(const std::string& ref_dir, unsigned threads);

/// Number of acceptance criteria.
constexpr int kCriteria = 10;

/// Runs acceptance criterion 1..kCriteria.
CheckResult acceptance(int criterion, const Context& ctx);

/// Named suites: tables, closed-forms, med, graphs, bounds, lower-bound,
/// trends, determinism, acceptance, all.
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for unknown names. `report` is called after
/// every check.
std::vector<CheckResult> run_suite(const std::string& suite, const Context& ctx,
                                   const std::function<void(const CheckResult&)>& report = {});

/// One line per result: "PASS name (detail)".
std::string format_line(const CheckResult& r);

}  // namespace kunzlab::verify
