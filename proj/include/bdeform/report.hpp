#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bdeform {

/// Outcome of one exact check, e.g. one (i, j) pair of a commutator sweep.
struct CheckResult {
  std::string check;                               // which identity
  std::vector<std::pair<std::string, int>> keys;   // indices such as i, j, s
  bool pass = true;
  std::string mismatch;                            // first differing term on failure
  std::string note;
  bool separate = false;                           // listed but not counted toward pass/fail
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> items;

  bool passed() const;
  std::size_t failures() const;
  std::size_t counted() const;
  void add(CheckResult r) { items.push_back(std::move(r)); }
};

/// Called once per finished check so long sweeps can stream progress.
using ResultSink = std::function<void(const CheckResult&)>;

std::string format_result(const CheckResult& r);
void print_report(std::ostream& os, const Report& r);

}  // namespace bdeform
