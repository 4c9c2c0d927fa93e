#include "bdeform/report.hpp"

#include <algorithm>

namespace bdeform {

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckResult& r) { return r.pass || r.separate; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckResult& r) { return !r.pass && !r.separate; }));
}

std::size_t Report::counted() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckResult& r) { return !r.separate; }));
}

std::string format_result(const CheckResult& r) {
  std::string s = r.pass ? "PASS " : "FAIL ";
  s += r.check;
  for (const auto& [k, v] : r.keys) s += " " + k + "=" + std::to_string(v);
  if (!r.pass && !r.mismatch.empty()) s += "  first mismatch: " + r.mismatch;
  if (!r.note.empty()) s += "  (" + r.note + ")";
  if (r.separate) s += "  [reported separately]";
  return s;
}

void print_report(std::ostream& os, const Report& r) {
  os << r.command;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& item : r.items) os << format_result(item) << "\n";
  os << (r.passed() ? "ok" : "FAILED") << ": " << r.counted() - r.failures() << "/" << r.counted()
     << " checks passed";
  if (r.counted() != r.items.size()) os << ", " << r.items.size() - r.counted() << " reported separately";
  os << "\n";
}

}  // namespace bdeform
