#ifndef COMPCAT_ERRORS_HPP
#define COMPCAT_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compcat {

// Thrown for violated preconditions and exhausted budgets. `code` is the
// stable machine-readable name (e.g. "NonCospan", "BudgetExceeded").
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct BudgetExceeded : Error {
  long long candidates;
  explicit BudgetExceeded(long long n, const std::string& what)
      : Error("BudgetExceeded", what + " (candidates " + std::to_string(n) + ")"),
        candidates(n) {}
};

// One violated law with enough witness data to reproduce it by hand.
struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }
  bool has(const std::string& code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
  std::string to_string() const {
    if (violations.empty()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "\n";
      out += v.code + ": " + v.detail;
    }
    return out;
  }
};

// Validators return the value only when the report is clean.
template <typename T>
struct Checked {
  std::optional<T> value;
  ValidationReport report;

  bool ok() const { return report.ok(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

template <typename T>
Checked<T> checked_ok(T v) {
  Checked<T> c;
  c.value = std::move(v);
  return c;
}

template <typename T>
Checked<T> checked_fail(ValidationReport r) {
  Checked<T> c;
  c.report = std::move(r);
  return c;
}

}  // namespace compcat

#endif
