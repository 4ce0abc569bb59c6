#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvsim {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, const std::string& where = "")
      : std::runtime_error(where.empty() ? msg : msg + " (at " + where + ")") {}
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg,
                           std::vector<std::string> violations = {})
      : std::runtime_error(format(msg, violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string format(const std::string& msg, const std::vector<std::string>& v) {
    std::string s = msg;
    for (const auto& x : v) s += "\n  - " + x;
    return s;
  }
  std::vector<std::string> violations_;
};

// An approximation step could not stay within its error allotment.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& msg, std::vector<std::pair<std::string, double>> ledger = {})
      : std::runtime_error(msg), ledger_(std::move(ledger)) {}
  const std::vector<std::pair<std::string, double>>& ledger() const { return ledger_; }

 private:
  std::vector<std::pair<std::string, double>> ledger_;
};

// Configured caps exceeded (term count, Fock cutoff, series depth).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg, double best_achievable = -1.0)
      : std::runtime_error(msg), best_achievable_(best_achievable) {}
  // Best bound/eps the operation could have certified, when meaningful.
  double best_achievable() const { return best_achievable_; }

 private:
  double best_achievable_;
};

// Numerical failure: singular overlap pair, branch ambiguity, lost positivity.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvsim
