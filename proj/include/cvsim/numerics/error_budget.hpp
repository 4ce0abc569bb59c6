#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvsim/errors.hpp"

namespace cvsim {

// Additive error accounting for a pipeline run. Every approximation step
// charges its certified bound under a label; exceeding the target raises.
class ErrorBudget {
 public:
  explicit ErrorBudget(double target_eps) : target_(target_eps) {
    if (!(target_eps > 0)) throw std::invalid_argument("ErrorBudget: target_eps must be positive");
  }

  double target() const { return target_; }

  double consumed() const {
    double s = 0;
    for (const auto& [label, amount] : ledger_) s += amount;
    return s;
  }

  double remaining() const { return target_ - consumed(); }

  void charge(const std::string& label, double amount) {
    if (amount < 0) throw std::invalid_argument("ErrorBudget: negative charge");
    if (consumed() + amount > target_ * (1 + 1e-12))
      throw BudgetError("error budget exceeded: step \"" + label + "\" needs " +
                            std::to_string(amount) + ", remaining " + std::to_string(remaining()),
                        ledger_);
    ledger_.emplace_back(label, amount);
  }

  const std::vector<std::pair<std::string, double>>& ledger() const { return ledger_; }

 private:
  double target_;
  std::vector<std::pair<std::string, double>> ledger_;
};

}  // namespace cvsim
