#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace posa {

struct SearchBudget {
  long long node_limit = 100'000'000;
  double time_limit = 60.0;  // seconds
};

/// Counts search-tree nodes against a SearchBudget. The clock is sampled
/// every 1024 ticks so that node-bounded searches stay deterministic unless
/// the wall limit is actually reached.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    if (budget.node_limit <= 0 || budget.time_limit <= 0)
      throw std::invalid_argument("search budget must be positive");
  }

  /// False once the budget is exhausted; stays false afterwards.
  bool tick(long long nodes = 1) {
    if (exhausted_) return false;
    nodes_ += nodes;
    if (nodes_ > budget_.node_limit) {
      exhausted_ = true;
    } else if ((nodes_ & 1023) < nodes || nodes >= 1024) {
      if (elapsed() > budget_.time_limit) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  long long nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  /// Budget covering what is left, for handing to a nested search.
  SearchBudget remaining() const {
    SearchBudget b;
    b.node_limit = std::max(1LL, budget_.node_limit - nodes_);
    b.time_limit = std::max(1e-3, budget_.time_limit - elapsed());
    return b;
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  long long nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace posa
