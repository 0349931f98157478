#pragma once

#include <chrono>
#include <optional>

namespace skewres {

/// Per-thread wall-clock limit applied to each Groebner basis computation
/// started while the scope is alive. Scopes nest; the innermost wins.
class GroebnerBudget {
 public:
  explicit GroebnerBudget(std::optional<std::chrono::milliseconds> limit);
  ~GroebnerBudget();
  GroebnerBudget(const GroebnerBudget&) = delete;
  GroebnerBudget& operator=(const GroebnerBudget&) = delete;

  /// Limit in force on the calling thread, if any.
  static std::optional<std::chrono::milliseconds> current();

 private:
  std::optional<std::chrono::milliseconds> previous_;
};

/// Deadline for a single computation, derived from the current budget.
class Deadline {
 public:
  static Deadline from_budget();

  bool expired() const { return at_ && std::chrono::steady_clock::now() > *at_; }
  /// Throws BudgetExceeded naming `what` once the deadline has passed.
  void check(const char* what) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace skewres
