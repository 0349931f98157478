#include "skewres/budget.hpp"

#include <string>

#include "skewres/error.hpp"

namespace skewres {

namespace {
thread_local std::optional<std::chrono::milliseconds> tl_limit;
}

GroebnerBudget::GroebnerBudget(std::optional<std::chrono::milliseconds> limit) : previous_(tl_limit) {
  tl_limit = limit;
}

GroebnerBudget::~GroebnerBudget() { tl_limit = previous_; }

std::optional<std::chrono::milliseconds> GroebnerBudget::current() { return tl_limit; }

Deadline Deadline::from_budget() {
  Deadline d;
  if (tl_limit) d.at_ = std::chrono::steady_clock::now() + *tl_limit;
  return d;
}

void Deadline::check(const char* what) const {
  if (expired()) throw BudgetExceeded(std::string(what) + " exceeded its time budget");
}

}  // namespace skewres
