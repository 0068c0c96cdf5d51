#ifndef HOLLOW_BUDGET_HPP
#define HOLLOW_BUDGET_HPP

#include <cstdint>

#include "hollow/errors.hpp"

namespace hollow {

// Node counter for the exhaustive searches.  Pathological inputs fail
// loudly instead of hanging.
struct SearchBudget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void tick(const char* where) {
        if (++used > limit) throw BudgetExceededError(where);
    }
    // Spend without searching, for cost known up front.
    void charge(std::uint64_t amount, const char* where) {
        used += amount;
        if (used > limit) throw BudgetExceededError(where);
    }
};

}  // namespace hollow

#endif
