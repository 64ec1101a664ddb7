#pragma once

#include <cstdint>

#include "hopfchi/errors.hpp"

namespace hopfchi {

// Elementary-step cap for one enumeration (orientation search nodes, colorings,
// set compositions). The CLI wires --budget / HOPFCHI_BUDGET into this.
struct Budget {
    std::uint64_t steps = 10'000'000;
};

class StepCounter {
public:
    explicit StepCounter(Budget budget) : limit_(budget.steps) {}

    void charge(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_) throw BudgetError("enumeration budget exceeded");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace hopfchi
