#pragma once

#include <bit>
#include <cstdint>

namespace gandy {

/// Abstract work-unit accumulator. Every operation that "costs" charges a
/// category here; the category breakdown always sums to the total, so bound
/// reports can attribute overruns. Evaluations running concurrently must use
/// distinct meters.
class CostMeter {
public:
    enum Category : int {
        Split = 0,     // character reads and counter updates while splitting
        Dispatch,      // rule selection
        BaseCalls,     // base-model decider/evaluator charges
        NodeVisits,    // term/formula nodes visited, character comparisons
        Substitution,  // truth-value substitution passes
        kCategoryCount
    };

    void charge(Category c, std::uint64_t n) {
        breakdown_[c] += n;
        units_ += n;
    }

    std::uint64_t units() const { return units_; }
    std::uint64_t category(Category c) const { return breakdown_[c]; }

    void add(const CostMeter& other) {
        for (int c = 0; c < kCategoryCount; ++c)
            breakdown_[c] += other.breakdown_[c];
        units_ += other.units_;
    }

    void reset() {
        units_ = 0;
        for (auto& b : breakdown_)
            b = 0;
    }

private:
    std::uint64_t units_ = 0;
    std::uint64_t breakdown_[kCategoryCount] = {};
};

/// ceil(log2(n+1)): the charge for one counter update at value n.
inline std::uint64_t counterUpdateCharge(std::uint64_t n) {
    return n == 0 ? 0 : std::bit_width(n);
}

}  // namespace gandy
