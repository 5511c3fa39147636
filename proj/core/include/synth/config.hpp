#pragma once

#include <cstddef>

namespace synth {

/// Default frontier budget for bounded searches. Infinitely branching
/// relations must fail loudly instead of hanging, so every search takes a
/// budget and throws SearchBudgetExceeded when it is spent.
inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Default cap on the number of constituents a single enumeration may emit.
inline constexpr std::size_t kDefaultEnumerationBudget = 100'000;

/// Default cap on constituent recursion depth.
inline constexpr int kDefaultMaxConstituentDepth = 3;

}  // namespace synth
