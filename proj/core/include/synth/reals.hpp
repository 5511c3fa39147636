#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "synth/foundation.hpp"
#include "synth/rational.hpp"
#include "synth/systems.hpp"

namespace synth {

/// A computable real in ]-1,1[: a selection rule over the dyadic refinement
/// system rooted at ]-1,1[. The chain's intervals are nested with width
/// 2 * 2^-n at depth n. There is deliberately no equality test on reals;
/// only finite determinations are exposed.
class ComputableReal {
public:
  explicit ComputableReal(SelectionRule rule);

  const SelectionRule& rule() const noexcept { return rule_; }
  const std::string& label() const noexcept { return rule_.label(); }

private:
  SelectionRule rule_;
};

/// Three-way oracle for a target point x: returns the sign of (x - q) for
/// any rational probe q. Every choice the rule machinery makes reduces to
/// finitely many such probes, so irrational targets stay exact.
using TargetComparator = std::function<int(const Rational&)>;

/// The rule that, at each cell, picks among the three children the one
/// containing the target with maximal margin; ties go to the leftmost.
SelectionRule dyadic_target_rule(std::string label, TargetComparator compare);

/// The definable point p of the foundation, for rational -1 < p < 1.
/// Throws OutOfRange otherwise.
ComputableReal from_rational(const Rational& p);

/// sqrt(2) - 1, selected by the exact predicate (lo+1)^2 < 2 < (hi+1)^2.
ComputableReal sqrt2_minus_one();

/// An interval of the real's chain with width exactly 2^-k (the fundamental
/// neighbourhood at depth k + 1).
RationalInterval locate(const ComputableReal& x, std::size_t precision);

enum class Ordering {
  less,
  greater,
  indistinguishable,  // the depth-(k+1) intervals overlap; never "equal"
};

/// Order comparison at finite precision: Less when locate(x,k) lies wholly
/// at or below locate(y,k), Greater symmetrically, indistinguishable when
/// the intervals overlap.
Ordering compare(const ComputableReal& x, const ComputableReal& y,
                 std::size_t precision);

std::string to_string(Ordering ordering);

}  // namespace synth
