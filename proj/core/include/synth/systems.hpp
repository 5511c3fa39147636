#pragma once

#include <optional>
#include <string>

#include "synth/forms.hpp"
#include "synth/foundation.hpp"
#include "synth/rational.hpp"
#include "synth/relations.hpp"

namespace synth {

/// A formal language together with its internal extension relation and,
/// where one exists, a distinguished root form.
struct FormalSystem {
  std::string name;
  FormalLanguage language;
  ExtensionRelation relation;
  std::optional<Form> root;
};

/// Natural numbers <0, S>: decimal numerals, successor relation, branching
/// degree one. holds(n, m) iff m = n + 1 numerically.
FormalSystem naturals_system();

/// Finite decimal developments "0.a1...an" in [0,1[: the relation appends a
/// single digit; each form has exactly ten successors, in digit order.
FormalSystem decimal_system();

/// Open rational intervals under strict inclusion:
/// ]r1,r2[ R ]s1,s2[ iff r1 < s1 < s2 < r2. Infinitely branching by design,
/// so the relation has no enumerator; no distinguished root.
FormalSystem rational_interval_system();

/// The strict-shrinking variant: inclusion plus hi'-lo' < (hi-lo)/2.
ExtensionRelation rational_shrink_relation();

/// Dyadic refinement of ]-1,1[: each cell of width w has three children of
/// width w/2 (left half, centred half, right half). The overlap of the
/// centred child is what lets every point of the closed ambient interval be
/// tracked by some chain; disjoint halves would strand the grid points.
FormalSystem dyadic_system();

// -- form codecs ------------------------------------------------------------

/// Numeral form of a non-negative integer in the naturals language.
Form numeral_form(const Integer& value);
Integer parse_numeral(const Form& form);

/// The shared language of interval forms "]p/q,r/s[": five tokens, with the
/// endpoint tokens drawn from the open class of canonically spelled
/// rationals.
const FormalLanguage& interval_language();

Form interval_form(const RationalInterval& interval);
RationalInterval parse_interval(const Form& form);

/// Reads a dyadic cell out of an interval form; nullopt when the form is
/// not a cell of the dyadic family.
std::optional<DyadicInterval> parse_dyadic(const Form& form);
Form dyadic_form(const DyadicInterval& cell);

/// Decimal form "0.d1...dn" from a digit string (possibly empty).
Form decimal_form(const std::string& digits);

// -- built-in selection rules -------------------------------------------------

/// The one rule of the naturals foundation: always the successor.
SelectionRule successor_rule();

/// The decimal chain that appends the same digit forever.
SelectionRule constant_digit_rule(int digit);

}  // namespace synth
