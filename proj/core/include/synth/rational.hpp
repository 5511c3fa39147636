#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "synth/errors.hpp"

namespace synth {

/// Arbitrary-precision integers and rationals. cpp_rational keeps values in
/// lowest terms with a positive denominator, so structural equality of the
/// printed "p/q" spelling coincides with numerical equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical spelling "p/q" (denominator always explicit, lowest terms).
std::string rational_text(const Rational& value);

/// Parses "p/q" or a bare integer "p"; normalizes to lowest terms.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Recognizer for canonically spelled rational tokens: "p/q" in lowest
/// terms with q > 0. Used as the open token class of interval alphabets.
bool is_canonical_rational_token(std::string_view token);

/// An open, non-degenerate interval ]lo, hi[ with exact rational endpoints.
class RationalInterval {
public:
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }

  bool contains(const Rational& x) const { return lo_ < x && x < hi_; }

  /// Strict inclusion ]lo',hi'[ inside ]lo,hi[: lo < lo' < hi' < hi.
  bool strictly_includes(const RationalInterval& inner) const {
    return lo_ < inner.lo_ && inner.hi_ < hi_;
  }

  bool operator==(const RationalInterval& other) const = default;

private:
  Rational lo_;
  Rational hi_;
};

/// A dyadic cell of the refinement system: scale k >= 0 and position i
/// denote the open interval ]i/2^k, (i+2)/2^k[ of width 2*2^-k inside
/// [-1,1]; the root is (0,-1) = ]-1,1[. Spanning two grid cells keeps the
/// family closed under the three-children rule (left half, centred half,
/// right half), which single cells ]i/2^k,(i+1)/2^k[ are not: the centred
/// half of a single cell is never a single cell.
class DyadicInterval {
public:
  DyadicInterval(unsigned scale, Integer position);

  unsigned scale() const noexcept { return scale_; }
  const Integer& position() const noexcept { return position_; }

  Rational lo() const;
  Rational hi() const;
  Rational width() const;
  RationalInterval interval() const { return RationalInterval(lo(), hi()); }

  DyadicInterval left_child() const;
  DyadicInterval middle_child() const;
  DyadicInterval right_child() const;

  static DyadicInterval root() { return DyadicInterval(0, -1); }

  /// Reads a dyadic cell back from exact endpoints; nullopt when the
  /// interval is not a cell of the family.
  static std::optional<DyadicInterval> from_endpoints(const Rational& lo,
                                                      const Rational& hi);

  bool operator==(const DyadicInterval& other) const = default;

private:
  unsigned scale_;
  Integer position_;
};

}  // namespace synth
