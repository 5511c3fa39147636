#include "synth/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace synth {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) {
    return false;
  }
  std::size_t start = 0;
  if (text[0] == '-') {
    if (text.size() == 1) return false;
    start = 1;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      return false;
    }
  }
  out = Integer(std::string(text));
  return true;
}

}  // namespace

std::string rational_text(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  } else {
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

bool is_canonical_rational_token(std::string_view token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string_view::npos) {
    return false;
  }
  Integer num, den;
  if (!parse_integer(token.substr(0, slash), num) ||
      !parse_integer(token.substr(slash + 1), den)) {
    return false;
  }
  if (den <= 0) {
    return false;
  }
  // The spelling itself must be canonical: no leading zeros, no "-0",
  // lowest terms. Round-tripping catches all of these at once.
  return std::string(token) == num.str() + "/" + den.str() &&
         gcd(abs(num), den) == 1;
}

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) {
    throw InvalidStructure("interval needs lo < hi, got ]" + rational_text(lo_) +
                           "," + rational_text(hi_) + "[");
  }
}

DyadicInterval::DyadicInterval(unsigned scale, Integer position)
    : scale_(scale), position_(std::move(position)) {
  const Integer cells = Integer(1) << scale_;
  if (position_ < -cells || position_ > cells - 2) {
    throw InvalidStructure("dyadic cell (" + std::to_string(scale_) + "," +
                           position_.str() + ") leaves [-1,1]");
  }
}

Rational DyadicInterval::lo() const {
  return Rational(position_, Integer(1) << scale_);
}

Rational DyadicInterval::hi() const {
  return Rational(position_ + 2, Integer(1) << scale_);
}

Rational DyadicInterval::width() const {
  return Rational(2, Integer(1) << scale_);
}

DyadicInterval DyadicInterval::left_child() const {
  return DyadicInterval(scale_ + 1, 2 * position_);
}

DyadicInterval DyadicInterval::middle_child() const {
  return DyadicInterval(scale_ + 1, 2 * position_ + 1);
}

DyadicInterval DyadicInterval::right_child() const {
  return DyadicInterval(scale_ + 1, 2 * position_ + 2);
}

std::optional<DyadicInterval> DyadicInterval::from_endpoints(const Rational& lo,
                                                             const Rational& hi) {
  const Rational width = hi - lo;
  if (width <= 0) {
    return std::nullopt;
  }
  // width must be 2^{1-k} for some k >= 0.
  unsigned scale = 0;
  if (width == 2) {
    scale = 0;
  } else {
    const Integer num = numerator(width);
    const Integer den = denominator(width);
    if (num != 1 && num != 2) {
      return std::nullopt;
    }
    // den is a power of two iff den has a single set bit.
    if (den <= 0 || (den & (den - 1)) != 0) {
      return std::nullopt;
    }
    const unsigned den_log = boost::multiprecision::lsb(den);
    scale = (num == 2) ? den_log : den_log + 1;
  }
  const Rational pos = lo * (Integer(1) << scale);
  if (denominator(pos) != 1) {
    return std::nullopt;
  }
  const Integer position = numerator(pos);
  const Integer cells = Integer(1) << scale;
  if (position < -cells || position > cells - 2) {
    return std::nullopt;
  }
  return DyadicInterval(scale, position);
}

}  // namespace synth
