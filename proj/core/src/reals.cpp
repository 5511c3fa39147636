#include "synth/reals.hpp"

#include <array>
#include <utility>

namespace synth {

namespace {

// Distance from the target x to a rational bound: x - r (towards == true)
// or r - x. Comparisons between two such distances reduce to rational
// comparisons or to one probe of the target comparator.
struct Distance {
  bool towards;  // true: x - r; false: r - x
  Rational r;
};

int compare_distances(const TargetComparator& cmp, const Distance& a,
                      const Distance& b) {
  if (a.towards && b.towards) {
    return b.r < a.r ? -1 : (a.r < b.r ? 1 : 0);  // sign((x-a.r)-(x-b.r)) = sign(b.r-a.r)
  }
  if (!a.towards && !b.towards) {
    return a.r < b.r ? -1 : (b.r < a.r ? 1 : 0);
  }
  const Rational midpoint = (a.r + b.r) / 2;
  const int s = cmp(midpoint);
  return a.towards ? s : -s;
}

// min(x - lo, hi - x) as a Distance.
Distance margin_of(const TargetComparator& cmp, const RationalInterval& cell) {
  const Rational midpoint = (cell.lo() + cell.hi()) / 2;
  if (cmp(midpoint) <= 0) {
    return Distance{true, cell.lo()};
  }
  return Distance{false, cell.hi()};
}

bool strictly_contains_target(const TargetComparator& cmp,
                              const RationalInterval& cell) {
  return cmp(cell.lo()) > 0 && cmp(cell.hi()) < 0;
}

}  // namespace

SelectionRule dyadic_target_rule(std::string label, TargetComparator compare) {
  FormalSystem dyadic = dyadic_system();
  auto choose = [compare](const Form& f) -> std::optional<Form> {
    const auto cell = parse_dyadic(f);
    if (!cell) {
      return std::nullopt;
    }
    const std::array<DyadicInterval, 3> children = {
        cell->left_child(), cell->middle_child(), cell->right_child()};

    std::optional<DyadicInterval> best;
    std::optional<Distance> best_margin;
    for (const DyadicInterval& child : children) {
      const RationalInterval interval = child.interval();
      if (!strictly_contains_target(compare, interval)) {
        continue;
      }
      Distance margin = margin_of(compare, interval);
      if (!best || compare_distances(compare, margin, *best_margin) > 0) {
        best = child;
        best_margin = margin;
      }
    }
    if (!best) {
      return std::nullopt;
    }
    return dyadic_form(*best);
  };
  return SelectionRule(std::move(label), *dyadic.root, dyadic.relation,
                       std::move(choose));
}

ComputableReal::ComputableReal(SelectionRule rule) : rule_(std::move(rule)) {
  if (!(rule_.root() == dyadic_form(DyadicInterval::root()))) {
    throw InvalidStructure("computable reals live over the dyadic system rooted at ]-1,1[");
  }
}

ComputableReal from_rational(const Rational& p) {
  if (!(Rational(-1) < p && p < Rational(1))) {
    throw OutOfRange("rational " + rational_text(p) + " is outside ]-1,1[");
  }
  TargetComparator cmp = [p](const Rational& q) {
    return p < q ? -1 : (q < p ? 1 : 0);
  };
  return ComputableReal(dyadic_target_rule(rational_text(p), std::move(cmp)));
}

ComputableReal sqrt2_minus_one() {
  // sign((sqrt(2)-1) - q), decided exactly: for q > 0 compare 2 with
  // (q+1)^2; for q <= 0 the target is positive, so the sign is +1.
  TargetComparator cmp = [](const Rational& q) {
    if (q <= 0) {
      return 1;
    }
    const Rational square = (q + 1) * (q + 1);
    if (square < 2) return 1;
    if (Rational(2) < square) return -1;
    return 0;  // unreachable: (q+1)^2 = 2 has no rational solution
  };
  return ComputableReal(dyadic_target_rule("sqrt2m1", std::move(cmp)));
}

RationalInterval locate(const ComputableReal& x, std::size_t precision) {
  return parse_interval(fundamental_neighbourhood(x.rule(), precision + 1));
}

Ordering compare(const ComputableReal& x, const ComputableReal& y,
                 std::size_t precision) {
  const RationalInterval ix = locate(x, precision);
  const RationalInterval iy = locate(y, precision);
  if (ix.hi() <= iy.lo()) {
    return Ordering::less;
  }
  if (iy.hi() <= ix.lo()) {
    return Ordering::greater;
  }
  return Ordering::indistinguishable;
}

std::string to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::less: return "less";
    case Ordering::greater: return "greater";
    case Ordering::indistinguishable: return "indistinguishable";
  }
  return "indistinguishable";
}

}  // namespace synth
