#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "synth/foundation.hpp"
#include "synth/reals.hpp"
#include "synth/systems.hpp"

using namespace synth;

namespace {

Form numeral(long long n) { return numeral_form(Integer(n)); }

// A two-form system in which "b" is genuinely terminal.
struct TinySystem {
  FormalLanguage language;
  ExtensionRelation relation;
  Form a, b;
};

TinySystem tiny_system() {
  auto alphabet = std::make_shared<Alphabet>("tiny", std::vector<std::string>{"a", "b"});
  FormalLanguage language("tiny", alphabet,
                          [](std::span<const std::string> t) { return t.size() == 1; });
  Form a = language.make_form({"a"});
  Form b = language.make_form({"b"});
  ExtensionRelation relation(
      "tiny-step",
      [a, b](const Form& f, const Form& g) { return f == a && g == b; },
      [a, b](const Form& f) {
        return f == a ? std::vector<Form>{b} : std::vector<Form>{};
      });
  return TinySystem{std::move(language), std::move(relation), std::move(a), std::move(b)};
}

}  // namespace

TEST_CASE("chain prefixes iterate the choice function") {
  const auto prefix = chain_prefix(successor_rule(), 5);
  REQUIRE(prefix.forms.size() == 6);
  for (long long i = 0; i <= 5; ++i) {
    CHECK(prefix.forms[static_cast<std::size_t>(i)] == numeral(i));
  }
  CHECK_FALSE(prefix.terminal);
}

TEST_CASE("the constant-digit rule extends by its digit") {
  const auto prefix = chain_prefix(constant_digit_rule(3), 3);
  REQUIRE(prefix.forms.size() == 4);
  CHECK(prefix.forms[0] == decimal_form(""));
  CHECK(prefix.forms[1] == decimal_form("3"));
  CHECK(prefix.forms[2] == decimal_form("33"));
  CHECK(prefix.forms[3] == decimal_form("333"));
}

TEST_CASE("the 1/3 dyadic chain keeps 1/3 inside every interval") {
  const auto rule = from_rational(Rational(1, 3)).rule();
  const auto prefix = chain_prefix(rule, 4);
  REQUIRE(prefix.forms.size() == 5);
  for (const Form& f : prefix.forms) {
    CHECK(parse_interval(f).contains(Rational(1, 3)));
  }
}

TEST_CASE("prefixes of the same rule agree") {
  const auto rule = from_rational(Rational(2, 7)).rule();
  const auto longer = chain_prefix(rule, 12);
  const auto shorter = chain_prefix(rule, 7);
  for (std::size_t i = 0; i < shorter.forms.size(); ++i) {
    CHECK(shorter.forms[i] == longer.forms[i]);
  }
}

TEST_CASE("rules that stall where successors exist violate closedness") {
  const FormalSystem decimal = decimal_system();
  const SelectionRule adversarial(
      "stalls", *decimal.root, decimal.relation,
      [&](const Form& f) -> std::optional<Form> {
        if (f.size() >= 3) {
          return std::nullopt;  // stalls although ten successors exist
        }
        auto tokens = f.tokens();
        tokens.push_back("3");
        return decimal.language.make_form(std::move(tokens));
      });
  CHECK_NOTHROW(chain_prefix(adversarial, 2));
  CHECK_THROWS_AS(chain_prefix(adversarial, 3), ClosednessViolation);
}

TEST_CASE("choices outside the system are rejected") {
  const FormalSystem decimal = decimal_system();
  const SelectionRule wild(
      "wild", *decimal.root, decimal.relation,
      [&](const Form&) -> std::optional<Form> {
        return decimal_form("99");  // two digits at once is not a successor
      });
  CHECK_THROWS_AS(chain_prefix(wild, 1), ChoiceOutsideSystem);
}

TEST_CASE("genuinely terminal forms end chains with the terminal flag") {
  const TinySystem tiny = tiny_system();
  const SelectionRule rule(
      "ab", tiny.a, tiny.relation,
      [&](const Form& f) -> std::optional<Form> {
        if (f == tiny.a) return tiny.b;
        return std::nullopt;
      });
  const auto prefix = chain_prefix(rule, 5);
  CHECK(prefix.terminal);
  CHECK(prefix.forms == std::vector<Form>{tiny.a, tiny.b});
  CHECK_THROWS_AS(fundamental_neighbourhood(rule, 5), NoSuccessor);
  CHECK(fundamental_neighbourhood(rule, 1) == tiny.b);
}

TEST_CASE("fundamental neighbourhoods are the chain forms") {
  CHECK(fundamental_neighbourhood(successor_rule(), 3) == numeral(3));
  CHECK(fundamental_neighbourhood(successor_rule(), 0) == numeral(0));

  // Depth n has width 2 * 2^-n; depth 10 gives width 2^-9.
  const auto third = from_rational(Rational(1, 3));
  const RationalInterval at10 =
      parse_interval(fundamental_neighbourhood(third.rule(), 10));
  CHECK(at10.width() == Rational(2, 1024));
  CHECK(at10.contains(Rational(1, 3)));
}

TEST_CASE("canonical covers collect the exact-depth forms") {
  const FormalSystem decimal = decimal_system();
  const FoundationHandle handle{decimal.relation, *decimal.root};

  const Cover trivial = canonical_cover(handle, 0);
  CHECK(trivial.parts == std::vector<Form>{*decimal.root});

  const Cover two = canonical_cover(handle, 2);
  CHECK(two.parts.size() == 100);

  // Brute oracle: all two-digit strings.
  std::set<Form> expected;
  for (char a = '0'; a <= '9'; ++a) {
    for (char b = '0'; b <= '9'; ++b) {
      expected.insert(decimal_form(std::string{a, b}));
    }
  }
  CHECK(std::set<Form>(two.parts.begin(), two.parts.end()) == expected);
}

TEST_CASE("non-enumerable systems have no computable covers") {
  const FormalSystem rational = rational_interval_system();
  const Form base = interval_form(RationalInterval(Rational(0), Rational(1)));
  CHECK_THROWS_AS(canonical_cover({rational.relation, base}, 1), NotEnumerable);
}

TEST_CASE("cover growth is stopped by the node budget") {
  const FormalSystem decimal = decimal_system();
  const FoundationHandle handle{decimal.relation, *decimal.root};
  CHECK_THROWS_AS(canonical_cover(handle, 7, 1000), SearchBudgetExceeded);
}

TEST_CASE("finer canonical covers refine coarser ones") {
  const FormalSystem decimal = decimal_system();
  const FoundationHandle handle{decimal.relation, *decimal.root};
  const Cover k1 = canonical_cover(handle, 1);
  const Cover k2 = canonical_cover(handle, 2);

  CHECK(refines(k2, k1));
  CHECK(refines(k1, k1));
  CHECK_THROWS_AS(refines(k1, k2), DepthMismatch);

  // Refinement is directional: a hand-built cover missing branches still
  // refines the trivial cover.
  Cover partial = k2;
  partial.parts.erase(partial.parts.begin() + 10, partial.parts.end());
  CHECK(refines(partial, canonical_cover(handle, 0)));

  // Parts reachable from no coarse part break refinement.
  const Cover against{handle, 2, {decimal_form("99")}};
  const Cover coarse_missing{handle, 1, {decimal_form("1")}};
  CHECK_FALSE(refines(against, coarse_missing));
}

TEST_CASE("covers of different foundations do not compare") {
  const FormalSystem decimal = decimal_system();
  const FormalSystem naturals = naturals_system();
  const Cover a = canonical_cover({decimal.relation, *decimal.root}, 1);
  const Cover b = canonical_cover({naturals.relation, *naturals.root}, 1);
  CHECK_THROWS_AS(refines(a, b), HandleMismatch);
}

TEST_CASE("refinement chains hold along the dyadic system") {
  const FormalSystem dyadic = dyadic_system();
  const FoundationHandle handle{dyadic.relation, *dyadic.root};
  Cover previous = canonical_cover(handle, 0);
  for (std::size_t k = 1; k <= 6; ++k) {
    const Cover next = canonical_cover(handle, k);
    CHECK(refines(next, previous));
    previous = next;
  }
}

TEST_CASE("points pass through exactly one part of a canonical cover") {
  const FormalSystem decimal = decimal_system();
  const Cover cover = canonical_cover({decimal.relation, *decimal.root}, 2);

  CHECK(point_passes_through(constant_digit_rule(3), cover) == decimal_form("33"));

  const FormalSystem naturals = naturals_system();
  const Cover n7 = canonical_cover({naturals.relation, *naturals.root}, 7);
  CHECK(point_passes_through(successor_rule(), n7) == numeral(7));

  // The dyadic 1/3 rule: the part is the rule's own chain form.
  const FormalSystem dyadic = dyadic_system();
  const Cover d5 = canonical_cover({dyadic.relation, *dyadic.root}, 5);
  const auto rule = from_rational(Rational(1, 3)).rule();
  CHECK(point_passes_through(rule, d5) == chain_prefix(rule, 5).forms[5]);

  // A cover rooted elsewhere is off-chain.
  const Cover shifted = canonical_cover({decimal.relation, decimal_form("1")}, 1);
  CHECK_THROWS_AS(point_passes_through(constant_digit_rule(3), shifted), NotOnChain);
}

TEST_CASE("for every digit rule the depth-k chain form is a unique part") {
  const FormalSystem decimal = decimal_system();
  const Cover cover = canonical_cover({decimal.relation, *decimal.root}, 3);
  for (int digit = 0; digit <= 9; ++digit) {
    const auto rule = constant_digit_rule(digit);
    const Form part = point_passes_through(rule, cover);
    const auto chain = chain_prefix(rule, 3).forms;
    std::size_t on_chain = 0;
    for (const Form& p : cover.parts) {
      if (std::find(chain.begin(), chain.end(), p) != chain.end()) {
        ++on_chain;
      }
    }
    CHECK(on_chain == 1);
    CHECK(part == chain[3]);
  }
}

TEST_CASE("interval chains nest strictly") {
  const auto rule = sqrt2_minus_one().rule();
  const auto prefix = chain_prefix(rule, 64);
  for (std::size_t i = 0; i + 1 < prefix.forms.size(); ++i) {
    const RationalInterval outer = parse_interval(prefix.forms[i]);
    const RationalInterval inner = parse_interval(prefix.forms[i + 1]);
    CHECK(outer.lo() <= inner.lo());
    CHECK(inner.hi() <= outer.hi());
    CHECK(inner.width() < outer.width());
  }
}
