#include "synth/systems.hpp"

#include <array>
#include <memory>

namespace synth {

namespace {

const std::array<std::string, 10> kDigits = {"0", "1", "2", "3", "4",
                                             "5", "6", "7", "8", "9"};

bool is_digit_token(const std::string& t) {
  return t.size() == 1 && t[0] >= '0' && t[0] <= '9';
}

AlphabetPtr digit_alphabet() {
  static const AlphabetPtr alphabet = std::make_shared<Alphabet>(
      "digits", std::vector<std::string>(kDigits.begin(), kDigits.end()));
  return alphabet;
}

AlphabetPtr decimal_alphabet() {
  static const AlphabetPtr alphabet = [] {
    std::vector<std::string> symbols{"0."};
    symbols.insert(symbols.end(), kDigits.begin(), kDigits.end());
    return std::make_shared<Alphabet>("decimal", std::move(symbols));
  }();
  return alphabet;
}

AlphabetPtr interval_alphabet() {
  static const AlphabetPtr alphabet = std::make_shared<Alphabet>(
      "interval", std::vector<std::string>{"]", ",", "["}, "rational",
      [](std::string_view token) { return is_canonical_rational_token(token); });
  return alphabet;
}

const FormalLanguage& naturals_language() {
  static const FormalLanguage language(
      "naturals", digit_alphabet(), [](std::span<const std::string> tokens) {
        if (tokens.empty()) {
          return false;  // the empty numeral body is ill-formed
        }
        for (const auto& t : tokens) {
          if (!is_digit_token(t)) return false;
        }
        return tokens.size() == 1 || tokens.front() != "0";  // no leading zero
      });
  return language;
}

const FormalLanguage& decimal_language() {
  static const FormalLanguage language(
      "decimal", decimal_alphabet(), [](std::span<const std::string> tokens) {
        if (tokens.empty() || tokens.front() != "0.") {
          return false;
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          if (!is_digit_token(tokens[i])) return false;
        }
        return true;
      });
  return language;
}

bool interval_shaped(std::span<const std::string> tokens) {
  return tokens.size() == 5 && tokens[0] == "]" && tokens[2] == "," &&
         tokens[4] == "[" && is_canonical_rational_token(tokens[1]) &&
         is_canonical_rational_token(tokens[3]);
}

std::optional<RationalInterval> read_interval(const Form& form) {
  const auto& tokens = form.tokens();
  if (!interval_shaped(tokens)) {
    return std::nullopt;
  }
  const Rational lo = parse_rational(tokens[1]);
  const Rational hi = parse_rational(tokens[3]);
  if (!(lo < hi)) {
    return std::nullopt;
  }
  return RationalInterval(lo, hi);
}

}  // namespace

const FormalLanguage& interval_language() {
  static const FormalLanguage language(
      "interval", interval_alphabet(), [](std::span<const std::string> tokens) {
        if (!interval_shaped(tokens)) {
          return false;
        }
        return parse_rational(tokens[1]) < parse_rational(tokens[3]);
      });
  return language;
}

Form numeral_form(const Integer& value) {
  if (value < 0) {
    throw InvalidStructure("numerals are non-negative, got " + value.str());
  }
  std::vector<std::string> tokens;
  for (char c : value.str()) {
    tokens.push_back(std::string(1, c));
  }
  return naturals_language().make_form(std::move(tokens));
}

Integer parse_numeral(const Form& form) {
  if (!naturals_language().well_formed(form.tokens())) {
    throw IllFormed("'" + form.text() + "' is not a numeral");
  }
  return Integer(form.text());
}

Form interval_form(const RationalInterval& interval) {
  return interval_language().make_form({"]", rational_text(interval.lo()), ",",
                                        rational_text(interval.hi()), "["});
}

RationalInterval parse_interval(const Form& form) {
  auto interval = read_interval(form);
  if (!interval) {
    throw IllFormed("'" + form.text() + "' is not an interval form");
  }
  return *interval;
}

std::optional<DyadicInterval> parse_dyadic(const Form& form) {
  auto interval = read_interval(form);
  if (!interval) {
    return std::nullopt;
  }
  return DyadicInterval::from_endpoints(interval->lo(), interval->hi());
}

Form dyadic_form(const DyadicInterval& cell) {
  return interval_form(cell.interval());
}

Form decimal_form(const std::string& digits) {
  std::vector<std::string> tokens{"0."};
  for (char c : digits) {
    tokens.push_back(std::string(1, c));
  }
  return decimal_language().make_form(std::move(tokens));
}

FormalSystem naturals_system() {
  ExtensionRelation relation(
      "S",
      [](const Form& f, const Form& g) {
        const auto& lang = naturals_language();
        if (!lang.well_formed(f.tokens()) || !lang.well_formed(g.tokens())) {
          return false;
        }
        return parse_numeral(g) == parse_numeral(f) + 1;
      },
      [](const Form& f) {
        std::vector<Form> out;
        if (naturals_language().well_formed(f.tokens())) {
          out.push_back(numeral_form(parse_numeral(f) + 1));
        }
        return out;
      },
      1);
  return FormalSystem{"naturals", naturals_language(), std::move(relation),
                      numeral_form(0)};
}

FormalSystem decimal_system() {
  ExtensionRelation relation(
      "decimal-extend",
      [](const Form& f, const Form& g) {
        const auto& lang = decimal_language();
        if (!lang.well_formed(f.tokens()) || !lang.well_formed(g.tokens())) {
          return false;
        }
        if (g.size() != f.size() + 1) {
          return false;
        }
        return std::equal(f.tokens().begin(), f.tokens().end(), g.tokens().begin());
      },
      [](const Form& f) {
        std::vector<Form> out;
        if (!decimal_language().well_formed(f.tokens())) {
          return out;
        }
        out.reserve(kDigits.size());
        for (const auto& d : kDigits) {
          auto tokens = f.tokens();
          tokens.push_back(d);
          out.push_back(decimal_language().make_form(std::move(tokens)));
        }
        return out;
      },
      10);
  return FormalSystem{"decimal", decimal_language(), std::move(relation),
                      decimal_form("")};
}

FormalSystem rational_interval_system() {
  ExtensionRelation relation(
      "rational-include", [](const Form& f, const Form& g) {
        const auto outer = read_interval(f);
        const auto inner = read_interval(g);
        if (!outer || !inner) {
          return false;
        }
        return outer->strictly_includes(*inner);
      });
  return FormalSystem{"rational", interval_language(), std::move(relation),
                      std::nullopt};
}

ExtensionRelation rational_shrink_relation() {
  return ExtensionRelation(
      "rational-shrink", [](const Form& f, const Form& g) {
        const auto outer = read_interval(f);
        const auto inner = read_interval(g);
        if (!outer || !inner) {
          return false;
        }
        return outer->strictly_includes(*inner) &&
               inner->width() * 2 < outer->width();
      });
}

SelectionRule successor_rule() {
  FormalSystem naturals = naturals_system();
  return SelectionRule(
      "successor", *naturals.root, naturals.relation,
      [](const Form& f) -> std::optional<Form> {
        if (!naturals_language().well_formed(f.tokens())) {
          return std::nullopt;
        }
        return numeral_form(parse_numeral(f) + 1);
      });
}

SelectionRule constant_digit_rule(int digit) {
  if (digit < 0 || digit > 9) {
    throw InvalidStructure("digit must be 0..9, got " + std::to_string(digit));
  }
  FormalSystem decimal = decimal_system();
  const std::string token(1, static_cast<char>('0' + digit));
  return SelectionRule(
      "digit-" + token, *decimal.root, decimal.relation,
      [token](const Form& f) -> std::optional<Form> {
        if (!decimal_language().well_formed(f.tokens())) {
          return std::nullopt;
        }
        auto tokens = f.tokens();
        tokens.push_back(token);
        return decimal_language().make_form(std::move(tokens));
      });
}

FormalSystem dyadic_system() {
  ExtensionRelation relation(
      "dyadic-refine",
      [](const Form& f, const Form& g) {
        const auto parent = parse_dyadic(f);
        const auto child = parse_dyadic(g);
        if (!parent || !child) {
          return false;
        }
        return child == parent->left_child() || child == parent->middle_child() ||
               child == parent->right_child();
      },
      [](const Form& f) {
        std::vector<Form> out;
        const auto cell = parse_dyadic(f);
        if (cell) {
          out.push_back(dyadic_form(cell->left_child()));
          out.push_back(dyadic_form(cell->middle_child()));
          out.push_back(dyadic_form(cell->right_child()));
        }
        return out;
      },
      3);
  return FormalSystem{"dyadic", interval_language(), std::move(relation),
                      dyadic_form(DyadicInterval::root())};
}

}  // namespace synth
