#include "synth/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace synth {

using nlohmann::json;

namespace {

const json& expect(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return *it;
}

std::string expect_string(const json& j, const char* key) {
  const json& v = expect(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("key '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

json form_to_json(const Form& form) {
  return json{{"alphabet", form.alphabet()->name()}, {"tokens", form.tokens()}};
}

Form form_from_json(const json& j, const FormalLanguage& language) {
  const json& tokens = expect(j, "tokens");
  if (!tokens.is_array()) {
    throw ParseError("'tokens' must be an array");
  }
  const std::string alphabet = expect_string(j, "alphabet");
  if (alphabet != language.alphabet()->name()) {
    throw ParseError("form encoded over alphabet '" + alphabet +
                     "', expected '" + language.alphabet()->name() + "'");
  }
  return language.make_form(tokens.get<std::vector<std::string>>());
}

namespace {

Form parse_interval_text(const std::string& text) {
  // "D(k,i)" shorthand expands to the cell's interval form.
  if (text.starts_with("D(") && text.ends_with(")")) {
    const std::string body = text.substr(2, text.size() - 3);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) {
      throw ParseError("dyadic shorthand needs D(k,i)");
    }
    const Rational scale = parse_rational(body.substr(0, comma));
    const Rational position = parse_rational(body.substr(comma + 1));
    if (denominator(scale) != 1 || numerator(scale) < 0 ||
        denominator(position) != 1) {
      throw ParseError("dyadic shorthand needs integer k >= 0 and integer i");
    }
    return dyadic_form(
        DyadicInterval(numerator(scale).convert_to<unsigned>(), numerator(position)));
  }
  if (!text.starts_with("]") || !text.ends_with("[")) {
    throw ParseError("interval forms look like ]p/q,r/s[");
  }
  const std::string body = text.substr(1, text.size() - 2);
  const std::size_t comma = body.find(',');
  if (comma == std::string::npos) {
    throw ParseError("interval forms look like ]p/q,r/s[");
  }
  const Rational lo = parse_rational(body.substr(0, comma));
  const Rational hi = parse_rational(body.substr(comma + 1));
  return interval_form(RationalInterval(lo, hi));
}

}  // namespace

Form parse_form_text(const FormalLanguage& language, const std::string& text) {
  const std::string& alphabet = language.alphabet()->name();
  if (alphabet == "digits") {
    std::vector<std::string> tokens;
    for (char c : text) {
      tokens.emplace_back(1, c);
    }
    return language.make_form(std::move(tokens));
  }
  if (alphabet == "decimal") {
    if (!text.starts_with("0.")) {
      throw ParseError("decimal forms start with '0.'");
    }
    std::vector<std::string> tokens{"0."};
    for (std::size_t i = 2; i < text.size(); ++i) {
      tokens.emplace_back(1, text[i]);
    }
    return language.make_form(std::move(tokens));
  }
  if (alphabet == "interval") {
    return parse_interval_text(text);
  }
  // Single-token languages (cones, constituent systems).
  return language.make_form({text});
}

Registry::Registry() {
  add_system("naturals", naturals_system());
  add_alias("successor", "naturals");
  add_system("decimal", decimal_system());
  add_alias("decimal-extend", "decimal");
  add_system("dyadic", dyadic_system());
  add_alias("dyadic-refine", "dyadic");
  add_system("rational", rational_interval_system());
  add_alias("rational-include", "rational");

  FormalSystem shrink{"rational-shrink", interval_language(),
                      rational_shrink_relation(), std::nullopt};
  add_system("rational-shrink", std::move(shrink));
}

Registry Registry::from_config(const json& config) {
  Registry registry;
  if (auto it = config.find("alphabets"); it != config.end()) {
    for (const auto& [name, symbols] : it->items()) {
      registry.add_alphabet(std::make_shared<Alphabet>(
          name, symbols.get<std::vector<std::string>>()));
    }
  }
  if (auto it = config.find("relations"); it != config.end()) {
    for (const auto& [name, spec] : it->items()) {
      const std::string apex = expect_string(spec, "apex");
      AlphabetPtr member_alphabet;
      if (spec.contains("alphabet")) {
        member_alphabet = registry.alphabet(spec["alphabet"].get<std::string>());
      }
      std::vector<Form> members;
      for (const auto& entry : expect(spec, "members")) {
        std::vector<std::string> tokens;
        if (entry.is_string()) {
          tokens.push_back(entry.get<std::string>());
        } else {
          tokens = entry.get<std::vector<std::string>>();
        }
        if (!member_alphabet) {
          throw ParseError("cone '" + name + "' needs an \"alphabet\" for its members");
        }
        members.emplace_back(member_alphabet, std::move(tokens));
      }
      Cone c = cone(apex, members);
      FormalLanguage language(
          name, c.apex.alphabet(),
          [](std::span<const std::string>) { return true; });
      registry.add_system(name, FormalSystem{name, std::move(language),
                                             c.relation, c.apex});
    }
  }
  return registry;
}

const FormalSystem& Registry::system(const std::string& name) const {
  auto alias = aliases_.find(name);
  const std::string& key = alias == aliases_.end() ? name : alias->second;
  auto it = systems_.find(key);
  if (it == systems_.end()) {
    throw UnknownName("no system named '" + name + "'");
  }
  return it->second;
}

void Registry::add_system(const std::string& name, FormalSystem system) {
  systems_.insert_or_assign(name, std::move(system));
}

void Registry::add_alias(const std::string& alias, const std::string& name) {
  aliases_[alias] = name;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, system] : systems_) {
    out.push_back(name);
  }
  return out;
}

const AlphabetPtr& Registry::alphabet(const std::string& name) const {
  auto it = alphabets_.find(name);
  if (it == alphabets_.end()) {
    throw UnknownName("no alphabet named '" + name + "'");
  }
  return it->second;
}

void Registry::add_alphabet(AlphabetPtr alphabet) {
  alphabets_[alphabet->name()] = std::move(alphabet);
}

SelectionRule rule_from_json(const json& spec) {
  const std::string kind = expect_string(spec, "kind");
  if (kind == "constant-digit") {
    return constant_digit_rule(expect(spec, "digit").get<int>());
  }
  if (kind == "target-rational") {
    auto to_integer = [](const json& v) -> Integer {
      if (v.is_number_integer()) {
        return Integer(v.get<long long>());
      }
      if (v.is_string()) {
        return Integer(v.get<std::string>());
      }
      throw ParseError("target-rational needs integer p and q");
    };
    const Integer p = to_integer(expect(spec, "p"));
    const Integer q = to_integer(expect(spec, "q"));
    if (q == 0) {
      throw ParseError("target-rational needs q != 0");
    }
    return from_rational(Rational(p, q)).rule();
  }
  if (kind == "builtin") {
    const std::string name = expect_string(spec, "name");
    if (name == "sqrt2" || name == "sqrt2m1") {
      return sqrt2_minus_one().rule();
    }
    throw UnknownName("no builtin rule named '" + name + "'");
  }
  if (kind == "successor") {
    return successor_rule();
  }
  throw ParseError("unknown rule kind '" + kind + "'");
}

json interval_to_json(const RationalInterval& interval) {
  return json{{"lo", rational_text(interval.lo())},
              {"hi", rational_text(interval.hi())},
              {"width", rational_text(interval.width())}};
}

FiniteModel model_from_json(const json& j) {
  const json& universe = expect(j, "universe");
  const json& predicates = expect(j, "predicates");
  std::map<std::string, int> arities;
  if (auto it = j.find("arities"); it != j.end()) {
    for (const auto& [name, arity] : it->items()) {
      arities[name] = arity.get<int>();
    }
  }
  FiniteModel::Interpretation interpretation;
  std::vector<PredicateSymbol> symbols;
  for (const auto& [name, tuples] : predicates.items()) {
    std::set<std::vector<std::string>> rows;
    for (const auto& tuple : tuples) {
      rows.insert(tuple.get<std::vector<std::string>>());
    }
    int arity = 0;
    if (auto it = arities.find(name); it != arities.end()) {
      arity = it->second;
    } else if (!rows.empty()) {
      arity = static_cast<int>(rows.begin()->size());
    } else {
      throw ParseError("predicate '" + name +
                       "' has no tuples; state its arity under \"arities\"");
    }
    symbols.push_back(PredicateSymbol{name, arity});
    interpretation[name] = std::move(rows);
  }
  return FiniteModel(Vocabulary(std::move(symbols)),
                     universe.get<std::vector<std::string>>(),
                     std::move(interpretation));
}

json model_to_json(const FiniteModel& model) {
  json predicates = json::object();
  json arities = json::object();
  for (const auto& p : model.vocabulary().predicates()) {
    arities[p.name] = p.arity;
    json rows = json::array();
    if (auto it = model.interpretation().find(p.name);
        it != model.interpretation().end()) {
      for (const auto& tuple : it->second) {
        rows.push_back(tuple);
      }
    }
    predicates[p.name] = std::move(rows);
  }
  return json{{"universe", model.universe()},
              {"predicates", std::move(predicates)},
              {"arities", std::move(arities)}};
}

json constituent_to_json(const Constituent& constituent) {
  const auto table = atom_table(constituent.vocabulary(), constituent.width());
  json atoms = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    atoms.push_back(json{{"atom", atom_text(table[i])},
                         {"sign", static_cast<bool>(constituent.attributive()[i])}});
  }
  json positives = json::array();
  for (const auto& branch : constituent.positives()) {
    positives.push_back(constituent_to_json(branch));
  }
  return json{{"depth", constituent.depth()},
              {"width", constituent.width()},
              {"atoms", std::move(atoms)},
              {"positives", std::move(positives)},
              {"encoding", constituent.encoding()}};
}

KripkeFrame frame_from_json(const json& j) {
  std::vector<std::pair<std::string, std::string>> access;
  for (const auto& pair : expect(j, "access")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("access entries are pairs [from, to]");
    }
    access.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return KripkeFrame(expect(j, "worlds").get<std::vector<std::string>>(),
                     std::move(access));
}

json frame_to_json(const KripkeFrame& frame) {
  json access = json::array();
  for (const auto& from : frame.worlds()) {
    for (const auto& to : frame.worlds()) {
      if (frame.accesses(from, to)) {
        access.push_back(json::array({from, to}));
      }
    }
  }
  return json{{"worlds", frame.worlds()}, {"access", std::move(access)}};
}

ModalValuation valuation_from_json(const json& j) {
  ModalValuation out;
  for (const auto& [atom, worlds] : j.items()) {
    std::set<std::string> set;
    for (const auto& w : worlds) {
      set.insert(w.get<std::string>());
    }
    out[atom] = std::move(set);
  }
  return out;
}

json valuation_to_json(const ModalValuation& valuation) {
  json out = json::object();
  for (const auto& [atom, worlds] : valuation) {
    out[atom] = worlds;
  }
  return out;
}

CoverStructure covers_from_json(const json& j) {
  std::vector<std::pair<std::string, std::string>> order;
  if (auto it = j.find("order"); it != j.end()) {
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("order entries are pairs [a, b] meaning a <= b");
      }
      order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  std::vector<CoverStructure::CoverAssertion> covers;
  for (const auto& entry : expect(j, "covers")) {
    covers.emplace_back(expect_string(entry, "of"),
                        expect(entry, "by").get<std::vector<std::string>>());
  }
  std::vector<std::string> elements;
  if (auto it = j.find("elements"); it != j.end()) {
    elements = it->get<std::vector<std::string>>();
  } else {
    std::set<std::string> seen;
    auto note = [&](const std::string& e) {
      if (seen.insert(e).second) {
        elements.push_back(e);
      }
    };
    for (const auto& [a, b] : order) {
      note(a);
      note(b);
    }
    for (const auto& [of, by] : covers) {
      note(of);
      for (const auto& x : by) {
        note(x);
      }
    }
  }
  return CoverStructure(std::move(elements), std::move(order), std::move(covers));
}

json covers_to_json(const CoverStructure& structure) {
  json order = json::array();
  const auto& elements = structure.elements();
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (a != b && structure.leq(static_cast<int>(a), static_cast<int>(b))) {
        order.push_back(json::array({elements[a], elements[b]}));
      }
    }
  }
  json covers = json::array();
  for (const auto& [of, by] : structure.covers()) {
    covers.push_back(json{{"of", of}, {"by", by}});
  }
  return json{{"elements", elements},
              {"order", std::move(order)},
              {"covers", std::move(covers)}};
}

// -- formula text ---------------------------------------------------------------

namespace {

struct Tokenizer {
  std::string text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_space();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) {
      throw ParseError("expected an identifier at position " + std::to_string(pos) +
                       " of '" + text + "'");
    }
    return text.substr(start, pos - start);
  }

  bool peek_ident_is(const std::string& word) {
    skip_space();
    const std::size_t save = pos;
    if (pos >= text.size() ||
        !(std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      return false;
    }
    const std::string got = ident();
    pos = save;
    return got == word;
  }
};

FormulaPtr parse_fo_or(Tokenizer& t);

FormulaPtr parse_fo_unary(Tokenizer& t) {
  if (t.eat('~')) {
    return Formula::negation(parse_fo_unary(t));
  }
  if (t.eat('(')) {
    FormulaPtr inner = parse_fo_or(t);
    if (!t.eat(')')) {
      throw ParseError("missing ')' in '" + t.text + "'");
    }
    return inner;
  }
  const std::string name = t.ident();
  if ((name == "E" || name == "A") && t.peek() != '(') {
    const std::string variable = t.ident();
    FormulaPtr body = parse_fo_unary(t);
    return name == "E" ? Formula::exists(variable, std::move(body))
                       : Formula::forall(variable, std::move(body));
  }
  if (!t.eat('(')) {
    throw ParseError("atom '" + name + "' needs an argument list");
  }
  std::vector<std::string> variables;
  variables.push_back(t.ident());
  while (t.eat(',')) {
    variables.push_back(t.ident());
  }
  if (!t.eat(')')) {
    throw ParseError("missing ')' after the arguments of '" + name + "'");
  }
  return Formula::atom(name, std::move(variables));
}

FormulaPtr parse_fo_and(Tokenizer& t) {
  FormulaPtr lhs = parse_fo_unary(t);
  while (t.eat('&')) {
    lhs = Formula::conjunction(std::move(lhs), parse_fo_unary(t));
  }
  return lhs;
}

FormulaPtr parse_fo_or(Tokenizer& t) {
  FormulaPtr lhs = parse_fo_and(t);
  while (t.eat('|')) {
    lhs = Formula::disjunction(std::move(lhs), parse_fo_and(t));
  }
  return lhs;
}

ModalFormulaPtr parse_modal_implies(Tokenizer& t);

ModalFormulaPtr parse_modal_unary(Tokenizer& t) {
  if (t.eat('~')) {
    return ModalFormula::negation(parse_modal_unary(t));
  }
  if (t.eat('(')) {
    ModalFormulaPtr inner = parse_modal_implies(t);
    if (!t.eat(')')) {
      throw ParseError("missing ')' in '" + t.text + "'");
    }
    return inner;
  }
  if (t.peek_ident_is("box")) {
    t.ident();
    return ModalFormula::box(parse_modal_unary(t));
  }
  if (t.peek_ident_is("dia")) {
    t.ident();
    return ModalFormula::diamond(parse_modal_unary(t));
  }
  return ModalFormula::atom(t.ident());
}

ModalFormulaPtr parse_modal_and(Tokenizer& t) {
  ModalFormulaPtr lhs = parse_modal_unary(t);
  while (t.eat('&')) {
    lhs = ModalFormula::conjunction(std::move(lhs), parse_modal_unary(t));
  }
  return lhs;
}

ModalFormulaPtr parse_modal_or(Tokenizer& t) {
  ModalFormulaPtr lhs = parse_modal_and(t);
  while (t.eat('|')) {
    lhs = ModalFormula::disjunction(std::move(lhs), parse_modal_and(t));
  }
  return lhs;
}

ModalFormulaPtr parse_modal_implies(Tokenizer& t) {
  ModalFormulaPtr lhs = parse_modal_or(t);
  if (t.eat_arrow()) {
    return ModalFormula::implication(std::move(lhs), parse_modal_implies(t));
  }
  return lhs;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Tokenizer t{text};
  FormulaPtr out = parse_fo_or(t);
  if (!t.done()) {
    throw ParseError("trailing input after formula: '" + text + "'");
  }
  return out;
}

ModalFormulaPtr parse_modal_formula(const std::string& text) {
  Tokenizer t{text};
  ModalFormulaPtr out = parse_modal_implies(t);
  if (!t.done()) {
    throw ParseError("trailing input after formula: '" + text + "'");
  }
  return out;
}

RunConfig config_from_json(const json& j) {
  RunConfig config;
  if (auto it = j.find("budgets"); it != j.end()) {
    if (auto b = it->find("node"); b != it->end()) {
      config.node_budget = b->get<std::size_t>();
    }
    if (auto b = it->find("enumeration"); b != it->end()) {
      config.enumeration_budget = b->get<std::size_t>();
    }
    if (auto b = it->find("max_constituent_depth"); b != it->end()) {
      config.max_constituent_depth = b->get<int>();
    }
  }
  return config;
}

}  // namespace synth
