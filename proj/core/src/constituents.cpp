#include "synth/constituents.hpp"

#include <algorithm>
#include <utility>

namespace synth {

Vocabulary::Vocabulary(std::vector<PredicateSymbol> predicates)
    : predicates_(std::move(predicates)) {
  if (predicates_.empty()) {
    throw InvalidStructure("vocabulary has no predicates");
  }
  std::sort(predicates_.begin(), predicates_.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i].arity < 1) {
      throw InvalidStructure("predicate '" + predicates_[i].name +
                             "' has arity < 1");
    }
    if (i > 0 && predicates_[i].name == predicates_[i - 1].name) {
      throw InvalidStructure("duplicate predicate '" + predicates_[i].name + "'");
    }
  }
}

int Vocabulary::arity_of(const std::string& name) const {
  for (const auto& p : predicates_) {
    if (p.name == name) {
      return p.arity;
    }
  }
  throw UnknownPredicate("predicate '" + name + "' is not in the vocabulary");
}

bool Vocabulary::has(const std::string& name) const {
  return std::any_of(predicates_.begin(), predicates_.end(),
                     [&](const auto& p) { return p.name == name; });
}

std::string Vocabulary::signature() const {
  std::string out;
  for (const auto& p : predicates_) {
    if (!out.empty()) out += ",";
    out += p.name + "/" + std::to_string(p.arity);
  }
  return out;
}

FiniteModel::FiniteModel(Vocabulary vocabulary, std::vector<std::string> universe,
                         Interpretation interpretation)
    : vocabulary_(std::move(vocabulary)),
      universe_(std::move(universe)),
      interpretation_(std::move(interpretation)) {
  if (universe_.empty()) {
    throw InvalidStructure("model universe is empty");
  }
  std::set<std::string> ids(universe_.begin(), universe_.end());
  if (ids.size() != universe_.size()) {
    throw InvalidStructure("model universe repeats an element id");
  }
  for (const auto& [name, tuples] : interpretation_) {
    const int arity = vocabulary_.arity_of(name);  // UnknownPredicate
    for (const auto& tuple : tuples) {
      if (static_cast<int>(tuple.size()) != arity) {
        throw ArityMismatch("tuple of size " + std::to_string(tuple.size()) +
                            " in interpretation of '" + name + "/" +
                            std::to_string(arity) + "'");
      }
      for (const auto& e : tuple) {
        if (!ids.contains(e)) {
          throw InvalidStructure("interpretation of '" + name +
                                 "' mentions unknown element '" + e + "'");
        }
      }
    }
  }
}

bool FiniteModel::satisfies(const std::string& predicate,
                            const std::vector<std::string>& tuple) const {
  const int arity = vocabulary_.arity_of(predicate);
  if (static_cast<int>(tuple.size()) != arity) {
    throw ArityMismatch("predicate '" + predicate + "' has arity " +
                        std::to_string(arity) + ", got a tuple of size " +
                        std::to_string(tuple.size()));
  }
  auto it = interpretation_.find(predicate);
  return it != interpretation_.end() && it->second.contains(tuple);
}

FormulaPtr Formula::atom(std::string predicate, std::vector<std::string> variables) {
  return std::make_shared<Formula>(AtomNode{std::move(predicate), std::move(variables)});
}
FormulaPtr Formula::negation(FormulaPtr body) {
  return std::make_shared<Formula>(NotNode{std::move(body)});
}
FormulaPtr Formula::conjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(AndNode{std::move(lhs), std::move(rhs)});
}
FormulaPtr Formula::disjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(OrNode{std::move(lhs), std::move(rhs)});
}
FormulaPtr Formula::exists(std::string variable, FormulaPtr body) {
  return std::make_shared<Formula>(ExistsNode{std::move(variable), std::move(body)});
}
FormulaPtr Formula::forall(std::string variable, FormulaPtr body) {
  return std::make_shared<Formula>(ForallNode{std::move(variable), std::move(body)});
}

bool eval(const FiniteModel& model, const Formula& formula,
          const Assignment& assignment) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AtomNode>) {
          std::vector<std::string> tuple;
          tuple.reserve(node.variables.size());
          for (const auto& v : node.variables) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
              throw UnboundVariable("variable '" + v + "' has no value");
            }
            tuple.push_back(it->second);
          }
          return model.satisfies(node.predicate, tuple);
        } else if constexpr (std::is_same_v<T, NotNode>) {
          return !eval(model, *node.body, assignment);
        } else if constexpr (std::is_same_v<T, AndNode>) {
          return eval(model, *node.lhs, assignment) &&
                 eval(model, *node.rhs, assignment);
        } else if constexpr (std::is_same_v<T, OrNode>) {
          return eval(model, *node.lhs, assignment) ||
                 eval(model, *node.rhs, assignment);
        } else if constexpr (std::is_same_v<T, ExistsNode>) {
          for (const auto& e : model.universe()) {
            Assignment extended = assignment;
            extended[node.variable] = e;
            if (eval(model, *node.body, extended)) {
              return true;
            }
          }
          return false;
        } else {
          static_assert(std::is_same_v<T, ForallNode>);
          for (const auto& e : model.universe()) {
            Assignment extended = assignment;
            extended[node.variable] = e;
            if (!eval(model, *node.body, extended)) {
              return false;
            }
          }
          return true;
        }
      },
      formula.node());
}

int quantifier_depth(const Formula& formula) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, AtomNode>) {
          return 0;
        } else if constexpr (std::is_same_v<T, NotNode>) {
          return quantifier_depth(*node.body);
        } else if constexpr (std::is_same_v<T, AndNode> || std::is_same_v<T, OrNode>) {
          return std::max(quantifier_depth(*node.lhs), quantifier_depth(*node.rhs));
        } else {
          return 1 + quantifier_depth(*node.body);
        }
      },
      formula.node());
}

std::string atom_text(const AtomInstance& atom) {
  std::string out = atom.predicate + "(";
  for (std::size_t i = 0; i < atom.slots.size(); ++i) {
    if (i > 0) out += ",";
    out += "x" + std::to_string(atom.slots[i]);
  }
  return out + ")";
}

std::vector<AtomInstance> atom_table(const Vocabulary& vocabulary, int width) {
  if (width < 1) {
    throw InvalidStructure("atom tables need width >= 1");
  }
  std::vector<AtomInstance> out;
  for (const auto& p : vocabulary.predicates()) {  // already name-sorted
    std::vector<int> slots(p.arity, 1);
    while (true) {
      out.push_back(AtomInstance{p.name, slots});
      int pos = p.arity - 1;
      while (pos >= 0 && slots[pos] == width) {
        slots[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++slots[pos];
    }
  }
  return out;
}

std::vector<bool> attributive_profile(const FiniteModel& model,
                                      const std::vector<std::string>& tuple) {
  if (tuple.empty()) {
    throw InvalidStructure("attributive profiles need a non-empty tuple");
  }
  std::vector<bool> signs;
  for (const auto& atom : atom_table(model.vocabulary(), static_cast<int>(tuple.size()))) {
    std::vector<std::string> instance;
    instance.reserve(atom.slots.size());
    for (int slot : atom.slots) {
      instance.push_back(tuple[slot - 1]);
    }
    signs.push_back(model.satisfies(atom.predicate, instance));
  }
  return signs;
}

namespace {

std::string build_encoding(int depth, const std::vector<bool>& attributive,
                           const std::vector<Constituent>& positives) {
  std::string out = "(" + std::to_string(depth) + ":";
  for (bool sign : attributive) {
    out += sign ? '+' : '-';
  }
  if (depth > 0) {
    out += '|';
    for (const auto& p : positives) {
      out += p.encoding();
    }
  }
  out += ')';
  return out;
}

// Indices in atom_table(vocab, width+1) of the atoms that mention only
// x1..xwidth, i.e. the image of atom_table(vocab, width).
std::vector<std::size_t> restriction_indices(const Vocabulary& vocabulary, int width) {
  const auto narrow = atom_table(vocabulary, width);
  const auto wide = atom_table(vocabulary, width + 1);
  std::vector<std::size_t> map;
  map.reserve(narrow.size());
  for (const auto& atom : narrow) {
    auto it = std::find(wide.begin(), wide.end(), atom);
    map.push_back(static_cast<std::size_t>(it - wide.begin()));
  }
  return map;
}

}  // namespace

Constituent::Constituent(std::shared_ptr<const Vocabulary> vocabulary, int width,
                         std::vector<bool> attributive)
    : vocabulary_(std::move(vocabulary)),
      width_(width),
      depth_(0),
      attributive_(std::move(attributive)) {
  if (!vocabulary_) {
    throw InvalidStructure("constituent without a vocabulary");
  }
  if (attributive_.size() != atom_table(*vocabulary_, width_).size()) {
    throw InvalidStructure("attributive part has the wrong number of signs");
  }
  encoding_ = build_encoding(depth_, attributive_, positives_);
}

Constituent::Constituent(std::shared_ptr<const Vocabulary> vocabulary, int width,
                         std::vector<bool> attributive, int depth,
                         std::vector<Constituent> positives)
    : vocabulary_(std::move(vocabulary)),
      width_(width),
      depth_(depth),
      attributive_(std::move(attributive)),
      positives_(std::move(positives)) {
  if (!vocabulary_) {
    throw InvalidStructure("constituent without a vocabulary");
  }
  if (depth_ < 1) {
    throw InvalidStructure("branch constructor needs depth >= 1");
  }
  if (attributive_.size() != atom_table(*vocabulary_, width_).size()) {
    throw InvalidStructure("attributive part has the wrong number of signs");
  }
  std::sort(positives_.begin(), positives_.end());
  positives_.erase(std::unique(positives_.begin(), positives_.end()),
                   positives_.end());
  const auto restriction = restriction_indices(*vocabulary_, width_);
  for (const auto& branch : positives_) {
    if (!(branch.vocabulary() == *vocabulary_)) {
      throw InvalidStructure("branch constituent over a different vocabulary");
    }
    if (branch.depth() != depth_ - 1 || branch.width() != width_ + 1) {
      throw InvalidStructure("branch constituent has depth " +
                             std::to_string(branch.depth()) + ", width " +
                             std::to_string(branch.width()) +
                             "; expected depth " + std::to_string(depth_ - 1) +
                             ", width " + std::to_string(width_ + 1));
    }
    for (std::size_t i = 0; i < restriction.size(); ++i) {
      if (branch.attributive()[restriction[i]] != attributive_[i]) {
        throw InvalidStructure("branch constituent disagrees with the attributive part");
      }
    }
  }
  encoding_ = build_encoding(depth_, attributive_, positives_);
}

Constituent constituent_of(const FiniteModel& model,
                           const std::vector<std::string>& tuple, int depth,
                           int max_depth) {
  if (depth < 0) {
    throw InvalidStructure("constituent depth must be >= 0");
  }
  if (depth > max_depth) {
    throw DepthBudgetExceeded("constituent depth " + std::to_string(depth) +
                              " exceeds the budget of " + std::to_string(max_depth));
  }
  auto vocabulary = std::make_shared<const Vocabulary>(model.vocabulary());

  // Plain recursion; the per-call work is the attributive profile.
  auto recurse = [&](auto&& self, const std::vector<std::string>& t,
                     int d) -> Constituent {
    std::vector<bool> signs = attributive_profile(model, t);
    const int width = static_cast<int>(t.size());
    if (d == 0) {
      return Constituent(vocabulary, width, std::move(signs));
    }
    std::vector<Constituent> positives;
    positives.reserve(model.universe().size());
    for (const auto& e : model.universe()) {
      std::vector<std::string> extended = t;
      extended.push_back(e);
      positives.push_back(self(self, extended, d - 1));
    }
    return Constituent(vocabulary, width, std::move(signs), d, std::move(positives));
  };
  return recurse(recurse, tuple, depth);
}

Integer count_constituents(const Vocabulary& vocabulary, int width, int depth) {
  auto recurse = [&](auto&& self, int k, int d) -> Integer {
    const std::size_t atoms = atom_table(vocabulary, k).size();
    if (atoms > 63) {
      throw EnumerationBudgetExceeded("attributive part alone has 2^" +
                                      std::to_string(atoms) + " assignments");
    }
    const Integer attributive_count = Integer(1) << atoms;
    if (d == 0) {
      return attributive_count;
    }
    const Integer sub = self(self, k + 1, d - 1);
    const Integer per_attributive = sub / attributive_count;  // always exact
    if (per_attributive > 63) {
      throw EnumerationBudgetExceeded("each attributive part admits 2^" +
                                      per_attributive.str() + " branch sets");
    }
    return attributive_count *
           (Integer(1) << per_attributive.convert_to<unsigned>());
  };
  return recurse(recurse, width, depth);
}

std::vector<Constituent> enumerate_constituents(const Vocabulary& vocabulary,
                                                int width, int depth,
                                                std::size_t budget) {
  const Integer count = count_constituents(vocabulary, width, depth);
  if (count > Integer(budget)) {
    throw EnumerationBudgetExceeded(count.str() + " constituents exceed the budget of " +
                                    std::to_string(budget));
  }
  auto vocabulary_ptr = std::make_shared<const Vocabulary>(vocabulary);

  auto recurse = [&](auto&& self, int k, int d) -> std::vector<Constituent> {
    const std::size_t atoms = atom_table(vocabulary, k).size();
    std::vector<Constituent> out;
    if (d == 0) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << atoms); ++mask) {
        std::vector<bool> signs(atoms);
        for (std::size_t i = 0; i < atoms; ++i) {
          signs[i] = (mask >> i) & 1;
        }
        out.emplace_back(vocabulary_ptr, k, std::move(signs));
      }
    } else {
      std::vector<Constituent> subs = self(self, k + 1, d - 1);
      // Bucket the depth-(d-1) family by its restriction to width k.
      const auto restriction = restriction_indices(vocabulary, k);
      std::map<std::vector<bool>, std::vector<Constituent>> by_restriction;
      for (auto& sub : subs) {
        std::vector<bool> key;
        key.reserve(restriction.size());
        for (std::size_t idx : restriction) {
          key.push_back(sub.attributive()[idx]);
        }
        by_restriction[std::move(key)].push_back(std::move(sub));
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << atoms); ++mask) {
        std::vector<bool> signs(atoms);
        for (std::size_t i = 0; i < atoms; ++i) {
          signs[i] = (mask >> i) & 1;
        }
        const auto& family = by_restriction[signs];
        for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << family.size());
             ++pick) {
          std::vector<Constituent> positives;
          for (std::size_t i = 0; i < family.size(); ++i) {
            if ((pick >> i) & 1) {
              positives.push_back(family[i]);
            }
          }
          out.emplace_back(vocabulary_ptr, k, signs, d, std::move(positives));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return recurse(recurse, width, depth);
}

std::vector<Constituent> compatible_extensions(const Vocabulary& vocabulary,
                                               int width, int depth,
                                               const std::vector<bool>& attributive,
                                               std::size_t budget) {
  const auto restriction = restriction_indices(vocabulary, width);
  if (attributive.size() != restriction.size()) {
    throw InvalidStructure("attributive part has the wrong number of signs");
  }
  std::vector<Constituent> out;
  for (auto& candidate : enumerate_constituents(vocabulary, width + 1, depth, budget)) {
    bool compatible = true;
    for (std::size_t i = 0; i < restriction.size(); ++i) {
      if (candidate.attributive()[restriction[i]] != attributive[i]) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

Constituent parent(const Constituent& constituent) {
  if (constituent.depth() == 0) {
    throw DepthZero("a depth-0 constituent has no parent");
  }
  if (constituent.depth() == 1) {
    return Constituent(constituent.vocabulary_ptr(), constituent.width(),
                       constituent.attributive());
  }
  std::vector<Constituent> truncated;
  truncated.reserve(constituent.positives().size());
  for (const auto& branch : constituent.positives()) {
    truncated.push_back(parent(branch));
  }
  return Constituent(constituent.vocabulary_ptr(), constituent.width(),
                     constituent.attributive(), constituent.depth() - 1,
                     std::move(truncated));
}

std::vector<Constituent> constituent_chain(const FiniteModel& model,
                                           const std::string& element,
                                           int max_depth, int depth_budget) {
  if (std::find(model.universe().begin(), model.universe().end(), element) ==
      model.universe().end()) {
    throw UnknownName("element '" + element + "' is not in the universe");
  }
  std::vector<Constituent> chain;
  chain.reserve(max_depth + 1);
  for (int d = 0; d <= max_depth; ++d) {
    chain.push_back(constituent_of(model, {element}, d, depth_budget));
  }
  return chain;
}

FormulaPtr formula_reading(const Constituent& constituent, std::size_t budget) {
  const auto table = atom_table(constituent.vocabulary(), constituent.width());
  FormulaPtr acc;
  auto add = [&acc](FormulaPtr f) {
    acc = acc ? Formula::conjunction(std::move(acc), std::move(f)) : std::move(f);
  };
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> variables;
    for (int slot : table[i].slots) {
      variables.push_back("x" + std::to_string(slot));
    }
    FormulaPtr atom = Formula::atom(table[i].predicate, std::move(variables));
    add(constituent.attributive()[i] ? atom : Formula::negation(atom));
  }
  if (constituent.depth() >= 1) {
    const std::string fresh = "x" + std::to_string(constituent.width() + 1);
    const auto family =
        compatible_extensions(constituent.vocabulary(), constituent.width(),
                              constituent.depth() - 1, constituent.attributive(),
                              budget);
    for (const auto& branch : family) {
      FormulaPtr quantified =
          Formula::exists(fresh, formula_reading(branch, budget));
      const bool positive =
          std::binary_search(constituent.positives().begin(),
                             constituent.positives().end(), branch);
      add(positive ? quantified : Formula::negation(quantified));
    }
  }
  return acc;
}

namespace {

struct EncodingParser {
  std::string_view text;
  std::size_t pos = 0;

  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<Constituent> parse(const std::shared_ptr<const Vocabulary>& vocabulary,
                                   int width) {
    if (!eat('(')) return std::nullopt;
    const std::size_t depth_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    const std::size_t depth_end = pos;
    if (depth_end == depth_start || depth_end - depth_start > 6 || !eat(':')) {
      return std::nullopt;
    }
    int depth = 0;
    for (std::size_t i = depth_start; i < depth_end; ++i) {
      depth = depth * 10 + (text[i] - '0');
    }
    const std::size_t atoms = atom_table(*vocabulary, width).size();
    std::vector<bool> signs;
    signs.reserve(atoms);
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      signs.push_back(text[pos] == '+');
      ++pos;
    }
    if (signs.size() != atoms) return std::nullopt;
    if (depth == 0) {
      if (!eat(')')) return std::nullopt;
      return Constituent(vocabulary, width, std::move(signs));
    }
    if (!eat('|')) return std::nullopt;
    std::vector<Constituent> positives;
    while (pos < text.size() && text[pos] == '(') {
      auto branch = parse(vocabulary, width + 1);
      if (!branch || branch->depth() != depth - 1) return std::nullopt;
      positives.push_back(std::move(*branch));
    }
    if (!eat(')')) return std::nullopt;
    try {
      return Constituent(vocabulary, width, std::move(signs), depth,
                         std::move(positives));
    } catch (const InvalidStructure&) {
      return std::nullopt;
    }
  }
};

std::optional<Constituent> parse_encoding(
    const std::shared_ptr<const Vocabulary>& vocabulary, int width,
    std::string_view token) {
  EncodingParser parser{token};
  auto result = parser.parse(vocabulary, width);
  if (!result || parser.pos != token.size()) {
    return std::nullopt;
  }
  if (result->encoding() != token) {
    return std::nullopt;  // non-canonical spelling (unsorted branches)
  }
  return result;
}

constexpr const char* kRootToken = "T";

}  // namespace

FormalSystem constituent_system(const Vocabulary& vocabulary, int width,
                                std::size_t budget) {
  auto vocabulary_ptr = std::make_shared<const Vocabulary>(vocabulary);
  const std::string tag = vocabulary.signature() + ";k=" + std::to_string(width);

  auto alphabet = std::make_shared<Alphabet>(
      "constituents(" + tag + ")", std::vector<std::string>{kRootToken},
      "constituent-encoding", [vocabulary_ptr, width](std::string_view token) {
        return parse_encoding(vocabulary_ptr, width, token).has_value();
      });
  FormalLanguage language("constituents(" + tag + ")", alphabet,
                          [](std::span<const std::string> tokens) {
                            return tokens.size() == 1;
                          });
  Form root = language.make_form({kRootToken});

  auto decode = [vocabulary_ptr, width](const Form& f) -> std::optional<Constituent> {
    if (f.size() != 1 || f.tokens()[0] == kRootToken) {
      return std::nullopt;
    }
    return parse_encoding(vocabulary_ptr, width, f.tokens()[0]);
  };

  ExtensionRelation relation(
      "constituent-refine",
      [decode, root](const Form& f, const Form& g) {
        const auto child = decode(g);
        if (!child) {
          return false;
        }
        if (f == root) {
          return child->depth() == 0;
        }
        const auto base = decode(f);
        if (!base || child->depth() != base->depth() + 1) {
          return false;
        }
        return parent(*child) == *base;
      },
      [decode, root, vocabulary_ptr, width, budget,
       language](const Form& f) -> std::vector<Form> {
        std::vector<Form> out;
        if (f == root) {
          for (const auto& c : enumerate_constituents(*vocabulary_ptr, width, 0, budget)) {
            out.push_back(language.make_form({c.encoding()}));
          }
          return out;
        }
        const auto base = decode(f);
        if (!base) {
          return out;
        }
        for (auto& candidate :
             enumerate_constituents(*vocabulary_ptr, width, base->depth() + 1, budget)) {
          if (parent(candidate) == *base) {
            out.push_back(language.make_form({candidate.encoding()}));
          }
        }
        return out;
      });

  return FormalSystem{"constituents(" + tag + ")", std::move(language),
                      std::move(relation), std::move(root)};
}

Form constituent_form(const FormalSystem& system, const Constituent& constituent) {
  return system.language.make_form({constituent.encoding()});
}

Constituent decode_constituent(const Vocabulary& vocabulary, int width,
                               const Form& form) {
  if (form.size() != 1) {
    throw IllFormed("constituent forms carry a single token");
  }
  auto vocabulary_ptr = std::make_shared<const Vocabulary>(vocabulary);
  auto result = parse_encoding(vocabulary_ptr, width, form.tokens()[0]);
  if (!result) {
    throw IllFormed("'" + form.text() + "' is not a constituent encoding");
  }
  return *result;
}

SelectionRule element_chain_rule(const FiniteModel& model,
                                 const std::string& element, int max_depth,
                                 std::size_t budget) {
  if (std::find(model.universe().begin(), model.universe().end(), element) ==
      model.universe().end()) {
    throw UnknownName("element '" + element + "' is not in the universe");
  }
  FormalSystem system = constituent_system(model.vocabulary(), 1, budget);
  const Form root = *system.root;
  const FormalLanguage language = system.language;
  auto vocabulary_ptr = std::make_shared<const Vocabulary>(model.vocabulary());
  auto model_copy = std::make_shared<const FiniteModel>(model);

  auto choose = [root, language, vocabulary_ptr, model_copy, element,
                 max_depth](const Form& f) -> std::optional<Form> {
    if (f == root) {
      return language.make_form(
          {constituent_of(*model_copy, {element}, 0, max_depth).encoding()});
    }
    if (f.size() != 1) {
      return std::nullopt;
    }
    auto current = parse_encoding(vocabulary_ptr, 1, f.tokens()[0]);
    if (!current || current->depth() + 1 > max_depth) {
      return std::nullopt;
    }
    // Only continue along the element's own chain.
    if (!(*current ==
          constituent_of(*model_copy, {element}, current->depth(), max_depth))) {
      return std::nullopt;
    }
    return language.make_form(
        {constituent_of(*model_copy, {element}, current->depth() + 1, max_depth)
             .encoding()});
  };
  return SelectionRule("chain(" + element + ")", root, system.relation,
                       std::move(choose));
}

}  // namespace synth
