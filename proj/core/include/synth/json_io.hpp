#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "synth/constituents.hpp"
#include "synth/forms.hpp"
#include "synth/foundation.hpp"
#include "synth/modal_topology.hpp"
#include "synth/rational.hpp"
#include "synth/reals.hpp"
#include "synth/systems.hpp"

namespace synth {

// -- forms ---------------------------------------------------------------------

/// {"alphabet": "<name>", "tokens": ["...", ...]}
nlohmann::json form_to_json(const Form& form);
Form form_from_json(const nlohmann::json& j, const FormalLanguage& language);

/// Text input for a system's forms: numerals for naturals, "0.14" for
/// decimal, "]p/q,r/s[" (endpoints normalized) or the "D(k,i)" shorthand for
/// interval languages, a single token otherwise.
Form parse_form_text(const FormalLanguage& language, const std::string& text);

// -- registry -------------------------------------------------------------------

/// Name -> formal system lookup. Built-ins: naturals (alias "successor"),
/// decimal ("decimal-extend"), dyadic ("dyadic-refine"), rational
/// ("rational-include") and rational-shrink. A config may add alphabets and
/// cone systems.
class Registry {
public:
  Registry();

  /// Extends the built-ins from a config document:
  ///   {"alphabets": {"name": ["s1", ...]},
  ///    "relations": {"name": {"apex": "g", "alphabet": "name",
  ///                           "members": ["a", ["b","c"], ...]}}}
  static Registry from_config(const nlohmann::json& config);

  const FormalSystem& system(const std::string& name) const;  // UnknownName
  void add_system(const std::string& name, FormalSystem system);
  void add_alias(const std::string& alias, const std::string& name);
  std::vector<std::string> names() const;

  const AlphabetPtr& alphabet(const std::string& name) const;  // UnknownName
  void add_alphabet(AlphabetPtr alphabet);

private:
  std::map<std::string, FormalSystem> systems_;
  std::map<std::string, std::string> aliases_;
  std::map<std::string, AlphabetPtr> alphabets_;
};

// -- selection rules --------------------------------------------------------------

/// Rule specs: {"kind": "constant-digit", "digit": 3},
/// {"kind": "target-rational", "p": 1, "q": 3},
/// {"kind": "builtin", "name": "sqrt2"} and {"kind": "successor"}.
SelectionRule rule_from_json(const nlohmann::json& spec);

// -- numerics ---------------------------------------------------------------------

/// {"lo": "p/q", "hi": "r/s", "width": "u/v"}
nlohmann::json interval_to_json(const RationalInterval& interval);

// -- models, frames, covers --------------------------------------------------------

/// {"universe": ["a","b"], "predicates": {"P": [["a"]], "R": [["a","b"]]},
///  "arities": {"P": 1}}; arities are optional where inferable from tuples.
FiniteModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const FiniteModel& model);

nlohmann::json constituent_to_json(const Constituent& constituent);

/// {"worlds": ["1","2"], "access": [["1","2"]]}
KripkeFrame frame_from_json(const nlohmann::json& j);
nlohmann::json frame_to_json(const KripkeFrame& frame);

/// {"p": ["1","2"], ...}
ModalValuation valuation_from_json(const nlohmann::json& j);
nlohmann::json valuation_to_json(const ModalValuation& valuation);

/// {"elements": [...], "order": [["a","b"], ...],
///  "covers": [{"of": "a", "by": ["b","c"]}]}; elements may be omitted when
/// every element occurs in the order or covers.
CoverStructure covers_from_json(const nlohmann::json& j);
nlohmann::json covers_to_json(const CoverStructure& structure);

// -- formula text -------------------------------------------------------------------

/// First-order: atoms "P(x,y)", prefix quantifiers "E z phi" / "A z phi",
/// connectives ~ & | with ~ binding tightest, parentheses. A quantifier's
/// body is the next unary-level formula.
FormulaPtr parse_formula(const std::string& text);

/// Modal: atoms, prefix "box"/"dia", connectives ~ & | -> (-> right
/// associative, loosest).
ModalFormulaPtr parse_modal_formula(const std::string& text);

// -- config ------------------------------------------------------------------------

struct RunConfig {
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t enumeration_budget = kDefaultEnumerationBudget;
  int max_constituent_depth = kDefaultMaxConstituentDepth;
};

/// {"budgets": {"node": N, "enumeration": M, "max_constituent_depth": D}}
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace synth
