#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "synth/config.hpp"
#include "synth/errors.hpp"
#include "synth/foundation.hpp"
#include "synth/systems.hpp"

namespace synth {

struct PredicateSymbol {
  std::string name;
  int arity = 1;

  bool operator==(const PredicateSymbol&) const = default;
};

/// A finite relational vocabulary: distinct predicate names, arities >= 1,
/// no constants or functions.
class Vocabulary {
public:
  explicit Vocabulary(std::vector<PredicateSymbol> predicates);

  const std::vector<PredicateSymbol>& predicates() const noexcept {
    return predicates_;
  }
  int arity_of(const std::string& name) const;  // UnknownPredicate
  bool has(const std::string& name) const;

  /// "P/1,R/2" with predicates in name order; identifies the vocabulary in
  /// encodings and registries.
  std::string signature() const;

  bool operator==(const Vocabulary& other) const {
    return predicates_ == other.predicates_;
  }

private:
  std::vector<PredicateSymbol> predicates_;  // sorted by name
};

/// A finite model: a non-empty universe of element ids and, per predicate,
/// the set of satisfying tuples.
class FiniteModel {
public:
  using Interpretation = std::map<std::string, std::set<std::vector<std::string>>>;

  FiniteModel(Vocabulary vocabulary, std::vector<std::string> universe,
              Interpretation interpretation);

  const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const Interpretation& interpretation() const noexcept { return interpretation_; }

  bool satisfies(const std::string& predicate,
                 const std::vector<std::string>& tuple) const;

private:
  Vocabulary vocabulary_;
  std::vector<std::string> universe_;
  Interpretation interpretation_;
};

// -- first-order formulas ----------------------------------------------------

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct AtomNode {
  std::string predicate;
  std::vector<std::string> variables;
};
struct NotNode { FormulaPtr body; };
struct AndNode { FormulaPtr lhs, rhs; };
struct OrNode { FormulaPtr lhs, rhs; };
struct ExistsNode { std::string variable; FormulaPtr body; };
struct ForallNode { std::string variable; FormulaPtr body; };

class Formula {
public:
  using Node = std::variant<AtomNode, NotNode, AndNode, OrNode, ExistsNode, ForallNode>;

  explicit Formula(Node node) : node_(std::move(node)) {}
  const Node& node() const noexcept { return node_; }

  static FormulaPtr atom(std::string predicate, std::vector<std::string> variables);
  static FormulaPtr negation(FormulaPtr body);
  static FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr exists(std::string variable, FormulaPtr body);
  static FormulaPtr forall(std::string variable, FormulaPtr body);

private:
  Node node_;
};

using Assignment = std::map<std::string, std::string>;

/// Classical satisfaction over a finite model; quantifiers range over the
/// universe. Throws UnboundVariable and ArityMismatch.
bool eval(const FiniteModel& model, const Formula& formula,
          const Assignment& assignment);

/// Maximal quantifier nesting; atoms have depth 0.
int quantifier_depth(const Formula& formula);

// -- constituents ------------------------------------------------------------

/// One atomic formula instantiable over variables x1..xk: a predicate and a
/// 1-based slot pattern.
struct AtomInstance {
  std::string predicate;
  std::vector<int> slots;

  bool operator==(const AtomInstance&) const = default;
};

std::string atom_text(const AtomInstance& atom);

/// All atoms over x1..xk in canonical order: predicates by name, slot
/// patterns lexicographically.
std::vector<AtomInstance> atom_table(const Vocabulary& vocabulary, int width);

/// Truth signs of every atom over x1..xk under x_i -> tuple_i, in
/// atom_table order.
std::vector<bool> attributive_profile(const FiniteModel& model,
                                      const std::vector<std::string>& tuple);

/// A depth-d constituent over variables x1..xk: the attributive sign
/// assignment over all width-k atoms plus, for d >= 1, the set of
/// positively asserted depth-(d-1) constituents over x1..xk,z. Negative
/// branches are implicit: every compatible sub-constituent not listed
/// positive is asserted not to be realized, so the positive set determines
/// the constituent. Construction canonicalizes (sorts, deduplicates) and
/// validates compatibility of every positive branch.
class Constituent {
public:
  Constituent(std::shared_ptr<const Vocabulary> vocabulary, int width,
              std::vector<bool> attributive);
  Constituent(std::shared_ptr<const Vocabulary> vocabulary, int width,
              std::vector<bool> attributive, int depth,
              std::vector<Constituent> positives);

  int depth() const noexcept { return depth_; }
  int width() const noexcept { return width_; }
  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const noexcept {
    return vocabulary_;
  }
  const std::vector<bool>& attributive() const noexcept { return attributive_; }
  const std::vector<Constituent>& positives() const noexcept { return positives_; }

  /// Canonical compact encoding, e.g. "(1:+-|(0:++-)(0:+--))"; equal
  /// constituents have equal encodings and vice versa.
  const std::string& encoding() const noexcept { return encoding_; }

  bool operator==(const Constituent& other) const {
    return encoding_ == other.encoding_;
  }
  bool operator<(const Constituent& other) const {
    return encoding_ < other.encoding_;
  }

private:
  std::shared_ptr<const Vocabulary> vocabulary_;
  int width_;
  int depth_;
  std::vector<bool> attributive_;
  std::vector<Constituent> positives_;
  std::string encoding_;
};

/// The unique depth-d constituent realized by a tuple: the attributive
/// profile plus, per universe element e, the depth-(d-1) constituent of
/// tuple+e as a positive branch. Throws DepthBudgetExceeded beyond
/// max_depth.
Constituent constituent_of(const FiniteModel& model,
                           const std::vector<std::string>& tuple, int depth,
                           int max_depth = kDefaultMaxConstituentDepth);

/// Exact number of syntactically well-formed depth-d width-k constituents.
/// Throws EnumerationBudgetExceeded when the count is too large to compute
/// exactly (it grows as an exponential tower in the depth).
Integer count_constituents(const Vocabulary& vocabulary, int width, int depth);

/// All depth-d width-k constituents in canonical (encoding) order, without
/// any consistency filtering beyond the compatibility invariant.
std::vector<Constituent> enumerate_constituents(
    const Vocabulary& vocabulary, int width, int depth,
    std::size_t budget = kDefaultEnumerationBudget);

/// All depth-d constituents over x1..x_{k+1} whose attributive part
/// restricts to the given width-k attributive assignment.
std::vector<Constituent> compatible_extensions(
    const Vocabulary& vocabulary, int width, int depth,
    const std::vector<bool>& attributive,
    std::size_t budget = kDefaultEnumerationBudget);

/// Truncation to depth d-1: keep the attributive part; branches are
/// replaced by their parents (a parent branch is positive iff some
/// positive branch truncates to it). Throws DepthZero at depth 0.
Constituent parent(const Constituent& constituent);

/// The chain C^0, ..., C^{d_max} of an element's constituents: the maximal
/// description of the element at each depth. Adjacent members are linked by
/// parent.
std::vector<Constituent> constituent_chain(const FiniteModel& model,
                                           const std::string& element,
                                           int max_depth,
                                           int depth_budget = kDefaultMaxConstituentDepth);

/// The conjunction the constituent abbreviates: signed atoms, existential
/// closures of the positive branches, and negated existentials for every
/// compatible branch left negative. Needs to enumerate the compatible
/// family, hence the budget.
FormulaPtr formula_reading(const Constituent& constituent,
                           std::size_t budget = kDefaultEnumerationBudget);

// -- the bridge to projective foundations -------------------------------------

/// Constituents of width k as a formal system: forms encode constituents
/// (plus a root form "T" carrying no information), the relation extends a
/// depth-d constituent to the depth-(d+1) constituents it is the parent of.
/// Canonical covers of the root at chain depth d+1 enumerate the depth-d
/// constituents.
FormalSystem constituent_system(const Vocabulary& vocabulary, int width,
                                std::size_t budget = kDefaultEnumerationBudget);

Form constituent_form(const FormalSystem& system, const Constituent& constituent);

/// Decodes a constituent form of the system; throws IllFormed for the root
/// form or foreign forms.
Constituent decode_constituent(const Vocabulary& vocabulary, int width,
                               const Form& form);

/// The selection rule tracing an element's constituent chain inside
/// constituent_system(vocabulary, 1). The choice function stops (returns
/// nothing) beyond max_depth.
SelectionRule element_chain_rule(const FiniteModel& model,
                                 const std::string& element,
                                 int max_depth = kDefaultMaxConstituentDepth,
                                 std::size_t budget = kDefaultEnumerationBudget);

}  // namespace synth
