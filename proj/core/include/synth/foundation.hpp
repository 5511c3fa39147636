#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "synth/config.hpp"
#include "synth/relations.hpp"

namespace synth {

/// A point of a projective foundation, given computably: a root form and a
/// deterministic choice function that picks exactly one successor wherever
/// the system offers any. The rule IS the point; the foundation itself is
/// never materialized. Choice functions must be pure; the library never
/// caches prefixes, so rules are safe for concurrent use.
class SelectionRule {
public:
  using Choice = std::function<std::optional<Form>(const Form&)>;

  SelectionRule(std::string label, Form root, ExtensionRelation system,
                Choice choose);

  const std::string& label() const noexcept { return label_; }
  const Form& root() const noexcept { return root_; }
  const ExtensionRelation& system() const noexcept { return system_; }

  std::optional<Form> choose(const Form& f) const { return choose_(f); }

private:
  std::string label_;
  Form root_;
  ExtensionRelation system_;
  Choice choose_;
};

/// A finite initial part root = f0, f1, ..., fn of a rule's chain.
/// `terminal` marks prefixes cut short because the system itself offers no
/// further successor (which is not an error; stalling where successors
/// exist is).
struct ChainPrefix {
  std::vector<Form> forms;
  bool terminal = false;

  std::size_t depth() const noexcept { return forms.size() - 1; }
  const Form& last() const { return forms.back(); }
};

/// Iterates the rule's choice function n times. Throws ClosednessViolation
/// when the rule stalls although the system enumerates successors, and
/// ChoiceOutsideSystem when a chosen form is not actually a successor.
ChainPrefix chain_prefix(const SelectionRule& rule, std::size_t depth);

/// The depth-n form of the rule's chain: the canonical part containing the
/// point at that depth. Throws NoSuccessor when the chain ends before n.
Form fundamental_neighbourhood(const SelectionRule& rule, std::size_t depth);

/// A projective foundation, known only through its covers: a system
/// relation plus the base form whose extensions are being followed.
struct FoundationHandle {
  ExtensionRelation system;
  Form base;
};

/// One canonical subdivision of the foundation: all forms reachable from
/// the base in exactly `depth` extension steps.
struct Cover {
  FoundationHandle handle;
  std::size_t depth = 0;
  std::vector<Form> parts;
};

/// Exact-depth reachability cover, deduplicated, in deterministic
/// (first-encounter, enumerator-order) order. Depth 0 is the trivial cover
/// {base}. Throws NotEnumerable for systems without an enumerator and
/// SearchBudgetExceeded when the frontier outgrows the budget.
Cover canonical_cover(const FoundationHandle& handle, std::size_t depth,
                      std::size_t node_budget = kDefaultNodeBudget);

/// True iff every part of `fine` is reachable in at most
/// fine.depth - coarse.depth steps from some part of `coarse`.
/// Throws DepthMismatch when fine is shallower than coarse, HandleMismatch
/// when the covers belong to different foundations.
bool refines(const Cover& fine, const Cover& coarse,
             std::size_t node_budget = kDefaultNodeBudget);

/// The unique part of a canonical cover lying on the rule's chain. For
/// overlapping systems this is the rule's own choice at that depth, not a
/// search result. Throws NotOnChain when the cover's base is not the rule's
/// root or the chain form is missing from the cover.
Form point_passes_through(const SelectionRule& rule, const Cover& cover);

}  // namespace synth
