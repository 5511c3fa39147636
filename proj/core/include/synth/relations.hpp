#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "synth/config.hpp"
#include "synth/errors.hpp"
#include "synth/forms.hpp"

namespace synth {

/// A named extension relation between forms: a total decidable predicate,
/// optionally backed by a finite successor enumerator. When the enumerator
/// is present it must agree with the predicate (g in successors(f) iff
/// holds(f, g)); that coherence is the subject of property tests, not of a
/// runtime check. Relations are immutable closures over immutable data and
/// safe to share between threads.
class ExtensionRelation {
public:
  using Predicate = std::function<bool(const Form&, const Form&)>;
  using Enumerator = std::function<std::vector<Form>(const Form&)>;

  ExtensionRelation(std::string name, Predicate holds);
  ExtensionRelation(std::string name, Predicate holds, Enumerator enumerate,
                    std::optional<std::size_t> branching_bound = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  bool holds(const Form& f, const Form& g) const { return holds_(f, g); }
  bool enumerable() const noexcept { return static_cast<bool>(enumerate_); }
  std::optional<std::size_t> branching_bound() const noexcept { return branching_bound_; }

  /// Successor forms in deterministic enumeration order.
  /// Throws NotEnumerable when the relation has no enumerator.
  std::vector<Form> successors(const Form& f) const;

private:
  std::string name_;
  Predicate holds_;
  Enumerator enumerate_;
  std::optional<std::size_t> branching_bound_;
};

/// The relational neighbourhood R[f]: the concept of a g with f R g. It is
/// queryable always and enumerable only when the relation is; it is never
/// materialized as a completed set. Obtain one through stratified_apply,
/// which runs the circularity guard.
class RelationalNeighbourhood {
public:
  RelationalNeighbourhood(Form base, ExtensionRelation relation);

  const Form& base() const noexcept { return base_; }
  const ExtensionRelation& relation() const noexcept { return relation_; }

  bool contains(const Form& g) const { return relation_.holds(base_, g); }

  /// Finite enumeration of the neighbourhood; NotEnumerable otherwise.
  std::vector<Form> enumerate() const { return relation_.successors(base_); }

private:
  Form base_;
  ExtensionRelation relation_;
};

bool neighbourhood_contains(const RelationalNeighbourhood& n, const Form& g);

/// Applies a relation to a form under the stratification guard: the
/// application is refused when the relation's own symbol occurs in the
/// form's footprint, which blocks the Russell-style diagonal f R f with
/// f built from the symbol of R. Throws StratificationError.
RelationalNeighbourhood stratified_apply(const ExtensionRelation& relation,
                                         const Form& form);

/// A finite path f1 <- f2 <- ... <- fn of consecutive extensions. The empty
/// path is permitted. Construction validates consecutive relatedness.
class Path {
public:
  Path(ExtensionRelation relation, std::vector<Form> steps);

  const ExtensionRelation& relation() const noexcept { return relation_; }
  const std::vector<Form>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

private:
  ExtensionRelation relation_;
  std::vector<Form> steps_;
};

/// A finite, non-empty set of forms used to restrict the chain predicates
/// to a decidable domain.
class FiniteCarrier {
public:
  explicit FiniteCarrier(std::vector<Form> forms);

  const std::vector<Form>& forms() const noexcept { return forms_; }
  bool contains(const Form& f) const;
  std::size_t size() const noexcept { return forms_.size(); }

private:
  std::vector<Form> forms_;  // sorted, deduplicated
};

/// One composition step of the transitive completion: from a relation
/// representing <-^n and the base relation, the relation representing
/// <-^{n+1}. The result enumerates successors iff both inputs do; its
/// predicate decides membership by witness search through the first
/// relation's enumerator and throws NotEnumerable when that is missing.
ExtensionRelation transitive_step(const ExtensionRelation& rn,
                                  const ExtensionRelation& r);

/// n-fold iteration of transitive_step; n = 1 returns the relation itself.
ExtensionRelation iterated_step(const ExtensionRelation& r, std::size_t n);

/// Bounded reachability: true iff some path of length <= max_depth leads
/// from f to g (the empty path relates every form to itself). Successors
/// come from the enumerator, or from the carrier when one is supplied.
/// Throws SearchBudgetExceeded when the frontier outgrows the node budget,
/// NotEnumerable when neither an enumerator nor a carrier is available.
bool related_star(const ExtensionRelation& r, const Form& f, const Form& g,
                  std::size_t max_depth,
                  const FiniteCarrier* carrier = nullptr,
                  std::size_t node_budget = kDefaultNodeBudget);

/// All length-n paths from root, in lexicographic order of successor
/// choices. n = 0 yields the single empty path.
std::vector<Path> enumerate_paths(const ExtensionRelation& r, const Form& root,
                                  std::size_t n,
                                  std::size_t node_budget = kDefaultNodeBudget);

/// R' < R restricted to a carrier: every R'-pair inside the carrier is an
/// R-pair.
bool is_subrelation(const ExtensionRelation& r_prime, const ExtensionRelation& r,
                    const FiniteCarrier& carrier);

/// Directedness of a chain on a carrier: two distinct extensions
/// f R' g, f R' h admit a common R'-extension k inside the carrier (a
/// single extension is already reconverged). Throws NotASubrelation when
/// r_prime < r fails on the carrier.
bool is_projective_chain(const ExtensionRelation& r_prime,
                         const ExtensionRelation& r,
                         const FiniteCarrier& carrier);

/// Closedness of a chain on a carrier: every form touched by R' continues
/// forward under R' wherever R offers a successor in the carrier, and
/// backward wherever R offers a predecessor. Throws NotASubrelation.
bool is_closed_chain(const ExtensionRelation& r_prime, const ExtensionRelation& r,
                     const FiniteCarrier& carrier);

struct Cone {
  Form apex;
  ExtensionRelation relation;
};

/// Collects a finite list of forms under a fresh apex: returns the apex form
/// g and a relation R with R[g] exactly the member list. The apex token must
/// not occur in any member's footprint (SymbolClash otherwise).
Cone cone(const std::string& apex_token, const std::vector<Form>& members);

}  // namespace synth
