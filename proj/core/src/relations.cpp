#include "synth/relations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace synth {

ExtensionRelation::ExtensionRelation(std::string name, Predicate holds)
    : name_(std::move(name)), holds_(std::move(holds)) {
  if (!holds_) {
    throw InvalidStructure("relation '" + name_ + "' lacks a predicate");
  }
}

ExtensionRelation::ExtensionRelation(std::string name, Predicate holds,
                                     Enumerator enumerate,
                                     std::optional<std::size_t> branching_bound)
    : name_(std::move(name)),
      holds_(std::move(holds)),
      enumerate_(std::move(enumerate)),
      branching_bound_(branching_bound) {
  if (!holds_) {
    throw InvalidStructure("relation '" + name_ + "' lacks a predicate");
  }
}

std::vector<Form> ExtensionRelation::successors(const Form& f) const {
  if (!enumerate_) {
    throw NotEnumerable("relation '" + name_ + "' has no successor enumerator");
  }
  return enumerate_(f);
}

RelationalNeighbourhood::RelationalNeighbourhood(Form base, ExtensionRelation relation)
    : base_(std::move(base)), relation_(std::move(relation)) {}

bool neighbourhood_contains(const RelationalNeighbourhood& n, const Form& g) {
  return n.contains(g);
}

RelationalNeighbourhood stratified_apply(const ExtensionRelation& relation,
                                         const Form& form) {
  if (form.footprint().contains(relation.name())) {
    throw StratificationError("relation '" + relation.name() +
                              "' applied to a form built from its own symbol: '" +
                              form.text() + "'");
  }
  return RelationalNeighbourhood(form, relation);
}

Path::Path(ExtensionRelation relation, std::vector<Form> steps)
    : relation_(std::move(relation)), steps_(std::move(steps)) {
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (!relation_.holds(steps_[i], steps_[i + 1])) {
      throw InvalidStructure("path steps " + steps_[i].text() + " -> " +
                             steps_[i + 1].text() + " are not related under '" +
                             relation_.name() + "'");
    }
  }
}

FiniteCarrier::FiniteCarrier(std::vector<Form> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) {
    throw InvalidStructure("carrier must be non-empty");
  }
  std::sort(forms_.begin(), forms_.end());
  forms_.erase(std::unique(forms_.begin(), forms_.end()), forms_.end());
}

bool FiniteCarrier::contains(const Form& f) const {
  return std::binary_search(forms_.begin(), forms_.end(), f);
}

ExtensionRelation transitive_step(const ExtensionRelation& rn,
                                  const ExtensionRelation& r) {
  const std::string name = rn.name() + ";" + r.name();
  auto rn_copy = rn;
  auto r_copy = r;

  ExtensionRelation::Predicate holds = [rn_copy, r_copy](const Form& f, const Form& h) {
    // Witness search g with f <-^n g and g <- h through rn's enumerator.
    for (const Form& g : rn_copy.successors(f)) {
      if (r_copy.holds(g, h)) {
        return true;
      }
    }
    return false;
  };

  if (!rn.enumerable() || !r.enumerable()) {
    return ExtensionRelation(name, std::move(holds));
  }

  ExtensionRelation::Enumerator enumerate = [rn_copy, r_copy](const Form& f) {
    std::vector<Form> out;
    std::set<Form> seen;
    for (const Form& g : rn_copy.successors(f)) {
      for (Form& h : r_copy.successors(g)) {
        if (seen.insert(h).second) {
          out.push_back(std::move(h));
        }
      }
    }
    return out;
  };

  std::optional<std::size_t> bound;
  if (rn.branching_bound() && r.branching_bound()) {
    bound = *rn.branching_bound() * *r.branching_bound();
  }
  return ExtensionRelation(name, std::move(holds), std::move(enumerate), bound);
}

ExtensionRelation iterated_step(const ExtensionRelation& r, std::size_t n) {
  if (n == 0) {
    throw InvalidStructure("iterated_step requires n >= 1");
  }
  ExtensionRelation acc = r;
  for (std::size_t i = 1; i < n; ++i) {
    acc = transitive_step(acc, r);
  }
  return acc;
}

namespace {

std::vector<Form> step_successors(const ExtensionRelation& r, const Form& f,
                                  const FiniteCarrier* carrier) {
  if (r.enumerable()) {
    return r.successors(f);
  }
  if (carrier == nullptr) {
    throw NotEnumerable("relation '" + r.name() +
                        "' needs a carrier to bound the search");
  }
  std::vector<Form> out;
  for (const Form& g : carrier->forms()) {
    if (r.holds(f, g)) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

bool related_star(const ExtensionRelation& r, const Form& f, const Form& g,
                  std::size_t max_depth, const FiniteCarrier* carrier,
                  std::size_t node_budget) {
  if (f == g) {
    return true;  // the empty path
  }
  std::set<Form> visited{f};
  std::deque<Form> frontier{f};
  std::size_t expanded = 1;
  for (std::size_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::deque<Form> next;
    for (const Form& cur : frontier) {
      for (Form& succ : step_successors(r, cur, carrier)) {
        if (succ == g) {
          return true;
        }
        if (visited.insert(succ).second) {
          if (++expanded > node_budget) {
            throw SearchBudgetExceeded("frontier exceeded " +
                                       std::to_string(node_budget) + " forms");
          }
          next.push_back(std::move(succ));
        }
      }
    }
    frontier = std::move(next);
  }
  return false;
}

namespace {

void paths_dfs(const ExtensionRelation& r, const Form& cur, std::size_t remaining,
               std::vector<Form>& steps, std::vector<Path>& out,
               std::size_t node_budget, std::size_t& visited) {
  if (remaining == 0) {
    out.push_back(Path(r, steps));
    return;
  }
  for (const Form& succ : r.successors(cur)) {
    if (++visited > node_budget) {
      throw SearchBudgetExceeded("path enumeration exceeded " +
                                 std::to_string(node_budget) + " nodes");
    }
    steps.push_back(succ);
    paths_dfs(r, succ, remaining - 1, steps, out, node_budget, visited);
    steps.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const ExtensionRelation& r, const Form& root,
                                  std::size_t n, std::size_t node_budget) {
  std::vector<Path> out;
  std::vector<Form> steps;
  std::size_t visited = 0;
  paths_dfs(r, root, n, steps, out, node_budget, visited);
  return out;
}

bool is_subrelation(const ExtensionRelation& r_prime, const ExtensionRelation& r,
                    const FiniteCarrier& carrier) {
  for (const Form& f : carrier.forms()) {
    for (const Form& g : carrier.forms()) {
      if (r_prime.holds(f, g) && !r.holds(f, g)) {
        return false;
      }
    }
  }
  return true;
}

bool is_projective_chain(const ExtensionRelation& r_prime,
                         const ExtensionRelation& r,
                         const FiniteCarrier& carrier) {
  if (!is_subrelation(r_prime, r, carrier)) {
    throw NotASubrelation("'" + r_prime.name() + "' is not below '" + r.name() +
                          "' on the carrier");
  }
  const auto& forms = carrier.forms();
  for (const Form& f : forms) {
    for (const Form& g : forms) {
      if (!r_prime.holds(f, g)) continue;
      for (const Form& h : forms) {
        if (!r_prime.holds(f, h)) continue;
        if (g == h) continue;  // a single extension is already reconverged
        bool reconverge = false;
        for (const Form& k : forms) {
          if (r_prime.holds(g, k) && r_prime.holds(h, k)) {
            reconverge = true;
            break;
          }
        }
        if (!reconverge) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_closed_chain(const ExtensionRelation& r_prime, const ExtensionRelation& r,
                     const FiniteCarrier& carrier) {
  if (!is_subrelation(r_prime, r, carrier)) {
    throw NotASubrelation("'" + r_prime.name() + "' is not below '" + r.name() +
                          "' on the carrier");
  }
  const auto& forms = carrier.forms();

  auto touched = [&](const Form& x) {
    for (const Form& y : forms) {
      if (r_prime.holds(x, y) || r_prime.holds(y, x)) {
        return true;
      }
    }
    return false;
  };
  auto has_with = [&](auto&& pred) {
    for (const Form& y : forms) {
      if (pred(y)) return true;
    }
    return false;
  };

  for (const Form& x : forms) {
    if (!touched(x)) continue;
    const bool r_succ = has_with([&](const Form& y) { return r.holds(x, y); });
    const bool rp_succ = has_with([&](const Form& y) { return r_prime.holds(x, y); });
    if (r_succ && !rp_succ) {
      return false;
    }
    const bool r_pred = has_with([&](const Form& y) { return r.holds(y, x); });
    const bool rp_pred = has_with([&](const Form& y) { return r_prime.holds(y, x); });
    if (r_pred && !rp_pred) {
      return false;
    }
  }
  return true;
}

Cone cone(const std::string& apex_token, const std::vector<Form>& members) {
  for (const Form& m : members) {
    if (m.footprint().contains(apex_token)) {
      throw SymbolClash("apex token '" + apex_token + "' occurs in member '" +
                        m.text() + "'");
    }
  }
  auto alphabet = std::make_shared<Alphabet>("cone(" + apex_token + ")",
                                             std::vector<std::string>{apex_token});
  Form apex(alphabet, {apex_token});

  auto member_list = members;
  ExtensionRelation::Predicate holds = [apex, member_list](const Form& f, const Form& g) {
    if (!(f == apex)) {
      return false;
    }
    return std::find(member_list.begin(), member_list.end(), g) != member_list.end();
  };
  ExtensionRelation::Enumerator enumerate = [apex, member_list](const Form& f) {
    if (f == apex) {
      return member_list;
    }
    return std::vector<Form>{};
  };
  std::optional<std::size_t> bound;
  if (!member_list.empty()) {
    bound = member_list.size();
  }
  ExtensionRelation relation(apex_token, std::move(holds), std::move(enumerate), bound);
  return Cone{std::move(apex), std::move(relation)};
}

}  // namespace synth
