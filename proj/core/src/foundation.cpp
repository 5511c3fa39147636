#include "synth/foundation.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace synth {

SelectionRule::SelectionRule(std::string label, Form root, ExtensionRelation system,
                             Choice choose)
    : label_(std::move(label)),
      root_(std::move(root)),
      system_(std::move(system)),
      choose_(std::move(choose)) {
  if (!choose_) {
    throw InvalidStructure("selection rule '" + label_ + "' lacks a choice function");
  }
}

ChainPrefix chain_prefix(const SelectionRule& rule, std::size_t depth) {
  ChainPrefix prefix;
  prefix.forms.reserve(depth + 1);
  prefix.forms.push_back(rule.root());
  for (std::size_t i = 0; i < depth; ++i) {
    const Form& current = prefix.forms.back();
    std::optional<Form> next = rule.choose(current);
    if (!next) {
      if (rule.system().enumerable() &&
          !rule.system().successors(current).empty()) {
        throw ClosednessViolation("rule '" + rule.label() + "' stalls at '" +
                                  current.text() + "' although successors exist");
      }
      prefix.terminal = true;
      return prefix;
    }
    if (!rule.system().holds(current, *next)) {
      throw ChoiceOutsideSystem("rule '" + rule.label() + "' chose '" +
                                next->text() + "', not a successor of '" +
                                current.text() + "'");
    }
    prefix.forms.push_back(std::move(*next));
  }
  return prefix;
}

Form fundamental_neighbourhood(const SelectionRule& rule, std::size_t depth) {
  ChainPrefix prefix = chain_prefix(rule, depth);
  if (prefix.forms.size() != depth + 1) {
    throw NoSuccessor("chain of rule '" + rule.label() + "' ends at depth " +
                      std::to_string(prefix.forms.size() - 1) +
                      ", below requested depth " + std::to_string(depth));
  }
  return prefix.forms[depth];
}

Cover canonical_cover(const FoundationHandle& handle, std::size_t depth,
                      std::size_t node_budget) {
  if (!handle.system.enumerable()) {
    throw NotEnumerable("system '" + handle.system.name() +
                        "' has no enumerator; covers are not computable");
  }
  std::vector<Form> level{handle.base};
  std::size_t produced = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<Form> next;
    std::set<Form> seen;
    for (const Form& f : level) {
      for (Form& succ : handle.system.successors(f)) {
        if (seen.insert(succ).second) {
          if (++produced > node_budget) {
            throw SearchBudgetExceeded("cover frontier exceeded " +
                                       std::to_string(node_budget) + " forms");
          }
          next.push_back(std::move(succ));
        }
      }
    }
    level = std::move(next);
  }
  return Cover{handle, depth, std::move(level)};
}

namespace {

bool same_handle(const FoundationHandle& a, const FoundationHandle& b) {
  return a.base == b.base && a.system.name() == b.system.name();
}

}  // namespace

bool refines(const Cover& fine, const Cover& coarse, std::size_t node_budget) {
  if (!same_handle(fine.handle, coarse.handle)) {
    throw HandleMismatch("covers belong to different foundations");
  }
  if (fine.depth < coarse.depth) {
    throw DepthMismatch("fine cover has depth " + std::to_string(fine.depth) +
                        " < coarse depth " + std::to_string(coarse.depth));
  }
  const std::size_t diff = fine.depth - coarse.depth;

  // Everything reachable from the coarse parts within `diff` steps.
  std::set<Form> reachable(coarse.parts.begin(), coarse.parts.end());
  std::vector<Form> level = coarse.parts;
  std::size_t produced = level.size();
  for (std::size_t i = 0; i < diff; ++i) {
    std::vector<Form> next;
    for (const Form& f : level) {
      for (Form& succ : fine.handle.system.successors(f)) {
        if (reachable.insert(succ).second) {
          if (++produced > node_budget) {
            throw SearchBudgetExceeded("refinement frontier exceeded " +
                                       std::to_string(node_budget) + " forms");
          }
          next.push_back(std::move(succ));
        }
      }
    }
    level = std::move(next);
  }

  return std::all_of(fine.parts.begin(), fine.parts.end(),
                     [&](const Form& p) { return reachable.contains(p); });
}

Form point_passes_through(const SelectionRule& rule, const Cover& cover) {
  if (!(cover.handle.base == rule.root())) {
    throw NotOnChain("cover base '" + cover.handle.base.text() +
                     "' differs from rule root '" + rule.root().text() + "'");
  }
  Form part = fundamental_neighbourhood(rule, cover.depth);
  if (std::find(cover.parts.begin(), cover.parts.end(), part) ==
      cover.parts.end()) {
    throw NotOnChain("chain form '" + part.text() +
                     "' is not a part of the cover");
  }
  return part;
}

}  // namespace synth
