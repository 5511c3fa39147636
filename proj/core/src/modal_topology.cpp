#include "synth/modal_topology.hpp"

#include <algorithm>
#include <utility>

namespace synth {

KripkeFrame::KripkeFrame(std::vector<std::string> worlds,
                         std::vector<std::pair<std::string, std::string>> access)
    : worlds_(std::move(worlds)) {
  if (worlds_.empty()) {
    throw InvalidStructure("a frame needs at least one world");
  }
  if (worlds_.size() > 64) {
    throw SizeBudgetExceeded("frames are capped at 64 worlds");
  }
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (!index_.emplace(worlds_[i], static_cast<int>(i)).second) {
      throw InvalidStructure("duplicate world '" + worlds_[i] + "'");
    }
  }
  rows_.assign(worlds_.size(), 0);
  for (const auto& [from, to] : access) {
    rows_[static_cast<std::size_t>(index_of(from))] |=
        std::uint64_t(1) << index_of(to);
  }
}

int KripkeFrame::index_of(const std::string& world) const {
  auto it = index_.find(world);
  if (it == index_.end()) {
    throw UnknownName("world '" + world + "' is not in the frame");
  }
  return it->second;
}

bool KripkeFrame::accesses(const std::string& from, const std::string& to) const {
  return (row(index_of(from)) >> index_of(to)) & 1;
}

bool KripkeFrame::reflexive() const {
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    if (!((rows_[w] >> w) & 1)) {
      return false;
    }
  }
  return true;
}

bool KripkeFrame::transitive() const {
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    std::uint64_t two_step = 0;
    for (std::size_t v = 0; v < worlds_.size(); ++v) {
      if ((rows_[w] >> v) & 1) {
        two_step |= rows_[v];
      }
    }
    if ((two_step & ~rows_[w]) != 0) {
      return false;
    }
  }
  return true;
}

ModalFormulaPtr ModalFormula::atom(std::string name) {
  return std::make_shared<ModalFormula>(MAtom{std::move(name)});
}
ModalFormulaPtr ModalFormula::negation(ModalFormulaPtr body) {
  return std::make_shared<ModalFormula>(MNot{std::move(body)});
}
ModalFormulaPtr ModalFormula::conjunction(ModalFormulaPtr lhs, ModalFormulaPtr rhs) {
  return std::make_shared<ModalFormula>(MAnd{std::move(lhs), std::move(rhs)});
}
ModalFormulaPtr ModalFormula::disjunction(ModalFormulaPtr lhs, ModalFormulaPtr rhs) {
  return std::make_shared<ModalFormula>(MOr{std::move(lhs), std::move(rhs)});
}
ModalFormulaPtr ModalFormula::implication(ModalFormulaPtr lhs, ModalFormulaPtr rhs) {
  return std::make_shared<ModalFormula>(MImplies{std::move(lhs), std::move(rhs)});
}
ModalFormulaPtr ModalFormula::box(ModalFormulaPtr body) {
  return std::make_shared<ModalFormula>(MBox{std::move(body)});
}
ModalFormulaPtr ModalFormula::diamond(ModalFormulaPtr body) {
  return std::make_shared<ModalFormula>(MDiamond{std::move(body)});
}

namespace {

void collect_atoms(const ModalFormula& formula, std::set<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MAtom>) {
          out.insert(node.name);
        } else if constexpr (std::is_same_v<T, MNot> || std::is_same_v<T, MBox> ||
                             std::is_same_v<T, MDiamond>) {
          collect_atoms(*node.body, out);
        } else {
          collect_atoms(*node.lhs, out);
          collect_atoms(*node.rhs, out);
        }
      },
      formula.node());
}

// Truth mask of a formula over all worlds at once, given atom masks.
std::uint64_t eval_mask(const KripkeFrame& frame,
                        const std::map<std::string, std::uint64_t>& atoms,
                        const ModalFormula& formula) {
  const std::size_t n = frame.size();
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  return std::visit(
      [&](const auto& node) -> std::uint64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MAtom>) {
          auto it = atoms.find(node.name);
          if (it == atoms.end()) {
            throw UnknownAtom("atom '" + node.name + "' has no valuation");
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, MNot>) {
          return all & ~eval_mask(frame, atoms, *node.body);
        } else if constexpr (std::is_same_v<T, MAnd>) {
          return eval_mask(frame, atoms, *node.lhs) &
                 eval_mask(frame, atoms, *node.rhs);
        } else if constexpr (std::is_same_v<T, MOr>) {
          return eval_mask(frame, atoms, *node.lhs) |
                 eval_mask(frame, atoms, *node.rhs);
        } else if constexpr (std::is_same_v<T, MImplies>) {
          return (all & ~eval_mask(frame, atoms, *node.lhs)) |
                 eval_mask(frame, atoms, *node.rhs);
        } else if constexpr (std::is_same_v<T, MDiamond>) {
          const std::uint64_t body = eval_mask(frame, atoms, *node.body);
          std::uint64_t out = 0;
          for (std::size_t w = 0; w < n; ++w) {
            if (frame.row(static_cast<int>(w)) & body) {
              out |= std::uint64_t(1) << w;
            }
          }
          return out;
        } else {
          static_assert(std::is_same_v<T, MBox>);
          const std::uint64_t body = eval_mask(frame, atoms, *node.body);
          std::uint64_t out = 0;
          for (std::size_t w = 0; w < n; ++w) {
            if ((frame.row(static_cast<int>(w)) & ~body) == 0) {
              out |= std::uint64_t(1) << w;
            }
          }
          return out;
        }
      },
      formula.node());
}

}  // namespace

std::vector<std::string> modal_atoms(const ModalFormula& formula) {
  std::set<std::string> atoms;
  collect_atoms(formula, atoms);
  return {atoms.begin(), atoms.end()};
}

bool modal_eval(const KripkeFrame& frame, const ModalValuation& valuation,
                const std::string& world, const ModalFormula& formula) {
  std::map<std::string, std::uint64_t> masks;
  for (const auto& [atom, worlds] : valuation) {
    std::uint64_t mask = 0;
    for (const auto& w : worlds) {
      mask |= std::uint64_t(1) << frame.index_of(w);
    }
    masks[atom] = mask;
  }
  const std::uint64_t truth = eval_mask(frame, masks, formula);
  return (truth >> frame.index_of(world)) & 1;
}

std::optional<ModalCounterexample> valid_on_frame(const KripkeFrame& frame,
                                                  const ModalFormula& formula,
                                                  std::size_t budget) {
  const std::vector<std::string> atoms = modal_atoms(formula);
  const std::size_t n = frame.size();
  const std::size_t bits = atoms.size() * n;
  if (bits >= 63 || (std::uint64_t(1) << bits) > budget) {
    throw SearchBudgetExceeded("2^(atoms*worlds) valuations exceed the budget");
  }
  for (std::uint64_t valuation = 0; valuation < (std::uint64_t(1) << bits);
       ++valuation) {
    std::map<std::string, std::uint64_t> masks;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const std::uint64_t all = n == 64 ? ~std::uint64_t(0)
                                        : (std::uint64_t(1) << n) - 1;
      masks[atoms[a]] = (valuation >> (a * n)) & all;
    }
    const std::uint64_t truth = eval_mask(frame, masks, formula);
    for (std::size_t w = 0; w < n; ++w) {
      if (!((truth >> w) & 1)) {
        ModalCounterexample counterexample;
        counterexample.world = frame.worlds()[w];
        for (std::size_t a = 0; a < atoms.size(); ++a) {
          std::set<std::string> worlds;
          for (std::size_t v = 0; v < n; ++v) {
            if ((masks[atoms[a]] >> v) & 1) {
              worlds.insert(frame.worlds()[v]);
            }
          }
          counterexample.valuation[atoms[a]] = std::move(worlds);
        }
        return counterexample;
      }
    }
  }
  return std::nullopt;
}

S4Report s4_correspondence(const KripkeFrame& frame, std::size_t budget) {
  S4Report report;
  report.reflexive = frame.reflexive();
  report.transitive = frame.transitive();

  const ModalFormulaPtr p = ModalFormula::atom("p");
  const ModalFormulaPtr t_axiom =
      ModalFormula::implication(ModalFormula::box(p), p);
  const ModalFormulaPtr four_axiom = ModalFormula::implication(
      ModalFormula::diamond(ModalFormula::diamond(p)), ModalFormula::diamond(p));

  report.t_axiom_valid = !valid_on_frame(frame, *t_axiom, budget).has_value();
  report.four_axiom_valid = !valid_on_frame(frame, *four_axiom, budget).has_value();

  if (report.reflexive != report.t_axiom_valid ||
      report.transitive != report.four_axiom_valid) {
    throw InternalCheckFailure("frame correspondence broke on a frame with " +
                               std::to_string(frame.size()) + " worlds");
  }
  return report;
}

namespace {

std::uint64_t closure_mask(const KripkeFrame& frame, std::uint64_t subset) {
  std::uint64_t out = subset;
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if (frame.row(static_cast<int>(w)) & subset) {
      out |= std::uint64_t(1) << w;
    }
  }
  return out;
}

}  // namespace

std::set<std::string> closure(const KripkeFrame& frame,
                              const std::set<std::string>& subset) {
  std::uint64_t mask = 0;
  for (const auto& w : subset) {
    mask |= std::uint64_t(1) << frame.index_of(w);
  }
  const std::uint64_t closed = closure_mask(frame, mask);
  std::set<std::string> out;
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if ((closed >> w) & 1) {
      out.insert(frame.worlds()[w]);
    }
  }
  return out;
}

KuratowskiReport kuratowski_check(const KripkeFrame& frame) {
  const std::size_t n = frame.size();
  if (n > 12) {
    throw SizeBudgetExceeded("the subset sweep is capped at 12 worlds");
  }
  const std::uint64_t subsets = std::uint64_t(1) << n;

  std::vector<std::uint64_t> closed(subsets);
  for (std::uint64_t a = 0; a < subsets; ++a) {
    closed[a] = closure_mask(frame, a);
  }

  KuratowskiReport report;
  report.empty_law = closed[0] == 0;
  report.extensive_all = true;
  report.idempotent_all = true;
  report.additive_all = true;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if ((a & ~closed[a]) != 0) {
      report.extensive_all = false;
    }
    if (closed[closed[a]] != closed[a]) {
      report.idempotent_all = false;
    }
  }
  for (std::uint64_t a = 0; a < subsets && report.additive_all; ++a) {
    for (std::uint64_t b = 0; b < subsets; ++b) {
      if (closed[a | b] != (closed[a] | closed[b])) {
        report.additive_all = false;
        break;
      }
    }
  }

  report.access_transitive = frame.transitive();
  // access-or-identity: transitivity of the absorbed relation.
  bool absorbed = true;
  for (std::size_t w = 0; w < n && absorbed; ++w) {
    const std::uint64_t row_w =
        frame.row(static_cast<int>(w)) | (std::uint64_t(1) << w);
    std::uint64_t two_step = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((row_w >> v) & 1) {
        two_step |= frame.row(static_cast<int>(v)) | (std::uint64_t(1) << v);
      }
    }
    absorbed = (two_step & ~row_w) == 0;
  }
  report.absorbed_transitive = absorbed;

  if (report.idempotent_all != report.absorbed_transitive) {
    throw InternalCheckFailure("closure idempotency diverged from transitivity of "
                               "access-or-identity");
  }
  return report;
}

CoverStructure::CoverStructure(std::vector<std::string> elements,
                               std::vector<std::pair<std::string, std::string>> order,
                               std::vector<CoverAssertion> covers)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
  if (elements_.empty()) {
    throw InvalidStructure("cover structure over an empty poset");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], static_cast<int>(i)).second) {
      throw InvalidStructure("duplicate element '" + elements_[i] + "'");
    }
  }
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq_[i][i] = true;  // reflexive pairs are implied
  }
  auto at = [&](const std::string& e) {
    return static_cast<std::size_t>(index_of(e));
  };
  for (const auto& [a, b] : order) {
    leq_[at(a)][at(b)] = true;
  }
  // Validate: the given relation (with implied reflexivity) must already be
  // transitive and antisymmetric.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq_[a][b]) continue;
      if (a != b && leq_[b][a]) {
        throw InvalidPoset("elements '" + elements_[a] + "' and '" + elements_[b] +
                           "' order each other");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[b][c] && !leq_[a][c]) {
          throw InvalidPoset("order is not transitive: " + elements_[a] + " <= " +
                             elements_[b] + " <= " + elements_[c]);
        }
      }
    }
  }
  for (const auto& [of, by] : covers_) {
    at(of);
    for (const auto& x : by) {
      at(x);
    }
  }
}

int CoverStructure::index_of(const std::string& element) const {
  auto it = index_.find(element);
  if (it == index_.end()) {
    throw UnknownName("element '" + element + "' is not in the poset");
  }
  return it->second;
}

bool CoverStructure::leq(int a, int b) const {
  return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

namespace {

/// Derivability engine: the least covering relation generated by the listed
/// assertions, membership, order dominance, and composition. `covered_by`
/// computes {x : x is covered by target} as a fixpoint.
class CoverDerivability {
public:
  CoverDerivability(const CoverStructure& structure, std::size_t budget)
      : structure_(structure), budget_(budget) {
    const std::size_t n = structure.elements().size();
    listed_.assign(n, {});
    for (std::size_t c = 0; c < structure.covers().size(); ++c) {
      const auto& [of, by] = structure.covers()[c];
      std::vector<int> members;
      members.reserve(by.size());
      for (const auto& x : by) {
        members.push_back(structure.index_of(x));
      }
      listed_[static_cast<std::size_t>(structure.index_of(of))].push_back(
          std::move(members));
    }
  }

  const std::vector<std::vector<int>>& listed_covers(int element) const {
    return listed_[static_cast<std::size_t>(element)];
  }

  bool derivable(int element, const std::vector<int>& target) {
    const std::size_t n = structure_.elements().size();
    std::vector<bool> covered(n, false);
    // Membership and order dominance seed the fixpoint.
    for (int t : target) {
      for (std::size_t x = 0; x < n; ++x) {
        if (structure_.leq(static_cast<int>(x), t)) {
          covered[x] = true;
        }
      }
    }
    // Composition: x has a listed cover all of whose members are covered.
    bool changed = true;
    std::size_t work = 0;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        for (const auto& members : listed_[x]) {
          if (++work > budget_) {
            throw SearchBudgetExceeded("cover saturation exceeded the budget");
          }
          bool all = true;  // an empty listed cover composes vacuously
          for (int m : members) {
            if (!covered[static_cast<std::size_t>(m)]) {
              all = false;
              break;
            }
          }
          if (all) {
            covered[x] = true;
            changed = true;
            break;
          }
        }
      }
    }
    return covered[static_cast<std::size_t>(element)];
  }

private:
  const CoverStructure& structure_;
  std::size_t budget_;
  std::vector<std::vector<std::vector<int>>> listed_;
};

}  // namespace

FgReport fg_axiom_check(const CoverStructure& structure, std::size_t budget) {
  FgReport report;
  const std::size_t n = structure.elements().size();
  CoverDerivability engine(structure, budget);

  // A1 -- "a subset covers each of its elements", read against the listed
  // data: every element mentioned inside a cover set must itself carry a
  // listed self-containing cover.
  std::vector<bool> self_covered(n, false);
  for (const auto& [of, by] : structure.covers()) {
    const int a = structure.index_of(of);
    if (std::find(by.begin(), by.end(), of) != by.end()) {
      self_covered[static_cast<std::size_t>(a)] = true;
    }
  }
  report.a1_element_covers = true;
  for (const auto& [of, by] : structure.covers()) {
    (void)of;
    for (const auto& x : by) {
      if (!self_covered[static_cast<std::size_t>(structure.index_of(x))]) {
        report.a1_element_covers = false;
        if (report.a1_violations.size() < 8 &&
            std::find(report.a1_violations.begin(), report.a1_violations.end(),
                      x) == report.a1_violations.end()) {
          report.a1_violations.push_back(x);
        }
      }
    }
  }

  // A2 -- {b} covers a whenever a <= b.
  report.a2_order_covers = true;
  for (std::size_t a = 0; a < n && report.a2_order_covers; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (structure.leq(static_cast<int>(a), static_cast<int>(b)) &&
          !engine.derivable(static_cast<int>(a), {static_cast<int>(b)})) {
        report.a2_order_covers = false;
        break;
      }
    }
  }

  // A3 -- meets of two covers of the same element, where all pairwise meets
  // exist.
  auto meet = [&](int x, int y) -> std::optional<int> {
    if (structure.leq(x, y)) return x;
    if (structure.leq(y, x)) return y;
    std::optional<int> best;
    for (std::size_t z = 0; z < n; ++z) {
      if (structure.leq(static_cast<int>(z), x) &&
          structure.leq(static_cast<int>(z), y)) {
        if (!best || structure.leq(*best, static_cast<int>(z))) {
          best = static_cast<int>(z);
        }
      }
    }
    if (!best) return std::nullopt;
    // The candidate must dominate every common lower bound.
    for (std::size_t z = 0; z < n; ++z) {
      if (structure.leq(static_cast<int>(z), x) &&
          structure.leq(static_cast<int>(z), y) &&
          !structure.leq(static_cast<int>(z), *best)) {
        return std::nullopt;
      }
    }
    return best;
  };

  report.a3_meets = true;
  for (std::size_t i = 0; i < structure.covers().size(); ++i) {
    for (std::size_t j = i; j < structure.covers().size(); ++j) {
      const auto& [of_a, by_a] = structure.covers()[i];
      const auto& [of_b, by_b] = structure.covers()[j];
      if (of_a != of_b) continue;
      const int a = structure.index_of(of_a);
      std::vector<int> meets;
      bool applicable = true;
      for (const auto& x : by_a) {
        for (const auto& y : by_b) {
          const auto m = meet(structure.index_of(x), structure.index_of(y));
          if (!m) {
            applicable = false;
            break;
          }
          meets.push_back(*m);
        }
        if (!applicable) break;
      }
      if (!applicable) {
        ++report.a3_inapplicable;
        continue;
      }
      ++report.a3_applicable;
      std::sort(meets.begin(), meets.end());
      meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
      if (!engine.derivable(a, meets)) {
        report.a3_meets = false;
      }
    }
  }

  // A4 -- transitivity: refining every member of a listed cover by one of
  // its own listed covers (depth-aligned families; members without a
  // further cover contribute themselves) must stay derivable.
  report.a4_transitivity = true;
  std::size_t max_covers = 0;
  for (std::size_t x = 0; x < n; ++x) {
    max_covers = std::max(max_covers, engine.listed_covers(static_cast<int>(x)).size());
  }
  for (const auto& [of, by] : structure.covers()) {
    const int a = structure.index_of(of);
    for (std::size_t pick = 0; pick < max_covers && report.a4_transitivity; ++pick) {
      std::vector<int> united;
      for (const auto& x : by) {
        const int xi = structure.index_of(x);
        const auto& options = engine.listed_covers(xi);
        if (pick < options.size()) {
          united.insert(united.end(), options[pick].begin(), options[pick].end());
        } else {
          united.push_back(xi);
        }
      }
      std::sort(united.begin(), united.end());
      united.erase(std::unique(united.begin(), united.end()), united.end());
      if (!united.empty() && !engine.derivable(a, united)) {
        report.a4_transitivity = false;
      }
    }
  }

  return report;
}

CoverStructure cover_structure_from_system(const FormalSystem& system,
                                           const Form& base, std::size_t depth,
                                           std::size_t budget) {
  const FoundationHandle handle{system.relation, base};

  // Levels of the truncation; level d holds the depth-d parts.
  std::vector<std::vector<Form>> levels;
  for (std::size_t d = 0; d <= depth; ++d) {
    levels.push_back(canonical_cover(handle, d, budget).parts);
  }

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<CoverStructure::CoverAssertion> covers;

  for (std::size_t d = 0; d <= depth; ++d) {
    for (const Form& f : levels[d]) {
      elements.push_back(f.text());
      // Every canonical cover of f down to the truncation depth. The k >= 1
      // parts double as the order pairs: finer parts sit below f.
      for (std::size_t k = 0; d + k <= depth; ++k) {
        const Cover cover = canonical_cover({system.relation, f}, k, budget);
        std::vector<std::string> by;
        by.reserve(cover.parts.size());
        for (const Form& p : cover.parts) {
          by.push_back(p.text());
          if (k > 0) {
            order.emplace_back(p.text(), f.text());
          }
        }
        covers.emplace_back(f.text(), std::move(by));
      }
    }
  }
  return CoverStructure(std::move(elements), std::move(order), std::move(covers));
}

}  // namespace synth
