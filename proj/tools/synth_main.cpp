// Batch front door over the synth library: every verb reads flags and JSON
// files, writes a single JSON document to stdout, and reports diagnostics on
// stderr. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "synth/json_io.hpp"

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw synth::ParseError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw synth::ParseError("bad JSON in '" + path + "': " + e.what());
  }
}

// Inline JSON, or @file to load from disk.
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    return read_json_file(arg.substr(1));
  }
  try {
    return json::parse(arg);
  } catch (const json::parse_error& e) {
    throw synth::ParseError("bad JSON argument: " + std::string(e.what()));
  }
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

struct Options {
  std::string config_path;
  synth::RunConfig config;
  std::optional<synth::Registry> registry;

  void load() {
    json config_json = json::object();
    if (!config_path.empty()) {
      config_json = read_json_file(config_path);
    }
    config = synth::config_from_json(config_json);
    if (const char* env = std::getenv("SYNTH_NODE_BUDGET")) {
      config.node_budget = std::strtoull(env, nullptr, 10);
    }
    registry = synth::Registry::from_config(config_json);
  }

  const synth::FormalSystem& system(const std::string& name) const {
    return registry->system(name);
  }
};

synth::ComputableReal real_from_spec(const std::string& spec) {
  if (spec == "sqrt2m1" || spec == "sqrt2") {
    return synth::sqrt2_minus_one();
  }
  return synth::from_rational(synth::parse_rational(spec));
}

void run_russell_demo() {
  // The diagonal concept: F says "x does not R-relate to itself", so the
  // form F is built from the symbol R. Applying R to F is refused, while a
  // relation with a fresh symbol applies fine.
  auto alphabet = std::make_shared<synth::Alphabet>(
      "relational", std::vector<std::string>{"x", "R", "Q", "¬"});
  synth::FormalLanguage language(
      "relational", alphabet,
      [](std::span<const std::string>) { return true; });
  const synth::Form diagonal = language.make_form({"¬", "x", "R", "x"});
  synth::ExtensionRelation r(
      "R", [](const synth::Form&, const synth::Form&) { return false; });
  synth::ExtensionRelation q(
      "Q", [](const synth::Form&, const synth::Form&) { return false; });

  json out{{"form", diagonal.text()}, {"relation", "R"}};
  try {
    synth::stratified_apply(r, diagonal);
    out["self_application"] = "accepted";  // would be a guard bug
  } catch (const synth::StratificationError& e) {
    out["self_application"] = "StratificationError";
    out["detail"] = e.what();
  }
  synth::stratified_apply(q, diagonal);
  out["unrelated"] = json{{"relation", "Q"}, {"ok", true}};
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal systems, point-free foundations, computable reals"};
  app.require_subcommand(1);

  Options options;
  app.add_option("--config", options.config_path,
                 "JSON config: budgets, alphabets, cone relations");

  // star
  std::string star_system, star_from, star_to, star_carrier;
  std::size_t star_depth = 0;
  auto* star = app.add_subcommand("star", "bounded transitive reachability");
  star->add_option("--system", star_system)->required();
  star->add_option("--from", star_from)->required();
  star->add_option("--to", star_to)->required();
  star->add_option("--max-depth", star_depth)->required();
  star->add_option("--carrier", star_carrier,
                   "JSON file: array of form texts bounding the search");

  // paths
  std::string paths_system, paths_root;
  std::size_t paths_depth = 0;
  auto* paths = app.add_subcommand("paths", "all length-n extension paths");
  paths->add_option("--system", paths_system)->required();
  paths->add_option("--root", paths_root)->required();
  paths->add_option("--depth", paths_depth)->required();

  // cover
  std::string cover_system, cover_base;
  std::size_t cover_depth = 0;
  auto* cover = app.add_subcommand("cover", "canonical cover at a depth");
  cover->add_option("--system", cover_system)->required();
  cover->add_option("--base", cover_base)->required();
  cover->add_option("--depth", cover_depth)->required();

  // refine
  std::string refine_system, refine_base;
  std::size_t refine_fine = 0, refine_coarse = 0;
  auto* refine = app.add_subcommand("refine", "does the finer cover refine the coarser");
  refine->add_option("--system", refine_system)->required();
  refine->add_option("--base", refine_base)->required();
  refine->add_option("--fine", refine_fine)->required();
  refine->add_option("--coarse", refine_coarse)->required();

  // chain
  std::string chain_system, chain_rule;
  std::size_t chain_depth = 0;
  auto* chain = app.add_subcommand("chain", "finite prefix of a selection rule's chain");
  chain->add_option("--system", chain_system,
                    "consistency check against the rule's own system");
  chain->add_option("--rule", chain_rule, "rule spec JSON (or @file)")->required();
  chain->add_option("--depth", chain_depth)->required();

  // real locate / real compare
  auto* real = app.add_subcommand("real", "computable reals in ]-1,1[");
  real->require_subcommand(1);
  std::string locate_name, locate_rational;
  std::size_t locate_precision = 0;
  auto* locate_cmd = real->add_subcommand("locate", "interval of width <= 2^-k");
  locate_cmd->add_option("--name", locate_name, "builtin: sqrt2m1");
  locate_cmd->add_option("--rational", locate_rational, "p/q in ]-1,1[");
  locate_cmd->add_option("--precision", locate_precision)->required();

  std::string compare_x, compare_y;
  std::size_t compare_precision = 0;
  auto* compare_cmd = real->add_subcommand("compare", "order at finite precision");
  compare_cmd->add_option("--x", compare_x)->required();
  compare_cmd->add_option("--y", compare_y)->required();
  compare_cmd->add_option("--precision", compare_precision)->required();

  // constituent of / enum / chain
  auto* constituent = app.add_subcommand("constituent", "Hintikka constituents");
  constituent->require_subcommand(1);
  std::string of_model, of_element, of_tuple;
  int of_depth = 0;
  auto* of_cmd = constituent->add_subcommand("of", "the tuple's unique constituent");
  of_cmd->add_option("--model", of_model, "model JSON file")->required();
  of_cmd->add_option("--element", of_element, "single element (width 1)");
  of_cmd->add_option("--tuple", of_tuple, "comma-separated elements");
  of_cmd->add_option("--depth", of_depth)->required();

  std::string enum_predicates;
  int enum_width = 1, enum_depth = 0;
  auto* enum_cmd = constituent->add_subcommand("enum", "all constituents of a depth");
  enum_cmd->add_option("--predicates", enum_predicates, "signature, e.g. P/1,R/2")
      ->required();
  enum_cmd->add_option("--width", enum_width);
  enum_cmd->add_option("--depth", enum_depth)->required();

  std::string cchain_model, cchain_element;
  int cchain_depth = 0;
  auto* cchain_cmd =
      constituent->add_subcommand("chain", "the element's constituent chain");
  cchain_cmd->add_option("--model", cchain_model)->required();
  cchain_cmd->add_option("--element", cchain_element)->required();
  cchain_cmd->add_option("--max-depth", cchain_depth)->required();

  // modal eval / valid
  auto* modal = app.add_subcommand("modal", "Kripke semantics");
  modal->require_subcommand(1);
  std::string meval_frame, meval_formula, meval_world, meval_valuation;
  auto* meval_cmd = modal->add_subcommand("eval", "truth at a world");
  meval_cmd->add_option("--frame", meval_frame, "frame JSON file")->required();
  meval_cmd->add_option("--formula", meval_formula)->required();
  meval_cmd->add_option("--world", meval_world)->required();
  meval_cmd->add_option("--valuation", meval_valuation, "JSON (or @file)")->required();

  std::string mvalid_frame, mvalid_formula;
  auto* mvalid_cmd = modal->add_subcommand("valid", "frame validity by sweep");
  mvalid_cmd->add_option("--frame", mvalid_frame)->required();
  mvalid_cmd->add_option("--formula", mvalid_formula)->required();

  // s4 / kuratowski
  std::string s4_frame;
  auto* s4_cmd = app.add_subcommand("s4", "reflexivity/transitivity vs T and 4 axioms");
  s4_cmd->add_option("--frame", s4_frame)->required();

  std::string kur_frame;
  auto* kur_cmd = app.add_subcommand("kuratowski", "closure-law subset sweep");
  kur_cmd->add_option("--frame", kur_frame)->required();

  // ftop check
  auto* ftop = app.add_subcommand("ftop", "formal topologies");
  ftop->require_subcommand(1);
  std::string ftop_covers, ftop_system, ftop_base;
  std::size_t ftop_depth = 0;
  auto* ftop_check = ftop->add_subcommand("check", "covering-axiom report");
  ftop_check->add_option("--covers", ftop_covers, "cover structure JSON file");
  ftop_check->add_option("--system", ftop_system, "derive from a system instead");
  ftop_check->add_option("--base", ftop_base);
  ftop_check->add_option("--depth", ftop_depth);

  // russell demo
  auto* russell = app.add_subcommand("russell", "stratification guard");
  russell->require_subcommand(1);
  russell->add_subcommand("demo", "run the diagonal construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the usage message
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    options.load();

    if (star->parsed()) {
      const auto& system = options.system(star_system);
      const synth::Form from = synth::parse_form_text(system.language, star_from);
      const synth::Form to = synth::parse_form_text(system.language, star_to);
      std::optional<synth::FiniteCarrier> carrier;
      if (!star_carrier.empty()) {
        std::vector<synth::Form> forms;
        for (const auto& text : read_json_file(star_carrier)) {
          forms.push_back(
              synth::parse_form_text(system.language, text.get<std::string>()));
        }
        carrier.emplace(std::move(forms));
      }
      const bool related = synth::related_star(
          system.relation, from, to, star_depth,
          carrier ? &*carrier : nullptr, options.config.node_budget);
      emit(json{{"related", related}});
    } else if (paths->parsed()) {
      const auto& system = options.system(paths_system);
      const synth::Form root = synth::parse_form_text(system.language, paths_root);
      json out_paths = json::array();
      const auto all = synth::enumerate_paths(system.relation, root, paths_depth,
                                              options.config.node_budget);
      for (const auto& path : all) {
        json steps = json::array();
        for (const auto& f : path.steps()) {
          steps.push_back(f.text());
        }
        out_paths.push_back(std::move(steps));
      }
      emit(json{{"count", all.size()}, {"paths", std::move(out_paths)}});
    } else if (cover->parsed()) {
      const auto& system = options.system(cover_system);
      const synth::Form base = synth::parse_form_text(system.language, cover_base);
      const synth::Cover result = synth::canonical_cover(
          {system.relation, base}, cover_depth, options.config.node_budget);
      json parts = json::array();
      for (const auto& p : result.parts) {
        parts.push_back(synth::form_to_json(p));
      }
      emit(json{{"base", base.text()},
                {"depth", result.depth},
                {"count", result.parts.size()},
                {"parts", std::move(parts)}});
    } else if (refine->parsed()) {
      const auto& system = options.system(refine_system);
      const synth::Form base = synth::parse_form_text(system.language, refine_base);
      const synth::FoundationHandle handle{system.relation, base};
      const auto fine = synth::canonical_cover(handle, refine_fine,
                                               options.config.node_budget);
      const auto coarse = synth::canonical_cover(handle, refine_coarse,
                                                 options.config.node_budget);
      emit(json{{"refines",
                 synth::refines(fine, coarse, options.config.node_budget)}});
    } else if (chain->parsed()) {
      const synth::SelectionRule rule = synth::rule_from_json(read_json_arg(chain_rule));
      if (!chain_system.empty() &&
          options.system(chain_system).relation.name() != rule.system().name()) {
        throw synth::HandleMismatch("rule lives over '" + rule.system().name() +
                                    "', not '" + chain_system + "'");
      }
      const synth::ChainPrefix prefix = synth::chain_prefix(rule, chain_depth);
      json forms = json::array();
      json texts = json::array();
      for (const auto& f : prefix.forms) {
        forms.push_back(synth::form_to_json(f));
        texts.push_back(f.text());
      }
      emit(json{{"rule", rule.label()},
                {"terminal", prefix.terminal},
                {"forms", std::move(forms)},
                {"texts", std::move(texts)}});
    } else if (locate_cmd->parsed()) {
      if (locate_name.empty() == locate_rational.empty()) {
        throw synth::ParseError("give exactly one of --name and --rational");
      }
      const synth::ComputableReal x =
          real_from_spec(locate_name.empty() ? locate_rational : locate_name);
      emit(synth::interval_to_json(synth::locate(x, locate_precision)));
    } else if (compare_cmd->parsed()) {
      const synth::Ordering ordering = synth::compare(
          real_from_spec(compare_x), real_from_spec(compare_y), compare_precision);
      emit(json{{"result", synth::to_string(ordering)},
                {"precision", compare_precision}});
    } else if (of_cmd->parsed()) {
      const synth::FiniteModel model = synth::model_from_json(read_json_file(of_model));
      std::vector<std::string> tuple;
      if (!of_tuple.empty()) {
        std::size_t start = 0;
        while (start <= of_tuple.size()) {
          const std::size_t comma = of_tuple.find(',', start);
          tuple.push_back(of_tuple.substr(
              start, comma == std::string::npos ? comma : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else if (!of_element.empty()) {
        tuple.push_back(of_element);
      } else {
        throw synth::ParseError("give --element or --tuple");
      }
      emit(synth::constituent_to_json(synth::constituent_of(
          model, tuple, of_depth, options.config.max_constituent_depth)));
    } else if (enum_cmd->parsed()) {
      std::vector<synth::PredicateSymbol> predicates;
      std::size_t start = 0;
      while (start < enum_predicates.size()) {
        std::size_t comma = enum_predicates.find(',', start);
        if (comma == std::string::npos) comma = enum_predicates.size();
        const std::string item = enum_predicates.substr(start, comma - start);
        const std::size_t slash = item.find('/');
        if (slash == std::string::npos) {
          throw synth::ParseError("predicates look like P/1");
        }
        predicates.push_back(synth::PredicateSymbol{
            item.substr(0, slash), std::stoi(item.substr(slash + 1))});
        start = comma + 1;
      }
      const synth::Vocabulary vocabulary(std::move(predicates));
      const auto all = synth::enumerate_constituents(
          vocabulary, enum_width, enum_depth, options.config.enumeration_budget);
      json encodings = json::array();
      for (const auto& c : all) {
        encodings.push_back(c.encoding());
      }
      emit(json{{"count", all.size()}, {"constituents", std::move(encodings)}});
    } else if (cchain_cmd->parsed()) {
      const synth::FiniteModel model =
          synth::model_from_json(read_json_file(cchain_model));
      const auto chain_result = synth::constituent_chain(
          model, cchain_element, cchain_depth, options.config.max_constituent_depth);
      json members = json::array();
      for (const auto& c : chain_result) {
        members.push_back(synth::constituent_to_json(c));
      }
      bool coherent = true;
      for (std::size_t i = 0; i + 1 < chain_result.size(); ++i) {
        coherent = coherent && synth::parent(chain_result[i + 1]) == chain_result[i];
      }
      emit(json{{"element", cchain_element},
                {"coherent", coherent},
                {"chain", std::move(members)}});
    } else if (meval_cmd->parsed()) {
      const synth::KripkeFrame frame =
          synth::frame_from_json(read_json_file(meval_frame));
      const bool value = synth::modal_eval(
          frame, synth::valuation_from_json(read_json_arg(meval_valuation)),
          meval_world, *synth::parse_modal_formula(meval_formula));
      emit(json{{"value", value}});
    } else if (mvalid_cmd->parsed()) {
      const synth::KripkeFrame frame =
          synth::frame_from_json(read_json_file(mvalid_frame));
      const auto counterexample =
          synth::valid_on_frame(frame, *synth::parse_modal_formula(mvalid_formula),
                                options.config.node_budget);
      if (!counterexample) {
        emit(json{{"valid", true}});
      } else {
        emit(json{{"valid", false},
                  {"counterexample",
                   json{{"world", counterexample->world},
                        {"valuation",
                         synth::valuation_to_json(counterexample->valuation)}}}});
      }
    } else if (s4_cmd->parsed()) {
      const synth::S4Report report = synth::s4_correspondence(
          synth::frame_from_json(read_json_file(s4_frame)),
          options.config.node_budget);
      emit(json{{"reflexive", report.reflexive},
                {"transitive", report.transitive},
                {"t_axiom_valid", report.t_axiom_valid},
                {"four_axiom_valid", report.four_axiom_valid}});
    } else if (kur_cmd->parsed()) {
      const synth::KuratowskiReport report =
          synth::kuratowski_check(synth::frame_from_json(read_json_file(kur_frame)));
      emit(json{{"empty_law", report.empty_law},
                {"extensive", report.extensive_all},
                {"additive", report.additive_all},
                {"idempotent", report.idempotent_all},
                {"access_transitive", report.access_transitive},
                {"absorbed_transitive", report.absorbed_transitive}});
    } else if (ftop_check->parsed()) {
      std::optional<synth::CoverStructure> structure;
      if (!ftop_covers.empty()) {
        structure = synth::covers_from_json(read_json_file(ftop_covers));
      } else if (!ftop_system.empty()) {
        const auto& system = options.system(ftop_system);
        if (ftop_base.empty() && !system.root) {
          throw synth::ParseError("system '" + ftop_system +
                                  "' has no root; give --base");
        }
        const synth::Form base =
            !ftop_base.empty()
                ? synth::parse_form_text(system.language, ftop_base)
                : *system.root;
        structure = synth::cover_structure_from_system(
            system, base, ftop_depth, options.config.node_budget);
      } else {
        throw synth::ParseError("give --covers FILE or --system NAME");
      }
      const synth::FgReport report =
          synth::fg_axiom_check(*structure, options.config.node_budget);
      emit(json{{"a1_element_covers", report.a1_element_covers},
                {"a1_violations", report.a1_violations},
                {"a2_order_covers", report.a2_order_covers},
                {"a3_meets", report.a3_meets},
                {"a3_applicable", report.a3_applicable},
                {"a3_inapplicable", report.a3_inapplicable},
                {"a4_transitivity", report.a4_transitivity},
                {"all_applicable_hold", report.all_applicable_hold()}});
    } else if (russell->parsed()) {
      run_russell_demo();
    }
  } catch (const synth::Error& e) {
    emit(json{{"error", e.name()}});
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"error", "InternalError"}});
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
