// play transcripts and exhaustive bounded-depth tactic verification
#include <iostream>
#include <sstream>

#include "common.hpp"

namespace {

// reads one move per line from stdin: atom indices separated by spaces,
// an empty line or "." resigns
ig::OneStrategy human_strategy() {
  return [](const std::vector<ig::Inning>& innings) -> std::optional<ig::AtomSet> {
    std::fprintf(stderr, "one[%zu]> ", innings.size() + 1);
    std::string line;
    if (!std::getline(std::cin, line)) return std::nullopt;
    if (line.empty() || line == ".") return std::nullopt;
    std::istringstream in(line);
    ig::AtomSet move;
    int atom;
    while (in >> atom) {
      if (atom < 0 || atom >= 64) throw ig::input_error("atom index out of range");
      move.insert(atom);
    }
    return move;
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering game plays and tactic verification"};
  app.require_subcommand(1);

  std::string kind_name = "mg", instance_path, menu_path, moves_path, one_mode = "chain";
  std::string out_path, defeat_path;
  igtool::TacticSpec spec;
  int depth = 6, lag = 2;

  auto load_instance_ptr = [&](std::optional<ig::IdealInstance>& slot) -> const ig::IdealInstance* {
    if (instance_path.empty()) return nullptr;
    slot = ig::load_instance(ig::read_file(instance_path));
    return &*slot;
  };
  auto resolve = [&](const igtool::BuiltTactic& bt,
                     const ig::IdealInstance* loaded) -> const ig::IdealInstance& {
    if (loaded) return *loaded;
    if (bt.instance) return *bt.instance;
    throw ig::input_error("this tactic kind needs --instance");
  };

  CLI::App* play = app.add_subcommand("play", "run one play and emit the transcript");
  play->add_option("--kind", kind_name, "mg|mg-full|smg|vsg");
  play->add_option("--instance", instance_path, "instance json");
  play->add_option("--menu", menu_path, "menu json restricting ONE to listed moves");
  play->add_option("--moves", moves_path, "ONE's scripted moves json");
  play->add_option("--one", one_mode, "chain|human");
  play->add_option("--depth", depth, "maximum innings");
  play->add_option("--lag", lag, "finite win lag");
  play->add_option("--out", out_path, "transcript destination (default stdout)");
  igtool::add_tactic_flags(play, spec);
  play->callback([&] {
    std::optional<ig::IdealInstance> slot;
    const ig::IdealInstance* loaded = load_instance_ptr(slot);
    ig::VerifyConfig cfg;
    cfg.depth = depth;
    cfg.lag = lag;
    if (!menu_path.empty()) cfg.menu = igtool::load_atom_sets(menu_path);
    cfg.node_budget = igtool::env_budget(ig::kDefaultNodeBudget);
    igtool::BuiltTactic bt = igtool::build_named_tactic(spec, loaded, cfg.menu);
    const ig::IdealInstance& inst = resolve(bt, loaded);
    ig::OneStrategy one;
    if (one_mode == "human") {
      one = human_strategy();
    } else if (one_mode == "chain") {
      if (moves_path.empty()) throw ig::input_error("--one chain needs --moves");
      one = ig::chain_strategy(igtool::load_atom_sets(moves_path));
    } else {
      throw ig::input_error("unknown --one mode: " + one_mode);
    }
    ig::Transcript tr = ig::run_play(igtool::parse_kind(kind_name), inst, one, bt.tactic, cfg);
    igtool::emit(out_path, ig::store_transcript(tr));
  });

  CLI::App* verify = app.add_subcommand("verify", "exhaust ONE's menu chains against a tactic");
  verify->add_option("--kind", kind_name, "mg|mg-full|smg|vsg");
  verify->add_option("--instance", instance_path, "instance json");
  verify->add_option("--menu", menu_path, "menu json")->required();
  verify->add_option("--depth", depth, "maximum innings");
  verify->add_option("--lag", lag, "finite win lag");
  verify->add_option("--out", out_path, "report destination (default stdout)");
  verify->add_option("--defeat-out", defeat_path, "transcript destination for the first defeat");
  igtool::add_tactic_flags(verify, spec);
  verify->callback([&] {
    std::optional<ig::IdealInstance> slot;
    const ig::IdealInstance* loaded = load_instance_ptr(slot);
    ig::VerifyConfig cfg;
    cfg.depth = depth;
    cfg.lag = lag;
    cfg.menu = igtool::load_atom_sets(menu_path);
    cfg.node_budget = igtool::env_budget(ig::kDefaultNodeBudget);
    igtool::BuiltTactic bt = igtool::build_named_tactic(spec, loaded, cfg.menu);
    const ig::IdealInstance& inst = resolve(bt, loaded);
    ig::TacticVerdict v = ig::verify_tactic(igtool::parse_kind(kind_name), inst, bt.tactic, cfg);
    igtool::emit(out_path, igtool::dump(nlohmann::json{{"all_wins", v.all_wins},
                                                       {"nodes", v.nodes},
                                                       {"leaves", v.leaves},
                                                       {"defeat_found", v.defeat.has_value()}}));
    if (v.defeat && !defeat_path.empty())
      ig::write_file(defeat_path, ig::store_transcript(*v.defeat));
  });

  return igtool::run_guarded(app, argc, argv);
}
