// tactic registry: construction, targeted defeats, coloring extraction
#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bounded-memory tactic construction and analysis"};
  app.require_subcommand(1);

  std::string kind_name = "mg", instance_path, menu_path, coloring_path;
  std::string chain_path, ladder_csv, out_path;
  igtool::TacticSpec spec;
  int length = 6, palette = 2, lag = -1;

  auto load_instance_ptr = [&](std::optional<ig::IdealInstance>& slot) -> const ig::IdealInstance* {
    if (instance_path.empty()) return nullptr;
    slot = ig::load_instance(ig::read_file(instance_path));
    return &*slot;
  };

  CLI::App* build = app.add_subcommand("build", "construct a tactic and report its shape");
  build->add_option("--instance", instance_path, "instance json");
  build->add_option("--menu", menu_path, "menu json (escape map validation targets)");
  build->add_option("--out", out_path, "descriptor destination (default stdout)");
  igtool::add_tactic_flags(build, spec);
  build->callback([&] {
    std::optional<ig::IdealInstance> slot;
    const ig::IdealInstance* loaded = load_instance_ptr(slot);
    std::vector<ig::AtomSet> menu;
    if (!menu_path.empty()) menu = igtool::load_atom_sets(menu_path);
    igtool::BuiltTactic bt = igtool::build_named_tactic(spec, loaded, menu);
    igtool::emit(out_path, igtool::dump(nlohmann::json{{"kind", spec.kind},
                                                       {"name", bt.tactic.name},
                                                       {"window_size", bt.tactic.window_size},
                                                       {"own_instance", bt.instance.has_value()}}));
  });

  CLI::App* defeat = app.add_subcommand("defeat", "search menu chains for a losing play");
  defeat->add_option("--kind", kind_name, "mg|mg-full|smg|vsg");
  defeat->add_option("--instance", instance_path, "instance json");
  defeat->add_option("--menu", menu_path, "menu json, searched as a chain poset")->required();
  defeat->add_option("--coloring", coloring_path, "window coloring json steering the search")
      ->required();
  defeat->add_option("--length", length, "play length");
  defeat->add_option("--palette", palette, "palette cap for the steering coloring");
  defeat->add_option("--lag", lag, "finite win lag (-1 picks window size + 1)");
  defeat->add_option("--out", out_path, "transcript destination (default stdout)");
  igtool::add_tactic_flags(defeat, spec);
  defeat->callback([&] {
    std::optional<ig::IdealInstance> slot;
    const ig::IdealInstance* loaded = load_instance_ptr(slot);
    std::vector<ig::AtomSet> menu = igtool::load_atom_sets(menu_path);
    igtool::BuiltTactic bt = igtool::build_named_tactic(spec, loaded, menu);
    const ig::IdealInstance& inst = [&]() -> const ig::IdealInstance& {
      if (loaded) return *loaded;
      if (bt.instance) return *bt.instance;
      throw ig::input_error("this tactic kind needs --instance");
    }();
    ig::Coloring col = ig::load_coloring(ig::read_file(coloring_path));
    ig::DefeatConfig cfg;
    cfg.length = length;
    cfg.palette = palette;
    cfg.lag = lag;
    cfg.node_budget = igtool::env_budget(cfg.node_budget);
    std::optional<ig::Transcript> tr =
        ig::targeted_defeat(igtool::parse_kind(kind_name), inst, bt.tactic, menu, col, cfg);
    if (tr)
      igtool::emit(out_path, ig::store_transcript(*tr));
    else
      igtool::emit(out_path, igtool::dump(nlohmann::json{{"defeat", nullptr}}));
  });

  CLI::App* extract = app.add_subcommand("extract", "read a coloring off cumulative responses");
  extract->add_option("--instance", instance_path, "instance json");
  extract->add_option("--chain", chain_path, "increasing moves json the windows draw from")
      ->required();
  extract->add_option("--ladder", ladder_csv, "comma separated size bounds")->required();
  extract->add_option("--out", out_path, "coloring destination (default stdout)");
  igtool::add_tactic_flags(extract, spec);
  extract->callback([&] {
    std::optional<ig::IdealInstance> slot;
    const ig::IdealInstance* loaded = load_instance_ptr(slot);
    std::vector<ig::AtomSet> chain = igtool::load_atom_sets(chain_path);
    igtool::BuiltTactic bt = igtool::build_named_tactic(spec, loaded, chain);
    ig::SizeLadder ladder;
    std::stringstream in(ladder_csv);
    for (std::string part; std::getline(in, part, ',');)
      ladder.bounds.push_back(std::stoi(part));
    if (ladder.bounds.empty()) throw ig::input_error("--ladder needs at least one bound");
    ig::Coloring col = ig::extract_coloring(bt.tactic, chain, ladder);
    igtool::emit(out_path, ig::store_coloring(col));
  });

  return igtool::run_guarded(app, argc, argv);
}
