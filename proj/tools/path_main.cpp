// bounded monochromatic-free path search over finite posets
#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"colored path search in finite posets"};
  app.require_subcommand(1);

  std::string poset_path, coloring_path, out_path;
  int arity = 2, length = 8, palette = 3;

  CLI::App* find = app.add_subcommand("find", "search for a path avoiding palette overflow");
  find->add_option("--poset", poset_path, "poset json")->required();
  find->add_option("--coloring", coloring_path, "window coloring json")->required();
  find->add_option("-k,--arity", arity, "coloring window size");
  find->add_option("-L,--length", length, "path length");
  find->add_option("-c,--palette", palette, "palette bound the path must stay under");
  find->add_option("--out", out_path, "report destination (default stdout)");
  find->callback([&] {
    ig::FinitePoset poset = ig::load_poset(ig::read_file(poset_path));
    poset.validate();
    ig::Coloring col = ig::load_coloring(ig::read_file(coloring_path));
    if (col.arity != arity)
      throw ig::input_error("coloring arity does not match -k");
    ig::PathSearchStats stats;
    std::optional<std::vector<int>> path = ig::find_bounded_path(
        poset, col, length, palette, &stats, igtool::env_budget(ig::kDefaultSearchBudget));
    nlohmann::json out{{"found", path.has_value()}, {"visited", stats.visited}};
    out["path"] = path ? nlohmann::json(*path) : nlohmann::json(nullptr);
    igtool::emit(out_path, igtool::dump(out));
  });

  return igtool::run_guarded(app, argc, argv);
}
