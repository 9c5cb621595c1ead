// coherent decomposition construction and verification
#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coherent stage decompositions of a family"};
  app.require_subcommand(1);

  std::string family_path, dec_path, ladder_path, generators_path, out_path;
  int stages = 8;

  CLI::App* build = app.add_subcommand("build", "decompose a locally small family");
  build->add_option("--family", family_path, "family json")->required();
  build->add_option("--stages", stages, "stage count (ignored with --ladder)");
  build->add_option("--ladder", ladder_path, "per-stage size bounds json, switches to bounded mode");
  build->add_option("--generators", generators_path, "generator list json for lifted stages");
  build->add_option("--out", out_path, "decomposition destination (default stdout)");
  build->callback([&] {
    ig::FamilySpec fam = ig::load_family(ig::read_file(family_path));
    ig::Decomposition dec;
    if (!ladder_path.empty()) {
      dec = ig::decompose_bounded(fam, ig::SizeLadder{igtool::load_int_list(ladder_path)});
    } else {
      ig::DecompOptions opt;
      if (!generators_path.empty()) opt.generators = igtool::load_atom_sets(generators_path);
      dec = ig::decompose_locally_small(fam, stages, opt);
    }
    igtool::emit(out_path, ig::store_decomposition(dec));
  });

  CLI::App* verify = app.add_subcommand("verify", "check stage coherence of a decomposition");
  verify->add_option("--family", family_path, "family json")->required();
  verify->add_option("--decomposition", dec_path, "decomposition json")->required();
  verify->add_option("--out", out_path, "report destination (default stdout)");
  verify->callback([&] {
    ig::FamilySpec fam = ig::load_family(ig::read_file(family_path));
    ig::Decomposition dec = ig::load_decomposition(ig::read_file(dec_path));
    ig::CoherenceResult r = ig::verify_coherence(fam, dec);
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
      failures.push_back(
          {{"a", f.a}, {"b", f.b}, {"stage", f.stage}, {"element", f.element}});
    nlohmann::json thresholds = nlohmann::json::array();
    for (const auto& [pair, m] : r.thresholds)
      thresholds.push_back({{"pair", {pair.first, pair.second}}, {"threshold", m}});
    igtool::emit(out_path, igtool::dump(nlohmann::json{
                               {"ok", r.ok()}, {"failures", failures}, {"thresholds", thresholds}}));
  });

  return igtool::run_guarded(app, argc, argv);
}
