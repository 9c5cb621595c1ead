// choose-a-dense-set games on finite spaces and truncated cone spaces
#include "common.hpp"

namespace {

ig::BmConeTactic named_markov(const std::string& name, const ig::RefinementScheme& scheme) {
  if (name != "descend-by-inning") throw ig::input_error("unknown markov tactic: " + name);
  ig::BmConeTactic t;
  t.window_size = 2;
  t.markov = true;
  t.name = name;
  t.move_fn = [scheme](const std::vector<ig::Word>& win, int inning) {
    return scheme.j_map(win.back(), inning);
  };
  return t;
}

ig::RefinementScheme named_scheme(const std::string& name) {
  if (name != "cones") throw ig::input_error("unknown refinement scheme: " + name);
  return ig::cone_scheme();
}

std::vector<ig::Word> load_words(const std::string& path) {
  nlohmann::json j = igtool::parse_file(path);
  if (!j.is_array()) throw ig::input_error("expected a json array of bit strings");
  std::vector<ig::Word> out;
  for (const auto& entry : j) {
    if (!entry.is_string()) throw ig::input_error("expected a json array of bit strings");
    out.push_back(ig::Word::from_string(entry.get<std::string>()));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-set choosing games over small spaces and cone trees"};
  app.require_subcommand(1);

  std::string space_path, out_path, markov_name = "descend-by-inning", scheme_name = "cones";
  std::string probe_path;
  int index_bound = 14, depth = 5, cone_depth = 0;

  CLI::App* decompose = app.add_subcommand("decompose", "split the opens into meeting families");
  decompose->add_option("space", space_path, "finite space json")->required();
  decompose->add_option("--out", out_path, "report destination (default stdout)");
  decompose->callback([&] {
    ig::FiniteSpace space = ig::load_space(ig::read_file(space_path));
    space.validate();
    ig::FipDecomposition dec = ig::fip_decompose(space);
    nlohmann::json families = nlohmann::json::array();
    for (const auto& fam : dec.families) families.push_back(fam);
    igtool::emit(out_path, igtool::dump(nlohmann::json{
                               {"n", dec.n}, {"seeds", dec.seeds}, {"families", families}}));
  });

  CLI::App* reduce = app.add_subcommand("reduce", "fold an inning-aware tactic to a window one");
  reduce->add_option("--markov", markov_name, "inning-aware tactic registry name");
  reduce->add_option("--scheme", scheme_name, "refinement scheme registry name");
  reduce->add_option("--index-bound", index_bound, "largest refinement index the fold decodes");
  reduce->add_option("--probe", probe_path, "optional json window of bit strings to respond to");
  reduce->add_option("--out", out_path, "report destination (default stdout)");
  reduce->callback([&] {
    ig::RefinementScheme scheme = named_scheme(scheme_name);
    ig::BmConeTactic plain = markov_to_plain(named_markov(markov_name, scheme), scheme, index_bound);
    nlohmann::json out{{"markov", markov_name},
                       {"scheme", scheme_name},
                       {"window_size", plain.window_size},
                       {"index_bound", index_bound}};
    if (!probe_path.empty()) {
      std::vector<ig::Word> window = load_words(probe_path);
      out["response"] = plain.move_fn(window, static_cast<int>(window.size())).str();
    }
    igtool::emit(out_path, igtool::dump(out));
  });

  CLI::App* verify = app.add_subcommand("verify", "exhaust ONE's descending choices");
  verify->add_option("--space", space_path, "finite space json, played with the meeting tactic");
  verify->add_option("--cone", cone_depth, "cone space depth, played with the folded tactic");
  verify->add_option("--depth", depth, "innings to exhaust");
  verify->add_option("--markov", markov_name, "inning-aware tactic registry name");
  verify->add_option("--scheme", scheme_name, "refinement scheme registry name");
  verify->add_option("--index-bound", index_bound, "largest refinement index the fold decodes");
  verify->add_option("--out", out_path, "report destination (default stdout)");
  verify->callback([&] {
    long long budget = igtool::env_budget(50'000'000);
    nlohmann::json out;
    if (!space_path.empty() && cone_depth > 0)
      throw ig::input_error("pick one of --space and --cone");
    if (!space_path.empty()) {
      ig::FiniteSpace space = ig::load_space(ig::read_file(space_path));
      space.validate();
      ig::FipDecomposition dec = ig::fip_decompose(space);
      ig::BmVerdict v = ig::bm_verify(space, ig::fip_one_tactic(space, dec), depth, budget);
      out = {{"all_wins", v.all_wins}, {"leaves", v.leaves}, {"fault", v.fault}};
    } else if (cone_depth > 0) {
      ig::RefinementScheme scheme = named_scheme(scheme_name);
      ig::BmConeTactic plain =
          markov_to_plain(named_markov(markov_name, scheme), scheme, index_bound);
      ig::BmConeVerdict v = ig::bm_verify(ig::ConeSpace{cone_depth}, plain, depth, budget);
      out = {{"all_wins", v.all_wins}, {"leaves", v.leaves}, {"fault", v.fault}};
    } else {
      throw ig::input_error("verify needs --space or --cone");
    }
    igtool::emit(out_path, igtool::dump(out));
  });

  return igtool::run_guarded(app, argc, argv);
}
