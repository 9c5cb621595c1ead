// block system decisions, separating witnesses, trie covers, and the
// exhaustive inclusion oracle
#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"block calculus on finite-horizon binary words"};
  app.require_subcommand(1);

  std::string a_path, b_path, chain_path, out_path;
  int slack = ig::kDefaultTailSlack;
  int stage_a = -1, stage_b = -1;

  CLI::App* subset = app.add_subcommand("subset", "decide the eventual inclusion relation");
  subset->add_option("a", a_path, "left block system json")->required();
  subset->add_option("b", b_path, "right block system json")->required();
  subset->add_option("--slack", slack, "tail blocks required to support the verdict");
  subset->add_option("--out", out_path, "verdict destination (default stdout)");
  subset->callback([&] {
    ig::BlockSystem a = ig::load_block_system(ig::read_file(a_path));
    ig::BlockSystem b = ig::load_block_system(ig::read_file(b_path));
    igtool::emit(out_path, ig::store_subset_verdict(ig::subset_decide(a, b, slack)));
  });

  CLI::App* witness = app.add_subcommand("witness", "word separating a from b");
  witness->add_option("a", a_path, "left block system json")->required();
  witness->add_option("b", b_path, "right block system json")->required();
  witness->add_option("--slack", slack, "tail blocks required to support the verdict");
  witness->add_option("--out", out_path, "witness destination (default stdout)");
  witness->callback([&] {
    ig::BlockSystem a = ig::load_block_system(ig::read_file(a_path));
    ig::BlockSystem b = ig::load_block_system(ig::read_file(b_path));
    ig::SeparatingWitness w = ig::separating_witness(a, b, slack);
    igtool::emit(out_path,
                 igtool::dump(nlohmann::json{{"stage", w.stage}, {"word", w.z.str()}}));
  });

  CLI::App* cover = app.add_subcommand("cover", "greedy block cover of a trie chain");
  cover->add_option("chain", chain_path, "trie chain json")->required();
  cover->add_option("--out", out_path, "block system destination (default stdout)");
  cover->callback([&] {
    ig::TrieChain chain = ig::load_trie_chain(ig::read_file(chain_path));
    igtool::emit(out_path, ig::store_block_system(ig::cover_build(chain)));
  });

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive stage inclusion check");
  oracle->add_option("a", a_path, "left block system json")->required();
  oracle->add_option("b", b_path, "right block system json")->required();
  oracle->add_option("--stage-a", stage_a, "single query: stage of a");
  oracle->add_option("--stage-b", stage_b, "single query: stage of b");
  oracle->add_option("--out", out_path, "report destination (default stdout)");
  oracle->callback([&] {
    ig::BlockSystem a = ig::load_block_system(ig::read_file(a_path));
    ig::BlockSystem b = ig::load_block_system(ig::read_file(b_path));
    if ((stage_a < 0) != (stage_b < 0))
      throw ig::input_error("oracle needs both --stage-a and --stage-b or neither");
    if (stage_a >= 0) {
      bool inc = ig::brute_inclusion(a, b, stage_a, stage_b);
      igtool::emit(out_path, igtool::dump(nlohmann::json{{"includes", inc}}));
    } else {
      ig::InclusionTable tab = ig::brute_inclusion_table(a, b);
      igtool::emit(out_path, igtool::dump(nlohmann::json{{"worst", tab.worst}}));
    }
  });

  return igtool::run_guarded(app, argc, argv);
}
