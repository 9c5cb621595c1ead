// instance validation and family rank reports
#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ideal instance validation and family ranks"};
  app.require_subcommand(1);

  std::string in_path, out_path;

  CLI::App* validate = app.add_subcommand("validate", "check the instance invariants");
  validate->add_option("instance", in_path, "instance json")->required();
  validate->add_option("--out", out_path, "report destination (default stdout)");
  validate->callback([&] {
    ig::ValidationReport rep = ig::validate_instance(ig::load_instance(ig::read_file(in_path)));
    igtool::emit(out_path, igtool::dump(nlohmann::json{{"violations", rep.violations}}));
  });

  CLI::App* rank = app.add_subcommand("rank", "height of each member in the inclusion order");
  rank->add_option("instance", in_path, "instance json with a family")->required();
  rank->add_option("--out", out_path, "report destination (default stdout)");
  rank->callback([&] {
    ig::IdealInstance inst = ig::load_instance(ig::read_file(in_path));
    if (!inst.family) throw ig::input_error("rank needs an instance with a family");
    std::map<int, int> ranks = ig::rank_family(*inst.family);
    std::vector<int> by_member(inst.family->members.size(), 0);
    for (const auto& [member, r] : ranks) by_member[static_cast<std::size_t>(member)] = r;
    igtool::emit(out_path, igtool::dump(nlohmann::json{{"ranks", by_member}}));
  });

  return igtool::run_guarded(app, argc, argv);
}
