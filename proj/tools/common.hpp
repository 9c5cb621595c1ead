// common.hpp
// shared plumbing for the command line tools: guarded dispatch mapping error
// families to the documented exit codes, structured json errors on stderr,
// small json list loaders, and the registry resolving tactic names to
// built tactics
#pragma once

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealgames/bmgame.hpp"
#include "idealgames/fixtures.hpp"
#include "idealgames/json_io.hpp"
#include "idealgames/slight.hpp"
#include "idealgames/tactic.hpp"
#include "json.hpp"

namespace igtool {

inline void print_error(const char* kind, const std::string& what) {
  nlohmann::json err{{"error", {{"kind", kind}, {"what", what}}}};
  std::fprintf(stderr, "%s\n", err.dump().c_str());
}

// exit 0 on success, 2 on input or contract violations, 3 on blown budgets
inline int run_guarded(CLI::App& app, int argc, char** argv) {
  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("usage", e.what());
    return 2;
  } catch (const ig::resource_error& e) {
    print_error("resource", e.what());
    return 3;
  } catch (const ig::contract_error& e) {
    print_error("contract", e.what());
    return 2;
  } catch (const ig::input_error& e) {
    print_error("input", e.what());
    return 2;
  }
}

inline void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::fputs(text.c_str(), stdout);
  else ig::write_file(out, text);
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline long long env_budget(long long fallback) {
  const char* v = std::getenv("IDEALGAMES_BUDGET");
  if (!v) return fallback;
  long long b = std::atoll(v);
  if (b <= 0) throw ig::input_error("IDEALGAMES_BUDGET must be a positive integer");
  return b;
}

inline nlohmann::json parse_file(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(ig::read_file(path), nullptr, false);
  if (j.is_discarded()) throw ig::input_error("malformed JSON in " + path);
  return j;
}

inline std::vector<int> int_list_from(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ig::input_error("schema violation at " + where + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ig::input_error("schema violation at " + where + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// json array of atom index arrays, e.g. [[0, 1], [0, 1, 2]]
inline std::vector<ig::AtomSet> load_atom_sets(const std::string& path) {
  nlohmann::json j = parse_file(path);
  if (!j.is_array()) throw ig::input_error("schema violation at /: expected an array in " + path);
  std::vector<ig::AtomSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    ig::AtomSet s;
    for (int a : int_list_from(j[i], "/" + std::to_string(i))) {
      if (a < 0 || a >= 64)
        throw ig::input_error("schema violation at /" + std::to_string(i) +
                              ": atom index out of range");
      s.insert(a);
    }
    out.push_back(s);
  }
  return out;
}

inline std::vector<int> load_int_list(const std::string& path) {
  return int_list_from(parse_file(path), "/");
}

inline ig::GameKind parse_kind(const std::string& s) {
  if (s == "mg") return ig::GameKind::MG_family;
  if (s == "mg-full") return ig::GameKind::MG_full;
  if (s == "smg") return ig::GameKind::SMG;
  if (s == "vsg") return ig::GameKind::VSG;
  throw ig::input_error("unknown game kind: " + s);
}

// registry names and the artifacts each build consumes
struct TacticSpec {
  std::string kind = "copy";
  std::string family_path, decomposition_path, coloring_path, enumeration_path, witness_path;
  int arity = 2;
  std::uint64_t seed = 0;
  int slight_n = 2, lambda = 4, order_size = 8;
};

inline void add_tactic_flags(CLI::App* cmd, TacticSpec& s) {
  cmd->add_option("--tactic", s.kind,
                  "registry name: copy|silent|greedy|random|mg|smg2|vsg2|vsg3|slight")
      ->required();
  cmd->add_option("--family", s.family_path, "family json (defaults to the instance family)");
  cmd->add_option("--decomposition", s.decomposition_path, "decomposition json for mg builds");
  cmd->add_option("--coloring", s.coloring_path, "pair coloring json for mg builds");
  cmd->add_option("--enumeration", s.enumeration_path, "atom enumeration json for smg2");
  cmd->add_option("--witness", s.witness_path, "witness coloring json for slight");
  cmd->add_option("--arity", s.arity, "window size for copy|silent|greedy|random|mg");
  cmd->add_option("--seed", s.seed, "seed for the random tactic");
  cmd->add_option("--slight-n", s.slight_n, "slight window parameter n");
  cmd->add_option("--lambda", s.lambda, "slight point index range");
  cmd->add_option("--order-size", s.order_size, "slight order size");
}

struct BuiltTactic {
  ig::Tactic tactic;
  std::optional<ig::IdealInstance> instance;  // kinds that carry their own ground set
};

inline ig::FamilySpec family_for(const TacticSpec& s, const ig::IdealInstance* inst) {
  if (!s.family_path.empty()) return ig::load_family(ig::read_file(s.family_path));
  if (inst && inst->family) return *inst->family;
  throw ig::input_error("tactic " + s.kind + " needs --family or an instance with a family");
}

inline ig::Tactic build_mg_base(const TacticSpec& s, const ig::IdealInstance* inst) {
  if (s.decomposition_path.empty() || s.coloring_path.empty())
    throw ig::input_error("tactic " + s.kind + " needs --decomposition and --coloring");
  ig::FamilySpec fam = family_for(s, inst);
  ig::Decomposition dec = ig::load_decomposition(ig::read_file(s.decomposition_path));
  ig::Coloring col = ig::load_coloring(ig::read_file(s.coloring_path));
  return ig::build_mg_tactic(fam, dec, col, s.arity);
}

inline BuiltTactic build_named_tactic(const TacticSpec& s, const ig::IdealInstance* inst,
                                      const std::vector<ig::AtomSet>& menu) {
  using namespace ig;
  if (s.kind == "copy") {
    Tactic t;
    t.window_size = s.arity;
    t.name = "copy";
    t.move_fn = [](const std::vector<AtomSet>& w, int) -> TwoMove { return {w.back(), {}}; };
    return {t, {}};
  }
  if (s.kind == "silent") {
    Tactic t;
    t.window_size = s.arity;
    t.name = "silent";
    t.move_fn = [](const std::vector<AtomSet>&, int) -> TwoMove { return {AtomSet{}, {}}; };
    return {t, {}};
  }
  if (s.kind == "greedy") {
    if (!inst) throw input_error("tactic greedy needs --instance");
    return {greedy_cover_tactic(*inst, s.arity), {}};
  }
  if (s.kind == "random") {
    if (!inst) throw input_error("tactic random needs --instance");
    return {random_window_tactic(*inst, s.arity, s.seed), {}};
  }
  if (s.kind == "mg") return {build_mg_base(s, inst), {}};
  if (s.kind == "smg2") {
    if (!inst) throw input_error("tactic smg2 needs --instance");
    if (s.enumeration_path.empty()) throw input_error("tactic smg2 needs --enumeration");
    if (menu.empty()) throw input_error("tactic smg2 needs --menu");
    Tactic base = build_mg_base(s, inst);
    PhiMaps maps =
        build_phi_maps(*inst, family_for(s, inst), load_int_list(s.enumeration_path), menu);
    if (!maps.validated) throw input_error("escape maps rejected: " + maps.violations.front());
    return {build_smg_two_tactic(base, maps), {}};
  }
  if (s.kind == "vsg2") return {build_vsg_two_tactic(build_mg_base(s, inst), family_for(s, inst)), {}};
  if (s.kind == "vsg3") return {build_vsg_three_tactic(three_inputs()), three_instance()};
  if (s.kind == "slight") {
    if (s.witness_path.empty()) throw input_error("tactic slight needs --witness");
    SlightOrderSpec order;
    order.order_size = s.order_size;
    order.witness = load_coloring(read_file(s.witness_path));
    SlightBundle sb = build_slight_instance(s.slight_n, s.lambda, order);
    return {sb.tactic, sb.instance.inst};
  }
  throw input_error("unknown tactic: " + s.kind);
}

}  // namespace igtool
