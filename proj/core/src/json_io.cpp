#include "idealgames/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ig {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& ptr, const std::string& what) {
  throw input_error("schema violation at " + (ptr.empty() ? "/" : ptr) + ": " + what);
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string canonical(const json& doc) { return doc.dump(2) + "\n"; }

const json& need(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) schema_fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(ptr + "/" + key, "missing required key");
  return *it;
}

int need_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) schema_fail(ptr, "expected an integer");
  return j.get<int>();
}

std::string need_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) schema_fail(ptr, "expected a string");
  return j.get<std::string>();
}

const json& need_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) schema_fail(ptr, "expected an array");
  return j;
}

std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

std::vector<int> int_list(const json& j, const std::string& ptr) {
  need_array(j, ptr);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(need_int(j[i], at(ptr, i)));
  return out;
}

AtomSet atom_set(const json& j, const std::string& ptr) {
  need_array(j, ptr);
  AtomSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int a = need_int(j[i], at(ptr, i));
    if (a < 0 || a >= kMaxAtoms) schema_fail(at(ptr, i), "atom index out of range");
    s.insert(a);
  }
  return s;
}

json atoms_json(const AtomSet& s) {
  json arr = json::array();
  for (int a : s.to_vector()) arr.push_back(a);
  return arr;
}

Word word_from(const json& j, const std::string& ptr) {
  const std::string s = need_string(j, ptr);
  try {
    return Word::from_string(s);
  } catch (const input_error& e) {
    schema_fail(ptr, e.what());
  }
}

SigmaSet sigma_from(const json& j, const std::string& ptr) {
  SigmaSet s;
  s.stages = int_list(need(j, ptr, "stages"), ptr + "/stages");
  s.realized = atom_set(need(j, ptr, "realized"), ptr + "/realized");
  return s;
}

json sigma_json(const SigmaSet& s) {
  return json{{"realized", atoms_json(s.realized)}, {"stages", s.stages}};
}

FamilySpec family_from(const json& j, const std::string& ptr) {
  FamilySpec fam;
  const json& members = need_array(need(j, ptr, "members"), ptr + "/members");
  for (std::size_t i = 0; i < members.size(); ++i)
    fam.members.push_back(sigma_from(members[i], at(ptr + "/members", i)));
  return fam;
}

json family_json(const FamilySpec& fam) {
  json members = json::array();
  for (const SigmaSet& m : fam.members) members.push_back(sigma_json(m));
  return json{{"members", members}};
}

}  // namespace

BlockSystem load_block_system(const std::string& text) {
  const json j = parse_document(text);
  BlockSystem sys;
  sys.cuts = int_list(need(j, "", "cuts"), "/cuts");
  sys.word = word_from(need(j, "", "word"), "/word");
  sys.validate();
  return sys;
}

std::string store_block_system(const BlockSystem& sys) {
  return canonical(json{{"cuts", sys.cuts}, {"word", sys.word.str()}});
}

TrieChain load_trie_chain(const std::string& text) {
  const json j = parse_document(text);
  TrieChain chain;
  chain.horizon = need_int(need(j, "", "horizon"), "/horizon");
  const json& levels = need_array(need(j, "", "branches"), "/branches");
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const std::string lptr = at("/branches", l);
    const json& level = need_array(levels[l], lptr);
    std::vector<Word> words;
    for (std::size_t b = 0; b < level.size(); ++b)
      words.push_back(word_from(level[b], at(lptr, b)));
    chain.branches.push_back(words);
  }
  chain.validate();
  return chain;
}

std::string store_trie_chain(const TrieChain& chain) {
  json levels = json::array();
  for (const auto& level : chain.branches) {
    json words = json::array();
    for (const Word& w : level) words.push_back(w.str());
    levels.push_back(words);
  }
  return canonical(json{{"branches", levels}, {"horizon", chain.horizon}});
}

IdealInstance load_instance(const std::string& text) {
  const json j = parse_document(text);
  IdealInstance inst;
  const json& ground = need_array(need(j, "", "ground"), "/ground");
  for (std::size_t i = 0; i < ground.size(); ++i)
    inst.ground.push_back(need_string(ground[i], at("/ground", i)));
  const json& gens = need_array(need(j, "", "generators"), "/generators");
  for (std::size_t i = 0; i < gens.size(); ++i)
    inst.generators.push_back(atom_set(gens[i], at("/generators", i)));
  inst.sigma_stage_bound = need_int(need(j, "", "sigma_stage_bound"), "/sigma_stage_bound");
  const json& fam = need(j, "", "family");
  if (!fam.is_null()) inst.family = family_from(fam, "/family");
  return inst;
}

std::string store_instance(const IdealInstance& inst) {
  json gens = json::array();
  for (const AtomSet& g : inst.generators) gens.push_back(atoms_json(g));
  json fam;
  if (inst.family) fam = family_json(*inst.family);
  return canonical(json{{"family", fam},
                        {"generators", gens},
                        {"ground", inst.ground},
                        {"sigma_stage_bound", inst.sigma_stage_bound}});
}

FamilySpec load_family(const std::string& text) {
  return family_from(parse_document(text), "");
}

std::string store_family(const FamilySpec& fam) { return canonical(family_json(fam)); }

Decomposition load_decomposition(const std::string& text) {
  const json j = parse_document(text);
  Decomposition dec;
  dec.stage_count = need_int(need(j, "", "stage_count"), "/stage_count");
  const json& stages = need_array(need(j, "", "stages"), "/stages");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const std::string iptr = at("/stages", i);
    const json& row = need_array(stages[i], iptr);
    std::vector<AtomSet> sets;
    for (std::size_t n = 0; n < row.size(); ++n) sets.push_back(atom_set(row[n], at(iptr, n)));
    dec.stages.push_back(sets);
  }
  return dec;
}

std::string store_decomposition(const Decomposition& dec) {
  json rows = json::array();
  for (const auto& row : dec.stages) {
    json sets = json::array();
    for (const AtomSet& s : row) sets.push_back(atoms_json(s));
    rows.push_back(sets);
  }
  return canonical(json{{"stage_count", dec.stage_count}, {"stages", rows}});
}

Coloring load_coloring(const std::string& text) {
  const json j = parse_document(text);
  Coloring col;
  col.arity = need_int(need(j, "", "arity"), "/arity");
  col.palette_size = need_int(need(j, "", "palette_size"), "/palette_size");
  const json& entries = need_array(need(j, "", "colors"), "/colors");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string eptr = at("/colors", i);
    std::vector<int> window = int_list(need(entries[i], eptr, "window"), eptr + "/window");
    const int color = need_int(need(entries[i], eptr, "color"), eptr + "/color");
    if (!col.colors.emplace(std::move(window), color).second)
      schema_fail(eptr + "/window", "duplicate window");
  }
  return col;
}

std::string store_coloring(const Coloring& col) {
  json entries = json::array();
  for (const auto& [window, color] : col.colors)
    entries.push_back(json{{"color", color}, {"window", window}});
  return canonical(
      json{{"arity", col.arity}, {"colors", entries}, {"palette_size", col.palette_size}});
}

FinitePoset load_poset(const std::string& text) {
  const json j = parse_document(text);
  FinitePoset p;
  p.nodes = need_int(need(j, "", "nodes"), "/nodes");
  const json& less = need_array(need(j, "", "less"), "/less");
  for (std::size_t i = 0; i < less.size(); ++i) {
    const std::vector<int> pair = int_list(less[i], at("/less", i));
    if (pair.size() != 2) schema_fail(at("/less", i), "expected a pair of node indices");
    p.less.emplace_back(pair[0], pair[1]);
  }
  p.validate();
  return p;
}

std::string store_poset(const FinitePoset& poset) {
  json pairs = json::array();
  for (const auto& [a, b] : poset.less) pairs.push_back(json::array({a, b}));
  return canonical(json{{"less", pairs}, {"nodes", poset.nodes}});
}

FiniteSpace load_space(const std::string& text) {
  const json j = parse_document(text);
  FiniteSpace sp;
  sp.points = need_int(need(j, "", "points"), "/points");
  const json& opens = need_array(need(j, "", "opens"), "/opens");
  for (std::size_t i = 0; i < opens.size(); ++i)
    sp.opens.push_back(atom_set(opens[i], at("/opens", i)));
  sp.validate();
  return sp;
}

std::string store_space(const FiniteSpace& space) {
  json opens = json::array();
  for (const AtomSet& o : space.opens) opens.push_back(atoms_json(o));
  return canonical(json{{"opens", opens}, {"points", space.points}});
}

std::string store_subset_verdict(const SubsetVerdict& v) {
  const char* kind = nullptr;
  switch (v.kind) {
    case SubsetVerdict::ProperSubsetFrom: kind = "proper-subset-from"; break;
    case SubsetVerdict::Equal: kind = "equal"; break;
    case SubsetVerdict::NotSubset: kind = "not-subset"; break;
    case SubsetVerdict::Inconclusive: kind = "inconclusive"; break;
  }
  return canonical(json{{"bad_blocks", v.bad_blocks},
                        {"kind", kind},
                        {"shift", v.shift},
                        {"threshold", v.threshold}});
}

std::string store_transcript(const Transcript& tr) {
  json legality = json::array();
  for (const MoveCheck& c : tr.legality)
    legality.push_back(json{{"ok", c.ok}, {"reason", c.reason}});
  json head{{"fault", tr.fault},
            {"kind", to_string(tr.kind)},
            {"lag", tr.lag},
            {"legality", legality},
            {"uncovered", atoms_json(tr.uncovered)},
            {"verdict", to_string(tr.verdict)}};
  std::ostringstream os;
  os << head.dump() << "\n";
  for (const Inning& in : tr.innings) {
    json s;
    if (in.two.s) s = sigma_json(*in.two.s);
    os << json{{"one", atoms_json(in.one)}, {"s", s}, {"t", atoms_json(in.two.t)}}.dump()
       << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
  if (!out.flush()) throw input_error("cannot write file: " + path);
}

}  // namespace ig
