#include <cstdio>

#include "doctest.h"
#include "idealgames/fixtures.hpp"
#include "idealgames/json_io.hpp"
#include "json.hpp"

using namespace ig;

namespace {

IdealInstance sample_instance() {
  IdealInstance inst;
  inst.ground = {"a", "b", "c"};
  inst.generators = {AtomSet::from({0}), AtomSet::from({0, 1}), AtomSet::from({2})};
  inst.sigma_stage_bound = 2;
  FamilySpec fam;
  fam.members.push_back({{0}, AtomSet::from({0})});
  fam.members.push_back({{1}, AtomSet::from({0, 1})});
  inst.family = fam;
  return inst;
}

template <typename T, typename Store, typename Load>
void round_trip(const T& value, Store store, Load load) {
  std::string text = store(value);
  CHECK(!text.empty());
  CHECK(text.back() == '\n');
  T back = load(text);
  CHECK(store(back) == text);
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("canonical round trips are byte identical") {
  BlockSystem sys;
  sys.cuts = {0, 2, 4};
  sys.word = Word::from_string("0000");
  round_trip(sys, store_block_system, load_block_system);

  round_trip(trie_corpus(1, 7).front(), store_trie_chain, load_trie_chain);

  IdealInstance inst = sample_instance();
  round_trip(inst, store_instance, load_instance);
  inst.family.reset();
  round_trip(inst, store_instance, load_instance);

  round_trip(*sample_instance().family, store_family, load_family);

  Decomposition dec = decompose_locally_small(*sample_instance().family, 4);
  round_trip(dec, store_decomposition, load_decomposition);

  round_trip(uniform_pair_coloring(3), store_coloring, load_coloring);
  round_trip(chain_poset(3), store_poset, load_poset);

  FiniteSpace sp;
  sp.points = 2;
  sp.opens = {AtomSet{}, AtomSet::from({0}), AtomSet::from({0, 1})};
  round_trip(sp, store_space, load_space);
}

TEST_CASE("loaders report json-pointer paths") {
  try {
    load_block_system("{\"cuts\": [0, 2], \"word\": \"0\"}");
    CHECK(false);
  } catch (const input_error& e) {
    std::string what = e.what();
    CHECK(what.find("schema violation at ") != std::string::npos);
    CHECK(what.find("/word") != std::string::npos);
  }

  try {
    load_coloring(
        "{\"arity\": 2, \"palette_size\": 2, \"colors\": ["
        "{\"color\": 0, \"window\": [0, 1]}, {\"color\": 1, \"window\": [0, 1]}]}");
    CHECK(false);
  } catch (const input_error& e) {
    std::string what = e.what();
    CHECK(what.find("/colors/1/window") != std::string::npos);
    CHECK(what.find("duplicate window") != std::string::npos);
  }

  try {
    load_family("{nope");
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
  }

  nlohmann::json fam = nlohmann::json::parse(store_family(*sample_instance().family));
  fam["members"][0]["realized"][0] = 64;
  try {
    load_family(fam.dump());
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("atom index out of range") != std::string::npos);
  }

  nlohmann::json bare = nlohmann::json::parse(store_instance(sample_instance()));
  bare.erase("family");
  try {
    load_instance(bare.dump());
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("family") != std::string::npos);
  }
}

TEST_CASE("verdict and transcript reports") {
  SubsetVerdict v;
  v.kind = SubsetVerdict::ProperSubsetFrom;
  v.threshold = 2;
  CHECK(store_subset_verdict(v).find("proper-subset-from") != std::string::npos);
  v.kind = SubsetVerdict::Equal;
  CHECK(store_subset_verdict(v).find("\"equal\"") != std::string::npos);
  v.kind = SubsetVerdict::NotSubset;
  CHECK(store_subset_verdict(v).find("not-subset") != std::string::npos);
  v.kind = SubsetVerdict::Inconclusive;
  CHECK(store_subset_verdict(v).find("inconclusive") != std::string::npos);

  IdealInstance inst = sample_instance();
  Tactic copy;
  copy.move_fn = [](const std::vector<AtomSet>& w, int) -> TwoMove { return {w.back(), {}}; };
  VerifyConfig cfg;
  cfg.depth = 2;
  cfg.lag = 1;
  cfg.menu = {AtomSet::from({0}), AtomSet::from({0, 1})};
  Transcript tr = run_play(GameKind::MG_family, inst,
                           chain_strategy({AtomSet::from({0}), AtomSet::from({0, 1})}), copy, cfg);
  REQUIRE(tr.innings.size() == 2);
  std::string text = store_transcript(tr);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 3);
  CHECK(text.find("\"verdict\"") != std::string::npos);

  // identical inputs serialize identically
  CHECK(store_transcript(tr) == text);
}

TEST_CASE("file helpers") {
  const std::string path = "/tmp/idealgames_json_test.txt";
  write_file(path, "sample\n");
  CHECK(read_file(path) == "sample\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file(path), input_error);
}

}
