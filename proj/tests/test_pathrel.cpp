#include "doctest.h"
#include "idealgames/fixtures.hpp"
#include "idealgames/pathrel.hpp"

using namespace ig;

namespace {

FinitePoset chain3() {
  FinitePoset p;
  p.nodes = 3;
  p.less = {{0, 1}, {0, 2}, {1, 2}};
  p.validate();
  return p;
}

Coloring two_tone() {
  Coloring c;
  c.arity = 2;
  c.palette_size = 2;
  c.colors[{0, 1}] = 0;
  c.colors[{1, 2}] = 1;
  c.colors[{0, 2}] = 0;
  return c;
}

}  // namespace

TEST_SUITE("pathrel") {

TEST_CASE("poset validation demands an explicit strict order") {
  FinitePoset p = chain3();
  CHECK(p.lt(0, 2));
  CHECK(!p.lt(2, 0));

  FinitePoset gap;
  gap.nodes = 3;
  gap.less = {{0, 1}, {1, 2}};
  try {
    gap.validate();
    CHECK(false);
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("transitive") != std::string::npos);
  }

  FinitePoset loop;
  loop.nodes = 2;
  loop.less = {{0, 0}};
  CHECK_THROWS_AS(loop.validate(), input_error);

  FinitePoset cycle;
  cycle.nodes = 2;
  cycle.less = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(cycle.validate(), input_error);

  FinitePoset wild;
  wild.nodes = 3;
  wild.less = {{0, 5}};
  CHECK_THROWS_AS(wild.validate(), input_error);

  FinitePoset empty;
  CHECK_THROWS_AS(empty.validate(), input_error);
}

TEST_CASE("bounded-palette path search") {
  FinitePoset p = chain3();
  Coloring col = two_tone();

  CHECK(!find_bounded_path(p, col, 3, 1).has_value());
  auto full = find_bounded_path(p, col, 3, 2);
  REQUIRE(full.has_value());
  CHECK(*full == std::vector<int>{0, 1, 2});
  auto pair = find_bounded_path(p, col, 2, 1);
  REQUIRE(pair.has_value());
  CHECK(*pair == std::vector<int>{0, 1});

  PathSearchStats stats;
  find_bounded_path(p, col, 3, 2, &stats);
  CHECK(stats.visited > 0);
  CHECK_THROWS_AS(find_bounded_path(p, col, 3, 2, nullptr, 1), resource_error);
  CHECK_THROWS_AS(col.color_of({0, 3}), input_error);
}

TEST_CASE("enumeration is lexicographic and stops on demand") {
  FinitePoset p = chain3();
  Coloring col = two_tone();

  std::vector<std::vector<int>> seen;
  bool hit = for_each_bounded_path(p, col, 2, 2, [&](const std::vector<int>& path) {
    seen.push_back(path);
    return false;
  });
  CHECK(!hit);
  CHECK(seen == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

  seen.clear();
  hit = for_each_bounded_path(p, col, 2, 2, [&](const std::vector<int>& path) {
    seen.push_back(path);
    return true;
  });
  CHECK(hit);
  CHECK(seen == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("failed branches backtrack soundly") {
  FinitePoset diamond;
  diamond.nodes = 4;
  diamond.less = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  diamond.validate();
  Coloring col;
  col.arity = 2;
  col.palette_size = 2;
  col.colors[{0, 1}] = 0;
  col.colors[{1, 3}] = 1;
  col.colors[{0, 2}] = 0;
  col.colors[{2, 3}] = 0;
  col.colors[{0, 3}] = 0;
  auto path = find_bounded_path(diamond, col, 3, 1);
  REQUIRE(path.has_value());
  CHECK(*path == std::vector<int>{0, 2, 3});
}

TEST_CASE("fixture posets carry uniform colorings") {
  FinitePoset cp = chain_poset(5);
  Coloring uni = uniform_pair_coloring(5);
  auto path = find_bounded_path(cp, uni, 5, 1);
  REQUIRE(path.has_value());
  CHECK(*path == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("eventual domination order") {
  std::vector<std::vector<int>> seqs = {{0, 0, 0, 0}, {2, 2, 2, 2}, {1, 1, 1, 1}};
  FinitePoset p = domination_poset(seqs, 4, 2);
  CHECK(p.nodes == 3);
  CHECK(p.less == std::vector<std::pair<int, int>>{{0, 1}});

  CHECK_THROWS_AS(domination_poset(seqs, 1, 2), input_error);
  CHECK_THROWS_AS(domination_poset(seqs, 4, 0), input_error);
  std::vector<std::vector<int>> ragged = {{0, 0, 0}, {2, 2, 2, 2}};
  CHECK_THROWS_AS(domination_poset(ragged, 4, 1), input_error);
}

}
