#include <algorithm>

#include "doctest.h"
#include "corpus.hpp"
#include "twa/errors.hpp"
#include "twa/oracle.hpp"

using namespace twa;

TEST_CASE("enum_paths") {
  auto a = testing::load_data("walk_amax.twa");
  auto paths = oracle::enum_paths(a, "a");
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].weight == Weight(2L));

  WeightedAutomaton e(SemiringTag::MaxPlus, "ab", 2);
  e.set_initial(1, Weight(3L));
  e.set_final(1, Weight(-1L));
  auto empty = oracle::enum_paths(e, "");
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].states == std::vector<State>{1});
  CHECK(empty[0].weight == Weight(2L));
  CHECK(oracle::enum_paths(e, "b").empty());
  CHECK(oracle::eval_bruteforce(e, "b").is_zero());
}

TEST_CASE("ambiguity and one-valuedness") {
  auto one = testing::load_data("walk_onevalued.twa");
  auto [k, w] = oracle::max_ambiguity(one, 6);
  CHECK(k >= 2);
  CHECK(oracle::ambiguity(one, w) == k);
  CHECK(oracle::one_valued_upto(one, 6).holds);

  WeightedAutomaton two(SemiringTag::MaxPlus, "a", 2);
  two.set_initial(0, Weight::one());
  two.set_initial(1, Weight::one());
  two.set_final(0, Weight(0L));
  two.set_final(1, Weight(1L));
  auto f = oracle::one_valued_upto(two, 3);
  CHECK_FALSE(f.holds);
  CHECK(f.witness == Word(""));
  CHECK(oracle::unambiguous_upto(two, 3).witness == Word(""));
}

TEST_CASE("word enumeration") {
  std::vector<Word> words;
  oracle::for_each_word("ba", 2, [&](const Word& w) {
    words.push_back(w);
    return true;
  });
  CHECK(words == std::vector<Word>{"", "b", "a", "bb", "ba", "ab", "aa"});
  std::size_t seen = 0;
  oracle::for_each_word("ab", 5, [&](const Word&) { return ++seen < 3; });
  CHECK(seen == 3);
  CHECK_THROWS_AS(oracle::for_each_word("abcd", 12, [](const Word&) { return true; }), BoundExceededError);
}

TEST_CASE("equal_upto gives the first difference") {
  auto a = testing::load_data("walk_amax.twa");
  auto b = testing::load_data("walk_bmin.twa");
  CHECK(oracle::equal_upto(a, b, 6).holds);
  WeightedAutomaton c = a;
  c.set_transition(1, 1, 1, Weight(5L));
  auto f = oracle::equal_upto(c, b, 6);
  CHECK_FALSE(f.holds);
  CHECK(f.witness == Word("ab"));
}

TEST_CASE("simple circuits") {
  TropicalMatrix m(2, SemiringTag::MaxPlus);
  m.set(0, 0, Weight(-1L));
  m.set(0, 1, Weight(2L));
  m.set(1, 0, Weight(0L));
  auto circuits = oracle::simple_circuits(m);
  std::vector<Rational> means;
  for (const auto& c : circuits) means.push_back(c.mean);
  std::sort(means.begin(), means.end());
  CHECK(means == std::vector<Rational>{-1, 1});
  CHECK(oracle::simple_circuits(TropicalMatrix(3, SemiringTag::MaxPlus)).empty());

  // The complete graph on 4 vertices has 4 + 6 + 8 + 6 simple circuits.
  TropicalMatrix k4(4, SemiringTag::MaxPlus);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) k4.set(i, j, Weight(0L));
  CHECK(oracle::simple_circuits(k4).size() == 24);
}

TEST_CASE("path enumeration agrees with eval on the corpus") {
  for (const char* name : {"walk_amax.twa", "walk_bmin.twa", "walk_onevalued.twa", "max_count.twa",
                           "loop_plus1.twa", "loop_minus1.twa", "decimals.twa"}) {
    CAPTURE(name);
    auto a = testing::load_data(name);
    oracle::for_each_word(a.alphabet(), 8, [&](const Word& w) {
      CHECK(oracle::eval_bruteforce(a, w) == eval(a, w));
      return true;
    });
  }
}
