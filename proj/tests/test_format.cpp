#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "corpus.hpp"
#include "twa/errors.hpp"
#include "twa/format.hpp"

using namespace twa;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    parse_twa(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

const char* kHeader = "twa 1\nsemiring max-plus\nalphabet a b\nstates 2\n";

}  // namespace

TEST_CASE("corpus files round trip through the serializer") {
  for (const char* name : {"walk_amax.twa", "walk_bmin.twa", "walk_product.twa", "walk_reweighted.twa",
                           "walk_onevalued.twa", "loop_plus1.twa", "loop_minus1.twa", "max_count.twa"}) {
    CAPTURE(name);
    std::string text = slurp(testing::data_path(name));
    auto parsed = parse_twa(text);
    CHECK(strip_comments(serialize(parsed)) == strip_comments(text));
    CHECK(parse_twa(serialize(parsed)) == parsed);
  }
}

TEST_CASE("decimal and fraction literals") {
  auto a = testing::load_data("decimals.twa");
  CHECK(a.tag() == SemiringTag::MinPlus);
  std::string once = serialize(a);
  CHECK(serialize(parse_weighted(once)) == once);
  CHECK(once.find('.') == std::string::npos);
}

TEST_CASE("random automata round trip") {
  std::mt19937 rng(23);
  for (int round = 0; round < 100; ++round) {
    testing::RandomShape shape;
    shape.fractions = true;
    shape.tag = round % 2 ? SemiringTag::MinPlus : SemiringTag::MaxPlus;
    shape.alphabet = round % 3 ? "ab" : "x0+";
    auto a = testing::random_automaton(rng, shape);
    std::string text = serialize(a);
    CHECK(parse_weighted(text) == a);
    CHECK(serialize(parse_weighted(text)) == text);
  }
}

TEST_CASE("canonical ordering does not depend on input order") {
  std::string shuffled = std::string(kHeader) +
                         "trans 1 0 b 2\ntrans 0 1 a 1\nfinal 1 1\ninitial 0 0\ntrans 0 1 b -1/2\n";
  std::string expected = std::string(kHeader) +
                         "initial 0 0\nfinal 1 1\ntrans 0 1 a 1\ntrans 0 1 b -1/2\ntrans 1 0 b 2\n";
  CHECK(serialize(parse_twa(shuffled)) == expected);
}

TEST_CASE("labels are written as comments") {
  WeightedAutomaton a(SemiringTag::MaxPlus, "a", 1);
  a.set_label(0, "(0,{0})");
  a.set_initial(0, Weight::one());
  std::string text = serialize(a);
  CHECK(text.find("# state 0 (0,{0})") != std::string::npos);
  CHECK(parse_weighted(text) == a);
}

TEST_CASE("pair weights") {
  std::string text =
      "twa 1\nsemiring max-plus-pair\nalphabet a\nstates 1\ninitial 0 0,0\ntrans 0 0 a 1,-1/2\n";
  auto pair = std::get<PairAutomaton>(parse_twa(text));
  CHECK(pair.transition(0, 0, 0) == PairWeight(1, Rational(-1, 2)));
  CHECK(serialize(pair) == text);
  CHECK_THROWS_AS(parse_twa("twa 1\nsemiring max-plus-pair\nalphabet a\nstates 1\ninitial 0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_weighted(text), Error);
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK(parse_error_line(std::string(kHeader) + "trans 0 5 a 1\n") == 5);
  CHECK(parse_error_line("twa 1\nalphabet a\nstates 1\ninitial 0 0\n") == 4);
  CHECK(parse_error_line(std::string(kHeader) + "trans 0 1 a 1\ntrans 0 1 a 2\n") == 6);
  CHECK(parse_error_line(std::string(kHeader) + "initial 0 0\ninitial 0 1\n") == 6);
  CHECK(parse_error_line(std::string(kHeader) + "trans 0 1 c 1\n") == 5);
  CHECK(parse_error_line(std::string(kHeader) + "trans 0 1 a x\n") == 5);
  CHECK(parse_error_line(std::string(kHeader) + "arc 0 1 a 1\n") == 5);
  CHECK(parse_error_line(std::string(kHeader) + "initial 0 0\nstates 3\n") == 6);
  CHECK(parse_error_line("semiring max-plus\n") == 1);
  CHECK(parse_error_line("twa 2\n") == 1);
  CHECK(parse_error_line("twa 1\nsemiring max-plus\nsemiring min-plus\n") == 3);
  CHECK(parse_error_line("twa 1\nsemiring boolean\n") == 2);
  CHECK(parse_error_line("twa 1\nsemiring max-plus\nalphabet a a\n") == 3);
  CHECK(parse_error_line(std::string(kHeader) + "# only a comment\n") == -1);
}

TEST_CASE("missing semiring header") {
  try {
    parse_twa("twa 1\nalphabet a\nstates 1\ntrans 0 0 a 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("semiring") != std::string::npos);
  }
}

TEST_CASE("files") {
  CHECK_THROWS_AS(load_twa(testing::data_path("no_such_file.twa")), Error);
  auto path = std::filesystem::temp_directory_path() / "twa_format_test.twa";
  auto a = testing::load_data("walk_amax.twa");
  save_twa(path.string(), serialize(a));
  CHECK(load_weighted(path.string()) == a);
  std::filesystem::remove(path);
}
