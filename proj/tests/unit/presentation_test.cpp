#include "doctest.h"

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"
#include "curvepi/presentation.hpp"
#include "support/oracles.hpp"

using namespace curvepi;

TEST_CASE("parsing normalizes equalities into relators") {
  Presentation const p = parse_presentation("<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>");
  REQUIRE(p.num_generators() == 2);
  REQUIRE(p.relators().size() == 2);
  CHECK(format_word(p.relators()[0], p.generators()) == "b a^-1 b^-4 a^-1");
}

TEST_CASE("chained equalities become consecutive relators") {
  Presentation const p = parse_presentation("<a,b,c | a^2=b^3=c^5=abc>");
  CHECK(p.relators().size() == 3);
}

TEST_CASE("commutator brackets and the identity atom") {
  Presentation const p = parse_presentation("<a,b | [a,b]=1>");
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{gen(0), gen(1), inv(0), inv(1)});
}

TEST_CASE("juxtaposed generator names split into letters") {
  Presentation const p = parse_presentation("<a,b | aba=bab>");
  CHECK(p.relators()[0].size() == 6);
}

TEST_CASE("malformed input reports a position") {
  CHECK_THROWS_AS(parse_presentation("<a,b | a^>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a | z>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a,a | a>"), Error);
  try {
    parse_presentation("<a | a^0>");
    FAIL("zero exponent accepted");
  } catch (ParseError const& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("format and parse round-trip on random presentations") {
  test::Rng rng(0x5eed02);
  for (int i = 0; i < 300; ++i) {
    std::size_t const        n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<std::string> gens;
    for (std::size_t g = 0; g < n; ++g) {
      gens.push_back(g % 2 ? "x" + std::to_string(g) : std::string(1, static_cast<char>('a' + g)));
    }
    std::vector<Word> rels;
    for (long k = rng.uniform(0, 4); k > 0; --k) {
      Word w = test::random_word(rng, n, 10);
      if (!w.empty()) {
        rels.push_back(w);
      }
    }
    Presentation const p(gens, rels);
    std::string const  text = format_presentation(p);
    INFO(text);
    CHECK(parse_presentation(text) == p);
    nlohmann::json j = p;
    CHECK(j.get<Presentation>() == p);
  }
}
