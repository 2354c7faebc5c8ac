#include "doctest.h"

#include "curvepi/derivation.hpp"
#include "curvepi/homomorphism.hpp"
#include "curvepi/presentation.hpp"
#include "support/oracles.hpp"

using namespace curvepi;

namespace {
  ProofTrace derive(Presentation const& p, char const* word) {
    auto const r = derive_relator(p, parse_word(word, p.generators()));
    REQUIRE(std::holds_alternative<ProofTrace>(r));
    return std::get<ProofTrace>(r);
  }
}  // namespace

TEST_CASE("conjugates and products of relators are derived") {
  Presentation const p = parse_presentation("<a,b | a^2, b^3>");
  for (char const* w : {"a^2", "b a^2 b^-1", "a^2 b^3", "b^-3", "a b^3 a^-1 a^-2"}) {
    INFO(w);
    ProofTrace const t = derive(p, w);
    CHECK(replay_trace(p, t));
    CHECK(test::independent_replay(p.relators(), t));
  }
}

TEST_CASE("the identity needs no steps") {
  Presentation const p = parse_presentation("<a | a^2>");
  ProofTrace const   t = derive(p, "a a^-1");
  CHECK(t.steps.empty());
  CHECK(replay_trace(p, t));
}

TEST_CASE("tampered traces are rejected") {
  Presentation const p = parse_presentation("<a,b | a^2, b^3>");
  ProofTrace         t = derive(p, "a^2 b^3");
  REQUIRE(!t.steps.empty());
  ProofTrace wrong_relator = t;
  wrong_relator.steps[0].relator = 7;
  CHECK_FALSE(replay_trace(p, wrong_relator));
  CHECK_FALSE(test::independent_replay(p.relators(), wrong_relator));
  ProofTrace wrong_start = t;
  wrong_start.start      = parse_word("a^2 b^2", p.generators());
  CHECK_FALSE(replay_trace(p, wrong_start));
  CHECK_FALSE(test::independent_replay(p.relators(), wrong_start));
}

TEST_CASE("non-relators stay inconclusive") {
  Presentation const p = parse_presentation("<a,b | a^2, b^3>");
  auto const r = derive_relator(p, parse_word("a b", p.generators()), DerivationBudget{6, 16, 2000});
  CHECK(std::holds_alternative<Inconclusive>(r));
  CHECK_THROWS(derive_relator(p, Word{gen(0)}, DerivationBudget{0, 0, 0}));
}

TEST_CASE("homomorphism checks") {
  Presentation const braid = parse_presentation("<a,b | aba=bab>");
  Presentation const s3    = parse_presentation("<x,y | x^2, y^2, xyx=yxy>");
  auto const onto = SubstitutionMap::from_strings(braid, s3, {{"a", "x"}, {"b", "y"}});
  auto const ok   = check_homomorphism(onto);
  CHECK(ok.verdict == Verdict::verified);
  REQUIRE(ok.traces.size() == 1);
  REQUIRE(ok.traces[0].has_value());
  CHECK(test::independent_replay(s3.relators(), *ok.traces[0]));

  Presentation const z3  = parse_presentation("<t | t^3>");
  auto const         bad = SubstitutionMap::from_strings(s3, z3, {{"x", "t"}, {"y", "t"}});
  auto const         no  = check_homomorphism(bad);
  CHECK(no.verdict == Verdict::refuted);
  CHECK(no.witness.has_value());
}

TEST_CASE("substitution and composition") {
  Presentation const f2 = parse_presentation("<a,b | >");
  auto const swap = SubstitutionMap::from_strings(f2, f2, {{"a", "b"}, {"b", "a"}});
  auto const twice = compose(swap, swap);
  Word const w     = parse_word("a b^2 a^-1", f2.generators());
  CHECK(substitute(twice, w) == w);
  CHECK(substitute(swap, w) == parse_word("b a^2 b^-1", f2.generators()));
  CHECK(substitute(SubstitutionMap::identity(f2), w) == w);
}

TEST_CASE("isomorphism of two braid presentations") {
  Presentation const p = parse_presentation("<a,b | aba=bab>");
  Presentation const q = parse_presentation("<x,y | x^2=y^3>");
  auto const back = SubstitutionMap::from_strings(q, p, {{"x", "aba"}, {"y", "ab"}});
  auto const forward = SubstitutionMap::from_strings(p, q, {{"a", "y^-1 x"}, {"b", "x^-1 y^2"}});
  auto const iso = check_isomorphism(forward, back);
  CHECK(iso.verdict == Verdict::verified);
}
