#include "doctest.h"

#include <algorithm>
#include <map>

#include "curvepi/abelian.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/homomorphism.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/schreier.hpp"
#include "curvepi/simplify.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace curvepi;

TEST_CASE("transversal of Z/3") {
  CosetTable const  t  = std::get<CosetTable>(todd_coxeter(parse_presentation("<a | a^3>"), {}));
  Transversal const tr = schreier_transversal(t);
  REQUIRE(tr.size() == 3);
  CHECK(tr[0].empty());
  CHECK(tr[1] == Word{gen(0)});
  CHECK(tr[2] == Word::generator(0, 2));
}

TEST_CASE("transversals are prefix closed and trace their cosets") {
  Presentation const p  = parse_presentation("<a,b | a^2, b^3, (ab)^5>");
  CosetTable const   t  = std::get<CosetTable>(todd_coxeter(p, {Word{gen(1)}}));
  Transversal const  tr = schreier_transversal(t);
  REQUIRE(tr.size() == t.size());
  for (Coset c = 0; c < t.size(); ++c) {
    CHECK(t.trace(0, tr[c]) == c);
    if (!tr[c].empty()) {
      Word const prefix = tr[c].subword(0, tr[c].size() - 1);
      CHECK(std::find(tr.begin(), tr.end(), prefix) != tr.end());
    }
  }
}

TEST_CASE("Schreier generators lie in the subgroup") {
  Presentation const p  = parse_presentation("<a,b | a^2, b^3, (ab)^5>");
  CosetTable const   t  = std::get<CosetTable>(todd_coxeter(p, {Word{gen(0)}}));
  Transversal const  tr = schreier_transversal(t);
  auto const         gens = schreier_generators(t, tr);
  // Free rank of an index-m subgroup of F_n.
  CHECK(gens.size() == t.size() * (p.num_generators() - 1) + 1);
  for (auto const& s : gens) {
    CHECK(t.trace(0, s.value) == 0);
  }
}

TEST_CASE("rewriting then substituting recovers the word") {
  Presentation const p  = parse_presentation("<a,b | a^2, b^3, (ab)^5>");
  CosetTable const   t  = std::get<CosetTable>(todd_coxeter(p, {Word{gen(0)}}));
  Transversal const  tr = schreier_transversal(t);
  std::map<GenIndex, Word> value;
  for (auto const& s : schreier_generators(t, tr)) {
    value[schreier_index(s.coset, s.gen, t.num_generators())] = s.value;
  }
  test::Rng rng(0x5eed05);
  int                checked = 0;
  while (checked < 100) {
    Word const w = test::random_word(rng, 2, 14);
    if (t.trace(0, w) != 0) {
      continue;
    }
    ++checked;
    std::vector<Letter> back;
    for (Letter l : rewrite(t, tr, w)) {
      REQUIRE(value.contains(l.gen));
      Word const v = l.sign > 0 ? value[l.gen] : value[l.gen].inverse();
      back.insert(back.end(), v.begin(), v.end());
    }
    CHECK(free_reduce(back) == w);
  }
}

TEST_CASE("index-2 subgroup of Z/6 is Z/3") {
  Presentation const p   = parse_presentation("<a | a^6>");
  CosetTable const   t   = std::get<CosetTable>(todd_coxeter(p, {Word::generator(0, 2)}));
  Presentation const sub = subgroup_presentation(p, t);
  CHECK(abelian_invariants(sub) == InvariantFactors(0, {3}));
  CHECK(abelian_invariants(simplify(sub)) == InvariantFactors(0, {3}));
}

TEST_CASE("Nielsen-Schreier rank for subgroups of free groups") {
  auto const r = test::nielsen_schreier_rank(0x5eed06);
  INFO(test::describe(r));
  CHECK(r.ok());
}

TEST_CASE("simplification examples") {
  CHECK(simplify(parse_presentation("<a,b | b>")) == parse_presentation("<a | >"));
  CHECK(simplify(parse_presentation("<a,b | ab, ab>")) == parse_presentation("<a | >"));
  Presentation const s = simplify(parse_presentation("<a,b,c | c=ab, a^2, b^3, c^5>"));
  CHECK(s.num_generators() == 2);
}

TEST_CASE("simplification preserves abelianization and finite order") {
  test::Rng rng(0x5eed07);
  for (int i = 0; i < 60; ++i) {
    std::size_t const n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<Word> rels;
    for (std::size_t g = 0; g < n; ++g) {
      rels.push_back(Word::generator(static_cast<GenIndex>(g), rng.uniform(2, 4)));
    }
    for (long k = rng.uniform(1, 3); k > 0; --k) {
      Word w = test::random_word(rng, n, 6);
      if (!w.empty()) {
        rels.push_back(w);
      }
    }
    std::vector<std::string> names{"a", "b", "c"};
    names.resize(n);
    Presentation const p(names, rels);
    Presentation const s = simplify(p);
    INFO(format_presentation(p), " -> ", format_presentation(s));
    CHECK(abelian_invariants(s) == abelian_invariants(p));
    auto const tp = todd_coxeter(p, {}, EnumLimits{2000, 100'000});
    auto const ts = todd_coxeter(s, {}, EnumLimits{2000, 100'000});
    if (std::holds_alternative<CosetTable>(tp) && std::holds_alternative<CosetTable>(ts)) {
      CHECK(std::get<CosetTable>(tp).size() == std::get<CosetTable>(ts).size());
    }
  }
}
