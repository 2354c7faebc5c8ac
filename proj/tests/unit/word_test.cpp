#include "doctest.h"

#include "curvepi/word.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace curvepi;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  std::vector<Letter> raw{gen(0), gen(1), inv(1), inv(0), gen(2)};
  CHECK(free_reduce(raw) == Word{gen(2)});
  CHECK(free_reduce(std::vector<Letter>{gen(0), inv(0)}).empty());
}

TEST_CASE("powers, inverses and subwords") {
  Word const ab{gen(0), gen(1)};
  CHECK(ab.pow(3).size() == 6);
  CHECK(ab.pow(-1) == ab.inverse());
  CHECK(ab.pow(0).empty());
  CHECK(Word::generator(1, -3) == Word{inv(1), inv(1), inv(1)});
  CHECK(ab.pow(2).subword(1, 2) == Word{gen(1), gen(0)});
  CHECK(ab.pow(2).exponent_sum(0) == 2);
  CHECK(Word{gen(0), inv(2)}.generator_bound() == 3);
}

TEST_CASE("commutator and alternating words") {
  Word const a{gen(0)};
  Word const b{gen(1)};
  CHECK(commutator(a, b) == Word{gen(0), gen(1), inv(0), inv(1)});
  CHECK(commutator(a, a).empty());
  CHECK(alternating(a, b, 3) == Word{gen(0), gen(1), gen(0)});
  CHECK(alternating(b, a, 2) == Word{gen(1), gen(0)});
}

TEST_CASE("cyclic canonical form picks the least rotation") {
  Word const w{gen(1), gen(0), gen(0)};
  CHECK(w.cyclic_canonical() == Word{gen(0), gen(0), gen(1)});
  Word const conj{gen(2), gen(1), gen(0), inv(2)};
  CHECK(conj.cyclically_reduced() == Word{gen(1), gen(0)});
  CHECK(conj.cyclic_canonical() == Word{gen(0), gen(1)});
}

TEST_CASE("relator canonical form is shared by a word and its inverse") {
  Word const w{gen(0), gen(0), inv(1)};
  CHECK(w.relator_canonical() == w.inverse().relator_canonical());
  CHECK(w.rotated(1).relator_canonical() == w.relator_canonical());
}

TEST_CASE("shortlex orders by length first") {
  CHECK(shortlex_less(Word{gen(1)}, Word{gen(0), gen(0)}));
  CHECK(shortlex_less(Word{gen(0)}, Word{inv(0)}));
  CHECK_FALSE(shortlex_less(Word{gen(0)}, Word{gen(0)}));
}

TEST_CASE("free reduction laws hold on random words") {
  auto const r = test::free_reduction_laws(0x5eed01, 1000);
  INFO(test::describe(r));
  CHECK(r.ok());
}
