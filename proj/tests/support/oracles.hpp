#ifndef CURVEPI_TESTS_ORACLES_HPP_
#define CURVEPI_TESTS_ORACLES_HPP_

// Reference implementations used to cross-check the library. They share no
// code with core/ beyond the plain data types.

#include <cstdint>
#include <random>
#include <vector>

#include "curvepi/abelian.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/derivation.hpp"
#include "curvepi/word.hpp"

namespace curvepi::test {

  using BigMatrix = std::vector<std::vector<BigInt>>;

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi) {
      return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }
    bool coin() {
      return uniform(0, 1) == 1;
    }
    std::mt19937_64& engine() {
      return engine_;
    }

   private:
    std::mt19937_64 engine_;
  };

  // Letters as (generator, +-1) pairs, no reduction.
  std::vector<Letter> random_letters(Rng& rng, std::size_t num_generators, std::size_t max_length);
  Word                random_word(Rng& rng, std::size_t num_generators, std::size_t max_length);
  BigMatrix           random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
  Permutation         random_permutation(Rng& rng, std::size_t n);

  // Stack-based free reduction.
  std::vector<Letter> naive_free_reduce(std::vector<Letter> const& letters);

  // Fraction-free Gaussian elimination; exact for integer matrices.
  BigInt bareiss_determinant(BigMatrix m);

  // gcd of all k x k minors, 0 if they all vanish.
  BigInt minor_gcd(BigMatrix const& m, std::size_t k);

  BigMatrix to_big(IntMatrix const& m);
  BigMatrix multiply(BigMatrix const& a, BigMatrix const& b);

  // Order of the permutation group generated by gens, by orbit closure.
  std::size_t permutation_group_order(std::vector<Permutation> const& gens, std::size_t limit = 100'000);

  // Checks a proof trace step by step: each result must be a rotation of the
  // free and cyclic reduction of the previous word with the stated relator
  // rotation inserted. Ends at the empty word.
  bool independent_replay(std::vector<Word> const& relators, ProofTrace const& trace);

}  // namespace curvepi::test

#endif  // CURVEPI_TESTS_ORACLES_HPP_
