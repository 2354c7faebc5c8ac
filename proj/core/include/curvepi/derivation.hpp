#ifndef CURVEPI_DERIVATION_HPP_
#define CURVEPI_DERIVATION_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/presentation.hpp"
#include "curvepi/word.hpp"

namespace curvepi {

  struct DerivationBudget {
    std::size_t max_insertions  = 32;
    std::size_t max_word_length = 64;
    std::size_t max_states      = 100'000;

    // Throws Error unless every field is positive.
    void validate() const;
  };

  // One elementary move on a cyclic word: rotate the current word, insert a
  // rotation of a relator (or of its inverse) at `position`, then freely and
  // cyclically reduce and rotate to the canonical representative.
  struct ProofStep {
    std::size_t rotate_by        = 0;
    std::size_t relator          = 0;
    bool        inverted         = false;
    std::size_t relator_rotation = 0;
    std::size_t position         = 0;
    Word        result;
  };

  // Replays from `start` to the empty word.
  struct ProofTrace {
    Word                   start;
    std::vector<ProofStep> steps;
  };

  struct Inconclusive {
    std::string reason;
    std::size_t states = 0;
  };

  using DerivationResult = std::variant<ProofTrace, Inconclusive>;

  // Bounded search for a proof that w lies in the normal closure of the
  // relators of p. States are canonical cyclic words expanded shortest first;
  // only insertions that cancel against the current word are tried.
  DerivationResult derive_relator(Presentation const&     p,
                                  Word const&             w,
                                  DerivationBudget const& budget = {});

  // Checks every step of the trace against p; true iff the trace ends at the
  // empty word.
  bool replay_trace(Presentation const& p, ProofTrace const& trace);

  nlohmann::json trace_to_json(ProofTrace const& trace, Presentation const& p);

}  // namespace curvepi

#endif  // CURVEPI_DERIVATION_HPP_
