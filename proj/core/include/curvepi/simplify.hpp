#ifndef CURVEPI_SIMPLIFY_HPP_
#define CURVEPI_SIMPLIFY_HPP_

#include <vector>

#include "curvepi/derivation.hpp"
#include "curvepi/presentation.hpp"

namespace curvepi {

  // Cyclically reduces, drops empty relators and removes duplicates up to
  // rotation and inversion, keeping first occurrences in order.
  std::vector<Word> normalize_relators(std::vector<Word> const& relators);

  // Tietze simplification. Repeatedly eliminates a generator that occurs
  // exactly once in some relator (shortest such relator first, then highest
  // generator index, so earlier generators survive), and otherwise shortens
  // a relator by replacing a subword longer than half of another relator
  // with the inverse of the rest. Total relator length never exceeds 4x the input total; the number
  // of moves is capped by budget.max_states.
  Presentation simplify(Presentation const& p, DerivationBudget const& budget = {});

}  // namespace curvepi

#endif  // CURVEPI_SIMPLIFY_HPP_
