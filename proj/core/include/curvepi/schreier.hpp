#ifndef CURVEPI_SCHREIER_HPP_
#define CURVEPI_SCHREIER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "curvepi/coset_table.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/word.hpp"

namespace curvepi {

  // One representative per coset, index-aligned with the table.
  using Transversal = std::vector<Word>;

  // BFS over positive generators in declaration order: prefix-closed,
  // representative of coset 0 is empty.
  Transversal schreier_transversal(CosetTable const& t);

  struct SchreierGenerator {
    Coset    coset = 0;
    GenIndex gen   = 0;
    Word     value;  // K a (overline{K a})^-1
  };

  // Index of s_{K,a} in the full generator space.
  inline GenIndex schreier_index(Coset k, GenIndex a, std::size_t num_generators) {
    return static_cast<GenIndex>(k * num_generators + a);
  }

  // The non-trivial Schreier generators, ordered by (K, a).
  std::vector<SchreierGenerator> schreier_generators(CosetTable const& t, Transversal const& tr);

  // Reidemeister-Schreier rewriting. The result is a word over the full index
  // space K * num_generators + a with trivial generators removed. Throws
  // Error if w does not trace coset 0 back to coset 0.
  Word rewrite(CosetTable const& t, Transversal const& tr, Word const& w);

  // Presentation of the subgroup H = stabilizer of coset 0: non-trivial
  // generators s_{K,a} named "s{K}_{a}" and relators tau(K r K^-1).
  Presentation subgroup_presentation(Presentation const& p, CosetTable const& t);

}  // namespace curvepi

#endif  // CURVEPI_SCHREIER_HPP_
