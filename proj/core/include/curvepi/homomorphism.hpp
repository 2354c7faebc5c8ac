#ifndef CURVEPI_HOMOMORPHISM_HPP_
#define CURVEPI_HOMOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/coset_table.hpp"
#include "curvepi/derivation.hpp"
#include "curvepi/presentation.hpp"

namespace curvepi {

  // Generator substitution source -> target; one image word per source
  // generator, over the target generators.
  class SubstitutionMap {
   public:
    SubstitutionMap(Presentation source, Presentation target, std::vector<Word> images);

    // Images given as DSL words keyed by source generator name.
    static SubstitutionMap from_strings(
        Presentation                                             source,
        Presentation                                             target,
        std::vector<std::pair<std::string, std::string>> const& images);

    static SubstitutionMap identity(Presentation const& p);

    Presentation const& source() const noexcept {
      return source_;
    }
    Presentation const& target() const noexcept {
      return target_;
    }
    std::vector<Word> const& images() const noexcept {
      return images_;
    }

   private:
    Presentation      source_;
    Presentation      target_;
    std::vector<Word> images_;
  };

  Word substitute(SubstitutionMap const& m, Word const& w);
  // Composition: first `first`, then `second`.
  SubstitutionMap compose(SubstitutionMap const& first, SubstitutionMap const& second);

  enum class Verdict { verified, refuted, inconclusive };
  std::string to_string(Verdict v);

  struct RefutationWitness {
    std::string method;  // "abelianization" or "finite-quotient"
    std::size_t relator = 0;
    Word        image;
    std::size_t quotient_order = 0;
    std::string detail;
  };

  struct HomomorphismCheck {
    Verdict                                verdict = Verdict::inconclusive;
    std::vector<std::optional<ProofTrace>> traces;  // per source relator
    std::optional<RefutationWitness>       witness;
    std::string                            detail;
  };

  // Default coset budget for the finite-quotient refuter.
  inline constexpr std::size_t kRefutationCosets = 5000;

  // Verified: every source relator maps into the normal closure of the
  // target relators (replayable traces attached). Refuted: some relator image
  // is non-trivial in the target's abelianization or in a finite quotient of
  // the target. Inconclusive otherwise.
  HomomorphismCheck check_homomorphism(SubstitutionMap const&  m,
                                       DerivationBudget const& budget = {},
                                       std::size_t refutation_cosets = kRefutationCosets);

  struct IsomorphismCheck {
    Verdict           verdict = Verdict::inconclusive;
    HomomorphismCheck forward;
    HomomorphismCheck backward;
    // Traces for g^-1 * back(forth(g)) over every source generator and
    // h^-1 * forth(back(h)) over every target generator.
    std::vector<std::optional<ProofTrace>> compositions;
    std::string                            detail;
  };

  // Two-sided check: both maps are homomorphisms and both composites fix the
  // generators modulo relators.
  IsomorphismCheck check_isomorphism(SubstitutionMap const&  forward,
                                     SubstitutionMap const&  backward,
                                     DerivationBudget const& budget = {});

  // Verified iff every target generator equals the image of its given
  // preimage word modulo the target relators (so the map is onto).
  HomomorphismCheck check_preimages(SubstitutionMap const&   m,
                                    std::vector<Word> const& preimages,
                                    DerivationBudget const&  budget = {});

  nlohmann::json to_json(HomomorphismCheck const& c, Presentation const& target);

}  // namespace curvepi

#endif  // CURVEPI_HOMOMORPHISM_HPP_
