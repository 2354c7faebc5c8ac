#ifndef CURVEPI_COSET_TABLE_HPP_
#define CURVEPI_COSET_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/error.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/word.hpp"

namespace curvepi {

  using Coset = std::uint32_t;
  inline constexpr Coset kNoCoset = static_cast<Coset>(-1);

  struct EnumLimits {
    std::size_t max_cosets     = 1'000'000;
    std::size_t max_deductions = 50'000'000;  // cap on coset definitions

    void validate() const;
  };

  // Action of the generators and their inverses on right cosets of a
  // subgroup. Column 2g holds g, column 2g+1 holds g^-1.
  class CosetTable {
   public:
    CosetTable() = default;
    CosetTable(std::size_t               num_generators,
               std::vector<Coset>        entries,  // row-major, size * 2 * num_generators
               std::vector<Word>         subgroup);

    // Builds a table from the images of the positive generators; inverse
    // columns are filled where a preimage exists and left as kNoCoset
    // otherwise, so validate_table can report the damage.
    static CosetTable from_images(std::vector<std::vector<Coset>> const& images,
                                  std::vector<Word>                      subgroup = {});

    std::size_t size() const noexcept {
      return size_;
    }
    std::size_t num_generators() const noexcept {
      return ngens_;
    }
    std::vector<Word> const& subgroup() const noexcept {
      return subgroup_;
    }

    Coset act(Coset c, Letter x) const noexcept {
      return entries_[c * 2 * ngens_ + x.column()];
    }
    Coset entry(Coset c, std::size_t column) const noexcept {
      return entries_[c * 2 * ngens_ + column];
    }
    // kNoCoset if the trace leaves the table.
    Coset trace(Coset c, Word const& w) const noexcept;

    std::vector<Coset> const& entries() const noexcept {
      return entries_;
    }

    friend bool operator==(CosetTable const&, CosetTable const&) = default;

   private:
    std::size_t        ngens_ = 0;
    std::size_t        size_  = 0;
    std::vector<Coset> entries_;
    std::vector<Word>  subgroup_;
  };

  struct Overflow {
    std::size_t limit   = 0;
    std::size_t live    = 0;
    std::size_t defined = 0;
    std::string reason;
  };

  using EnumerationResult = std::variant<CosetTable, Overflow>;

  // HLT coset enumeration with immediate coincidence processing. The
  // resulting table is compacted and renumbered in BFS order over the
  // positive generators, so it is deterministic in its inputs.
  EnumerationResult todd_coxeter(Presentation const&      p,
                                 std::vector<Word> const& subgroup,
                                 EnumLimits const&        limits = {});

  // Checks: "range", "bijection", "subgroup", "relator", "transitive".
  ValidationReport validate_table(Presentation const&      p,
                                  std::vector<Word> const& subgroup,
                                  CosetTable const&        t);

  using Permutation = std::vector<Coset>;
  using PermRep     = std::vector<Permutation>;

  PermRep permutation_rep(CosetTable const& t);

  // Table for a transitive permutation action, relabelled in BFS order from
  // point 0. The subgroup is the stabilizer of point 0, listed by its
  // non-trivial Schreier generators. Throws Error if the action is not
  // transitive or a generator is not a permutation.
  CosetTable from_permutation_action(PermRep const& generators);

  nlohmann::json to_json(CosetTable const& t, Presentation const& p);

}  // namespace curvepi

#endif  // CURVEPI_COSET_TABLE_HPP_
