#ifndef CURVEPI_PROJECTIVE_GROUP_HPP_
#define CURVEPI_PROJECTIVE_GROUP_HPP_

#include <array>
#include <optional>
#include <vector>

#include "curvepi/coset_table.hpp"

namespace curvepi {

  // PSL(2, p) for a small prime p: 2x2 determinant-one matrices modulo +-1.
  class ProjectiveLinearGroup {
   public:
    using Matrix = std::array<unsigned, 4>;  // row-major a b c d

    explicit ProjectiveLinearGroup(unsigned p);

    unsigned prime() const noexcept {
      return p_;
    }
    std::size_t order() const noexcept {
      return elements_.size();
    }
    Matrix const& element(std::size_t i) const {
      return elements_.at(i);
    }
    std::size_t identity() const noexcept {
      return identity_;
    }
    std::size_t multiply(std::size_t x, std::size_t y) const;
    std::size_t element_order(std::size_t x) const;
    // Size of the subgroup generated by the given elements.
    std::size_t generated_order(std::vector<std::size_t> const& gens) const;
    // Right regular action: point i goes to i * g.
    Permutation right_action(std::size_t g) const;

   private:
    Matrix      normalize(Matrix m) const;
    std::size_t index_of(Matrix const& m) const;

    unsigned            p_;
    std::vector<Matrix> elements_;  // sorted
    std::size_t         identity_ = 0;
  };

  struct GeneratingPair {
    std::size_t x = 0;
    std::size_t y = 0;
  };

  // Lexicographically first (x, y) with |x| = 2, |y| = 3, |xy| = 7 that
  // generates the whole group.
  std::optional<GeneratingPair> find_237_pair(ProjectiveLinearGroup const& g);

}  // namespace curvepi

#endif  // CURVEPI_PROJECTIVE_GROUP_HPP_
